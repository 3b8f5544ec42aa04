// Recursive in-flight alignment from the position integration formula
//
//   C_b^n(0) alpha_p(t) = beta_p(t)
//
// where both sides are double integrals. The nested sums are carried as
// running prefix sums so each update costs O(1).
#pragma once

#include <cstdint>
#include <optional>

#include "ifa/aligner.hpp"

namespace ifa {

struct PifState {
    std::int64_t updates = 0;
    double interval = 0.0;
    Dcm nav_chain = Dcm::Identity();
    Dcm body_chain = Dcm::Identity();
    Vec3 alpha_p = Vec3::Zero();       // m
    Vec3 body_prefix = Vec3::Zero();   // sum_m C_{b(t_m)}^{b(0)} * sculling_m (m/s)
    Vec3 u_r = Vec3::Zero();           // single integral of C_{n(t)}^{n(0)} v^n (m)
    Vec3 u_v = Vec3::Zero();           // double integral of the earth-rate term (m)
    Vec3 u_g = Vec3::Zero();           // double integral of gravity (m)
    Vec3 nav_prefix_v = Vec3::Zero();  // single integral feeding u_v (m/s)
    Vec3 nav_prefix_g = Vec3::Zero();  // single integral feeding u_g (m/s)
    Vec3 r_n = Vec3::Zero();           // integral of v^n (m), zero at start
    Vec3 beta_p = Vec3::Zero();        // m, latest beta_p
    NavVelocity v0 = NavVelocity::Zero();
    GeodeticPosition p0;
    Kmatrix k;
};

class PifAligner {
public:
    PifAligner(const NavVelocity& v0, const GeodeticPosition& p0, double interval,
               AlignerOptions options = {});
    explicit PifAligner(PifState state, AlignerOptions options = {});

    std::optional<AlignmentEstimate> update(const ImuInterval& imu, const AidFix& prev,
                                            const AidFix& next);
    AlignmentEstimate estimate() const;

    const PifState& state() const { return state_; }
    const AlignerOptions& options() const { return options_; }

private:
    PifState state_;
    AlignerOptions options_;
};

}  // namespace ifa
