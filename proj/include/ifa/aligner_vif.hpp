// Recursive in-flight alignment from the velocity integration formula
//
//   C_b^n(0) alpha_v(t) = beta_v(t)
//
// with alpha_v the body-frame integral of specific force and beta_v built
// from aided velocity, earth rate and gravity.
#pragma once

#include <cstdint>
#include <optional>

#include "ifa/aligner.hpp"

namespace ifa {

struct VifState {
    std::int64_t updates = 0;                  // M
    double interval = 0.0;                     // T (s)
    Dcm nav_chain = Dcm::Identity();           // C_{n(t_M)}^{n(0)}
    Dcm body_chain = Dcm::Identity();          // C_{b(t_M)}^{b(0)}
    Vec3 alpha_v = Vec3::Zero();               // m/s
    Vec3 beta_prime_v = Vec3::Zero();          // m/s, summation part of beta_v
    Vec3 beta_v = Vec3::Zero();                // m/s, latest beta_v
    NavVelocity v0 = NavVelocity::Zero();
    GeodeticPosition p0;
    Kmatrix k;
};

class VifAligner {
public:
    /// Zeroed accumulators and identity chains. Throws InvalidArgument if interval <= 0.
    VifAligner(const NavVelocity& v0, const GeodeticPosition& p0, double interval,
               AlignerOptions options = {});
    explicit VifAligner(VifState state, AlignerOptions options = {});

    /// One update over [prev.t, next.t]. Returns the attitude estimate when
    /// this update is a solve step (every options.solve_every updates).
    std::optional<AlignmentEstimate> update(const ImuInterval& imu, const AidFix& prev,
                                            const AidFix& next);

    /// Estimate from the current accumulators regardless of decimation.
    AlignmentEstimate estimate() const;

    const VifState& state() const { return state_; }
    const AlignerOptions& options() const { return options_; }

private:
    VifState state_;
    AlignerOptions options_;
};

}  // namespace ifa
