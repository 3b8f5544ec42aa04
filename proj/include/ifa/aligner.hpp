// Types shared by the velocity- and position-integration aligners.
#pragma once

#include <cstdint>

#include "ifa/attitude.hpp"
#include "ifa/earth.hpp"
#include "ifa/increments.hpp"
#include "ifa/quest.hpp"

namespace ifa {

/// Aided ground velocity and position at one update-interval endpoint.
struct AidFix {
    double t = 0.0;
    NavVelocity v = NavVelocity::Zero();
    GeodeticPosition p;
};

struct AlignerOptions {
    /// Extract the attitude on every k-th update only.
    int solve_every = 1;
};

struct AlignmentEstimate {
    std::int64_t update = 0;       // M
    double elapsed = 0.0;          // M * T
    QuaternionSolution solution;   // q encodes C_n^b(0)
    Dcm body_to_nav_initial;       // C_b^n(0)
    Dcm body_to_nav_now;           // C_b^n(t_M)
};

namespace detail {

/// Navigation-side quantities held constant over one interval, evaluated at
/// its lower endpoint.
struct IntervalRates {
    Vec3 earth_rate;  // w_ie^n
    Vec3 nav_rate;    // w_in^n
    Vec3 gravity;     // g^n
};

IntervalRates interval_rates(const AidFix& lower);

/// Integral over the interval of (I + (t - t_k) w_in x) applied to a
/// linearly varying vector a -> b:
/// (T/2 I + T^2/6 W) a + (T/2 I + T^2/3 W) b.
Vec3 linear_segment_integral(double interval, const Vec3& nav_rate, const Vec3& a, const Vec3& b);

/// Double-integral counterpart: (T^2/3 I + T^3/12 W) a + (T^2/6 I + T^3/12 W) b.
Vec3 linear_segment_double_integral(double interval, const Vec3& nav_rate, const Vec3& a,
                                    const Vec3& b);

/// Validates fixes and increments for one update; throws InvalidArgument.
void check_update_inputs(double interval, const ImuInterval& imu, const AidFix& prev,
                         const AidFix& next);

AlignmentEstimate make_estimate(std::int64_t update, double interval, const Kmatrix& k,
                                const Dcm& nav_chain, const Dcm& body_chain);

/// Chain product with drift repair.
Dcm advance_chain(const Dcm& chain, const RotVec& step);

}  // namespace detail

}  // namespace ifa
