// Two-sample closed forms for the per-interval integrals driven by IMU
// increments.
#pragma once

#include "ifa/attitude.hpp"

namespace ifa {

/// Gyro/accelerometer increments over one update interval [t_k, t_k + T],
/// split into two equal halves.
struct ImuInterval {
    Vec3 dtheta1 = Vec3::Zero();  // rad, first half
    Vec3 dtheta2 = Vec3::Zero();  // rad, second half
    Vec3 dv1 = Vec3::Zero();      // m/s, first half
    Vec3 dv2 = Vec3::Zero();      // m/s, second half

    bool finite() const;
    /// Finite and ||dtheta1 + dtheta2|| < 0.1 rad.
    bool plausible() const;
};

/// Integral over the interval of (I + (integral of w_ib) x) f^b dt.
Vec3 sculling_increment(const ImuInterval& s);

/// Double integral over the interval of C_{b(sigma)}^{b(t_k)} f^b, for interval length T.
Vec3 double_integral_increment(const ImuInterval& s, double interval);

/// Body rotation vector over the interval with the two-sample coning term.
RotVec body_rotvec(const ImuInterval& s);

}  // namespace ifa
