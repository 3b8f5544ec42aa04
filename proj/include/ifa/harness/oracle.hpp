// Brute-force reference for the alignment integrals, evaluated on the
// continuous truth trajectory.
//
// The frame chains come in closed form from the earth rotation angle and the
// geodetic positions at 0 and t:
//
//   C_{n(t)}^{n(0)} = C_e^n(p(0)) Rz(W t) C_n^e(p(t))
//   C_{b(t)}^{b(0)} = C_n^b(0) C_{n(t)}^{n(0)} C_b^n(t)
//
// and the single/double integrals are propagated with classical RK4 on a
// uniform substep grid.
#pragma once

#include <span>
#include <vector>

#include "ifa/trajectory.hpp"

namespace ifa {

struct OracleSample {
    double t = 0.0;
    Dcm nav_chain = Dcm::Identity();   // C_{n(t)}^{n(0)}
    Dcm body_chain = Dcm::Identity();  // C_{b(t)}^{b(0)}
    Vec3 alpha_v = Vec3::Zero();
    Vec3 beta_v = Vec3::Zero();
    Vec3 alpha_p = Vec3::Zero();
    Vec3 beta_p = Vec3::Zero();
};

/// Reference quantities at each requested time (ascending, within the
/// trajectory). Each gap between consecutive times is split into equal
/// substeps no longer than substep.
std::vector<OracleSample> oracle_integrate(const Trajectory& traj, std::span<const double> times,
                                           double substep);

struct OracleConvergence {
    std::vector<OracleSample> samples;  // at substep / 2
    /// max over times and outputs of |Q(h/2) - Q(h)| / max(1, |Q(h/2)|)
    double step_change = 0.0;
    /// log2 of |Q(h) - Q(h/2)| / |Q(h/2) - Q(h/4)| for the largest output.
    double observed_order = 0.0;
};

/// Runs the oracle at substep, substep/2 and substep/4.
OracleConvergence oracle_with_convergence(const Trajectory& traj, std::span<const double> times,
                                          double substep);

}  // namespace ifa
