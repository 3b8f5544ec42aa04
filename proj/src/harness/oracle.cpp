#include "ifa/harness/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "ifa/errors.hpp"

namespace ifa {

namespace {

struct Integrand {
    Dcm nav_chain;
    Dcm body_chain;
    Vec3 v;
    Vec3 accel;    // C_{b(t)}^{b(0)} f^b
    Vec3 coriolis; // C_{n(t)}^{n(0)} (w_ie x v)
    Vec3 gravity;  // C_{n(t)}^{n(0)} g
    Vec3 vel;      // C_{n(t)}^{n(0)} v
};

class Evaluator {
public:
    explicit Evaluator(const Trajectory& traj)
        : traj_(traj),
          ecef_to_nav0_(nav_to_ecef(traj.position(0.0)).transpose()),
          nav_to_body0_(traj.attitude(0.0).transpose())
    {
    }

    Integrand operator()(double t) const
    {
        const TruthSample s = traj_.sample(t);
        const double a = wgs84::kRotationRate * t;
        Mat3 rz;
        rz << std::cos(a), -std::sin(a), 0.0, std::sin(a), std::cos(a), 0.0, 0.0, 0.0, 1.0;
        Integrand f;
        f.nav_chain = ecef_to_nav0_ * rz * nav_to_ecef(s.p);
        f.body_chain = nav_to_body0_ * f.nav_chain * s.body_to_nav;
        f.v = s.v;
        f.accel = f.body_chain * s.specific_force;
        f.coriolis = f.nav_chain * earth_rate_n(s.p.lat).cross(s.v);
        f.gravity = f.nav_chain * gravity_n(s.p);
        f.vel = f.nav_chain * s.v;
        return f;
    }

private:
    const Trajectory& traj_;
    Mat3 ecef_to_nav0_;
    Dcm nav_to_body0_;
};

struct Accumulator {
    Vec3 single = Vec3::Zero();
    Vec3 dbl = Vec3::Zero();

    // One RK4 step of I' = F, D' = I.
    void step(double h, const Vec3& f0, const Vec3& fm, const Vec3& f1)
    {
        dbl += h * single + h * h / 6.0 * (f0 + 2.0 * fm);
        single += h / 6.0 * (f0 + 4.0 * fm + f1);
    }
};

double max_abs(const Vec3& v) { return v.cwiseAbs().maxCoeff(); }

double max_change(const OracleSample& a, const OracleSample& b, bool relative)
{
    auto rel = [&](const auto& x, const auto& y) {
        const double scale = relative ? std::max(1.0, y.cwiseAbs().maxCoeff()) : 1.0;
        return (x - y).cwiseAbs().maxCoeff() / scale;
    };
    return std::max({rel(a.alpha_v, b.alpha_v), rel(a.beta_v, b.beta_v), rel(a.alpha_p, b.alpha_p),
                     rel(a.beta_p, b.beta_p), rel(a.nav_chain, b.nav_chain),
                     rel(a.body_chain, b.body_chain)});
}

}  // namespace

std::vector<OracleSample> oracle_integrate(const Trajectory& traj, std::span<const double> times,
                                           double substep)
{
    if (!(substep > 0.0)) {
        throw InvalidArgument("oracle substep must be positive");
    }
    const Evaluator eval(traj);
    Integrand f0 = eval(0.0);
    const Vec3 v0 = f0.v;
    Accumulator a, nv, ng, r;

    std::vector<OracleSample> out;
    double t = 0.0;
    for (double target : times) {
        if (target < t || target > traj.duration()) {
            throw InvalidArgument("oracle times must be ascending and inside the trajectory");
        }
        const auto n = static_cast<long>(std::ceil((target - t) / substep - 1e-9));
        const double t_start = t;
        const double h = n > 0 ? (target - t_start) / static_cast<double>(n) : 0.0;
        for (long i = 0; i < n; ++i) {
            const double ta = t_start + static_cast<double>(i) * h;
            const Integrand fm = eval(ta + 0.5 * h);
            const Integrand f1 = eval(i + 1 == n ? target : ta + h);
            a.step(h, f0.accel, fm.accel, f1.accel);
            nv.step(h, f0.coriolis, fm.coriolis, f1.coriolis);
            ng.step(h, f0.gravity, fm.gravity, f1.gravity);
            r.step(h, f0.vel, fm.vel, f1.vel);
            f0 = f1;
        }
        t = target;

        OracleSample s;
        s.t = t;
        s.nav_chain = f0.nav_chain;
        s.body_chain = f0.body_chain;
        s.alpha_v = a.single;
        s.alpha_p = a.dbl;
        s.beta_v = f0.vel - v0 + nv.single - ng.single;
        s.beta_p = r.single - t * v0 + nv.dbl - ng.dbl;
        out.push_back(s);
    }
    return out;
}

OracleConvergence oracle_with_convergence(const Trajectory& traj, std::span<const double> times,
                                          double substep)
{
    const auto coarse = oracle_integrate(traj, times, substep);
    const auto mid = oracle_integrate(traj, times, 0.5 * substep);
    const auto fine = oracle_integrate(traj, times, 0.25 * substep);

    OracleConvergence c;
    c.samples = mid;
    double d1 = 0.0;
    double d2 = 0.0;
    for (std::size_t i = 0; i < mid.size(); ++i) {
        c.step_change = std::max(c.step_change, max_change(coarse[i], mid[i], true));
        d1 = std::max(d1, max_abs(coarse[i].beta_p - mid[i].beta_p) +
                              max_abs(coarse[i].alpha_p - mid[i].alpha_p));
        d2 = std::max(d2, max_abs(mid[i].beta_p - fine[i].beta_p) +
                              max_abs(mid[i].alpha_p - fine[i].alpha_p));
    }
    c.observed_order = (d1 > 0.0 && d2 > 0.0) ? std::log2(d1 / d2) : 0.0;
    return c;
}

}  // namespace ifa
