// Independent reference computations shared by the test suites.
#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <random>

#include <Eigen/Geometry>

#include "ifa/attitude.hpp"
#include "ifa/increments.hpp"
#include "ifa/sensors.hpp"

namespace ifa::test {

/// Hamilton product written out component by component.
inline Vec4 hamilton(const Vec4& a, const Vec4& b)
{
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

/// Rotation of v by the Hamilton quaternion q: q (x) (0, v) (x) q*.
inline Vec3 rotate(const Vec4& q, const Vec3& v)
{
    const Vec4 conj(q[0], -q[1], -q[2], -q[3]);
    const Vec4 r = hamilton(hamilton(q, Vec4(0.0, v[0], v[1], v[2])), conj);
    return r.tail<3>();
}

inline Vec3 random_vec(std::mt19937_64& rng, double scale = 1.0)
{
    std::normal_distribution<double> n(0.0, scale);
    return {n(rng), n(rng), n(rng)};
}

inline Vec4 random_unit_quaternion(std::mt19937_64& rng)
{
    std::normal_distribution<double> n(0.0, 1.0);
    Vec4 q(n(rng), n(rng), n(rng), n(rng));
    return q / q.norm();
}

/// Random rotation through Eigen's own quaternion-to-matrix conversion.
inline Dcm random_dcm(std::mt19937_64& rng)
{
    const Vec4 q = random_unit_quaternion(rng);
    return Eigen::Quaterniond(q[0], q[1], q[2], q[3]).toRotationMatrix();
}

using Profile = std::function<Vec3(double)>;

/// Fine-step integrals over one interval [0, T] for body rate w(t) and
/// specific force f(t).
struct KernelReference {
    ImuInterval imu;     // plain integrals of w and f over each half
    Vec3 model_single;   // int (I + theta(t) x) f dt, theta(t) = int_0^t w
    Vec3 model_double;   // int_0^T int_0^tau (I + theta x) f
    Vec3 exact_single;   // int C(t) f dt with C' = C (w x)
    Vec3 exact_double;   // int int C f
    Vec3 exact_rotvec;   // rotation vector of C(T)
};

/// Trapezoid sums on n uniform substeps for the small-angle model integrals
/// and increments; RK4 for the full rotation with Simpson quadrature.
inline KernelReference integrate_kernel(const Profile& w, const Profile& f, double T, int n)
{
    KernelReference r;
    const double h = T / n;
    Vec3 theta = Vec3::Zero();
    Vec3 g_prev = f(0.0);
    Vec3 model_single = Vec3::Zero();
    Vec3 model_double = Vec3::Zero();
    for (int i = 0; i < n; ++i) {
        const double t0 = i * h;
        const double t1 = (i + 1) * h;
        const Vec3 dth = 0.5 * h * (w(t0) + w(t1));
        const Vec3 dv = 0.5 * h * (f(t0) + f(t1));
        if (2 * i < n) {
            r.imu.dtheta1 += dth;
            r.imu.dv1 += dv;
        } else {
            r.imu.dtheta2 += dth;
            r.imu.dv2 += dv;
        }
        theta += dth;
        const Vec3 g = f(t1) + theta.cross(f(t1));
        const Vec3 prev_single = model_single;
        model_single += 0.5 * h * (g_prev + g);
        model_double += 0.5 * h * (prev_single + model_single);
        g_prev = g;
    }
    r.model_single = model_single;
    r.model_double = model_double;

    // Full rotation: C' = C (w x), S' = C f, D' = S.
    auto skew3 = [](const Vec3& a) {
        Mat3 m;
        m << 0.0, -a[2], a[1], a[2], 0.0, -a[0], -a[1], a[0], 0.0;
        return m;
    };
    Mat3 c = Mat3::Identity();
    Vec3 s = Vec3::Zero();
    Vec3 d = Vec3::Zero();
    for (int i = 0; i < n; ++i) {
        const double t0 = i * h;
        const double tm = t0 + 0.5 * h;
        const double t1 = t0 + h;
        const Mat3 k1 = c * skew3(w(t0));
        const Mat3 k2 = (c + 0.5 * h * k1) * skew3(w(tm));
        const Mat3 k3 = (c + 0.5 * h * k2) * skew3(w(tm));
        const Mat3 k4 = (c + h * k3) * skew3(w(t1));
        const Mat3 c1 = c + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        // Midpoint attitude from a separate half-length RK4 step.
        const Mat3 h1 = c * skew3(w(t0));
        const Mat3 h2 = (c + 0.25 * h * h1) * skew3(w(t0 + 0.25 * h));
        const Mat3 h3 = (c + 0.25 * h * h2) * skew3(w(t0 + 0.25 * h));
        const Mat3 h4 = (c + 0.5 * h * h3) * skew3(w(tm));
        const Mat3 cmid = c + h / 12.0 * (h1 + 2.0 * h2 + 2.0 * h3 + h4);
        const Vec3 a0 = c * f(t0);
        const Vec3 am = cmid * f(tm);
        const Vec3 a1 = c1 * f(t1);
        d += h * s + h * h / 6.0 * (a0 + 2.0 * am);
        s += h / 6.0 * (a0 + 4.0 * am + a1);
        c = c1;
    }
    r.exact_single = s;
    r.exact_double = d;
    const Eigen::AngleAxisd aa(c);
    r.exact_rotvec = aa.angle() * aa.axis();
    return r;
}

/// Error-free increments and fixes taken straight from the truth record.
inline AlignmentInput ideal_input(const TruthRecord& truth)
{
    AlignmentInput in;
    in.interval = truth.interval;
    in.imu = truth.imu;
    for (const TruthSample& s : truth.epochs) {
        in.fixes.push_back({s.t, s.v, s.p});
    }
    return in;
}

/// Truth record of a scenario, computed once per configuration name.
struct Scenario {
    Trajectory traj;
    TruthRecord truth;
    AlignmentInput ideal;

    explicit Scenario(const ScenarioConfig& cfg)
        : traj(cfg), truth(record_truth(traj)), ideal(ideal_input(truth)) {}
};

inline const Scenario& maneuvering(double duration)
{
    static std::map<double, Scenario> cache;
    auto it = cache.find(duration);
    if (it == cache.end()) {
        auto cfg = ScenarioConfig::maneuvering_default();
        cfg.duration = duration;
        it = cache.emplace(duration, Scenario(cfg)).first;
    }
    return it->second;
}

}  // namespace ifa::test
