#include "ifa/trajectory.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>

#include "ifa/errors.hpp"

namespace ifa {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;
constexpr double kMaxLatitude = 89.9 * kDeg;

bool active(const Sinusoid& s) { return s.amplitude != 0.0 && s.period > 0.0; }

Mat3 axis_rotation(int axis, double angle)
{
    return Eigen::AngleAxisd(angle, Vec3::Unit(axis)).toRotationMatrix();
}

}  // namespace

double Sinusoid::value(double t) const
{
    if (!active(*this)) {
        return 0.0;
    }
    return amplitude * std::sin(2.0 * std::numbers::pi * t / period + phase);
}

double Sinusoid::rate(double t) const
{
    if (!active(*this)) {
        return 0.0;
    }
    const double w = 2.0 * std::numbers::pi / period;
    return amplitude * w * std::cos(w * t + phase);
}

double Sinusoid::accel(double t) const
{
    if (!active(*this)) {
        return 0.0;
    }
    const double w = 2.0 * std::numbers::pi / period;
    return -amplitude * w * w * std::sin(w * t + phase);
}

void ScenarioConfig::validate() const
{
    if (!(duration > 0.0)) {
        throw InvalidArgument("scenario duration must be positive");
    }
    if (!(interval > 0.0) || !(imu_rate > 0.0)) {
        throw InvalidArgument("update interval and IMU rate must be positive");
    }
    const double samples = imu_rate * interval;
    if (std::abs(samples - 2.0) > 1e-9) {
        throw InvalidArgument("IMU rate times update interval must equal 2 (two samples per update)");
    }
    if (!(truth_step > 0.0) || truth_step > 1e-3 + 1e-15) {
        throw InvalidArgument("truth integration step must be in (0, 1 ms]");
    }
    if (std::abs(initial_position.lat) > kMaxLatitude) {
        throw PolarSingularity("initial latitude too close to the pole");
    }
}

std::int64_t ScenarioConfig::update_count() const
{
    return static_cast<std::int64_t>(std::floor(duration / interval + 1e-9));
}

ScenarioConfig ScenarioConfig::maneuvering_default()
{
    ScenarioConfig cfg;
    cfg.initial_position = {0.0, 30.0 * kDeg, 0.0};
    cfg.mean_attitude = {0.0, 0.0, 45.0 * kDeg};
    cfg.attitude_wave = {Sinusoid{10.0 * kDeg, 30.0, 0.0},
                         Sinusoid{5.0 * kDeg, 25.0, 30.0 * kDeg},
                         Sinusoid{20.0 * kDeg, 40.0, 60.0 * kDeg}};
    cfg.mean_velocity = NavVelocity(60.0, 0.0, 80.0);
    cfg.velocity_wave = {Sinusoid{20.0, 40.0, 0.0},
                         Sinusoid{5.0, 30.0, 15.0 * kDeg},
                         Sinusoid{20.0, 50.0, 70.0 * kDeg}};
    return cfg;
}

ScenarioConfig ScenarioConfig::stationary(double duration)
{
    ScenarioConfig cfg;
    cfg.duration = duration;
    return cfg;
}

Trajectory::Trajectory(const ScenarioConfig& cfg) : cfg_(cfg), step_(cfg.truth_step)
{
    cfg_.validate();
    const auto n = static_cast<std::size_t>(std::ceil(cfg_.duration / step_)) + 3;
    grid_.reserve(n);
    Vec3 p = cfg_.initial_position.as_vector();
    grid_.push_back(p);
    for (std::size_t k = 1; k < n; ++k) {
        const double t = static_cast<double>(k - 1) * step_;
        const double h = step_;
        const Vec3 k1 = position_rate(p, t);
        const Vec3 k2 = position_rate(p + 0.5 * h * k1, t + 0.5 * h);
        const Vec3 k3 = position_rate(p + 0.5 * h * k2, t + 0.5 * h);
        const Vec3 k4 = position_rate(p + h * k3, t + h);
        p += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (std::abs(p[1]) > kMaxLatitude) {
            throw PolarSingularity("trajectory crosses |latitude| > 89.9 deg");
        }
        grid_.push_back(p);
    }
}

Vec3 Trajectory::position_rate(const Vec3& p, double t) const
{
    return curvature_matrix(GeodeticPosition{p[0], p[1], p[2]}) * velocity(t);
}

EulerAngles Trajectory::euler(double t) const
{
    const auto& w = cfg_.attitude_wave;
    const auto& m = cfg_.mean_attitude;
    return {m.roll + w[0].value(t), m.pitch + w[1].value(t), m.yaw + w[2].value(t)};
}

Dcm Trajectory::attitude(double t) const { return euler_to_dcm(euler(t)); }

NavVelocity Trajectory::velocity(double t) const
{
    const auto& w = cfg_.velocity_wave;
    return cfg_.mean_velocity + Vec3(w[0].value(t), w[1].value(t), w[2].value(t));
}

Vec3 Trajectory::acceleration(double t) const
{
    const auto& w = cfg_.velocity_wave;
    return {w[0].rate(t), w[1].rate(t), w[2].rate(t)};
}

GeodeticPosition Trajectory::position(double t) const
{
    double u = t / step_;
    auto i = static_cast<std::ptrdiff_t>(std::floor(u));
    const auto last = static_cast<std::ptrdiff_t>(grid_.size()) - 2;
    if (i < 0 || i > last) {
        throw InvalidArgument("time outside the simulated span");
    }
    const double s = u - static_cast<double>(i);
    const double t0 = static_cast<double>(i) * step_;
    const Vec3& p0 = grid_[static_cast<std::size_t>(i)];
    const Vec3& p1 = grid_[static_cast<std::size_t>(i) + 1];
    const Vec3 m0 = position_rate(p0, t0) * step_;
    const Vec3 m1 = position_rate(p1, t0 + step_) * step_;
    const double s2 = s * s, s3 = s2 * s;
    const Vec3 p = (2 * s3 - 3 * s2 + 1) * p0 + (s3 - 2 * s2 + s) * m0 + (-2 * s3 + 3 * s2) * p1 +
                   (s3 - s2) * m1;
    return GeodeticPosition::from_vector(p);
}

Vec3 Trajectory::body_rate_wrt_nav(double t) const
{
    const EulerAngles e = euler(t);
    const auto& w = cfg_.attitude_wave;
    const double roll_rate = w[0].rate(t);
    const double pitch_rate = w[1].rate(t);
    const double yaw_rate = w[2].rate(t);
    // C_b^n = Ry(-yaw) Rz(pitch) Rx(roll), axes N=0, U=1, E=2
    const Mat3 rx = axis_rotation(0, e.roll);
    const Mat3 rz = axis_rotation(2, e.pitch);
    return (rz * rx).transpose() * Vec3(0.0, -yaw_rate, 0.0) +
           rx.transpose() * Vec3(0.0, 0.0, pitch_rate) + Vec3(roll_rate, 0.0, 0.0);
}

Vec3 Trajectory::angular_rate(double t) const
{
    const Dcm c = attitude(t);
    return body_rate_wrt_nav(t) + c.transpose() * nav_rate_n(velocity(t), position(t));
}

Vec3 Trajectory::specific_force(double t) const
{
    const Dcm c = attitude(t);
    const NavVelocity v = velocity(t);
    const GeodeticPosition p = position(t);
    const Vec3 coriolis = (2.0 * earth_rate_n(p.lat) + transport_rate_n(v, p)).cross(v);
    return c.transpose() * (acceleration(t) + coriolis - gravity_n(p));
}

TruthSample Trajectory::sample(double t) const
{
    TruthSample s;
    s.t = t;
    s.body_to_nav = attitude(t);
    s.v = velocity(t);
    s.p = position(t);
    const Dcm cnb = s.body_to_nav.transpose();
    s.angular_rate = body_rate_wrt_nav(t) + cnb * nav_rate_n(s.v, s.p);
    const Vec3 coriolis = (2.0 * earth_rate_n(s.p.lat) + transport_rate_n(s.v, s.p)).cross(s.v);
    s.specific_force = cnb * (acceleration(t) + coriolis - gravity_n(s.p));
    return s;
}

}  // namespace ifa
