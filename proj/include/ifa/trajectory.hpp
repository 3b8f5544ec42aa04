// Kinematically consistent truth trajectory with analytic attitude and
// velocity profiles and numerically integrated position.
#pragma once

#include <array>
#include <vector>

#include "ifa/attitude.hpp"
#include "ifa/earth.hpp"

namespace ifa {

/// a * sin(2 pi t / period + phase). A zero amplitude or non-positive period
/// disables the term.
struct Sinusoid {
    double amplitude = 0.0;
    double period = 0.0;  // s
    double phase = 0.0;   // rad

    double value(double t) const;
    double rate(double t) const;
    double accel(double t) const;
};

/// Oscillating-maneuver scenario. Angles are in radians here; the config
/// file uses degrees.
struct ScenarioConfig {
    GeodeticPosition initial_position{0.0, 0.523598775598298873, 0.0};  // 30 deg N
    EulerAngles mean_attitude;
    std::array<Sinusoid, 3> attitude_wave;  // roll, pitch, yaw
    NavVelocity mean_velocity = NavVelocity::Zero();
    std::array<Sinusoid, 3> velocity_wave;  // N, U, E
    double duration = 300.0;                // s
    double imu_rate = 100.0;                // Hz
    double interval = 0.02;                 // s, update interval T
    double truth_step = 1e-3;               // s, position integration step

    /// Throws InvalidArgument on an inconsistent configuration.
    void validate() const;
    std::int64_t update_count() const;
    double imu_period() const { return 1.0 / imu_rate; }

    /// Maneuvering profile used for the reported experiments.
    static ScenarioConfig maneuvering_default();
    /// Vehicle at rest on the ellipsoid.
    static ScenarioConfig stationary(double duration = 300.0);
};

struct TruthSample {
    double t = 0.0;
    Dcm body_to_nav = Dcm::Identity();   // C_b^n
    NavVelocity v = NavVelocity::Zero();
    GeodeticPosition p;
    Vec3 angular_rate = Vec3::Zero();    // w_ib^b (rad/s)
    Vec3 specific_force = Vec3::Zero();  // f^b (m/s^2)
};

class Trajectory {
public:
    /// Integrates position over [0, duration] with RK4 at cfg.truth_step.
    /// Throws PolarSingularity if latitude leaves |L| <= 89.9 deg.
    explicit Trajectory(const ScenarioConfig& cfg);

    const ScenarioConfig& config() const { return cfg_; }
    double duration() const { return cfg_.duration; }

    EulerAngles euler(double t) const;
    Dcm attitude(double t) const;
    NavVelocity velocity(double t) const;
    Vec3 acceleration(double t) const;
    /// Cubic Hermite interpolation of the integrated position.
    GeodeticPosition position(double t) const;
    /// w_nb^b from the analytic Euler-angle rates.
    Vec3 body_rate_wrt_nav(double t) const;
    Vec3 angular_rate(double t) const;
    Vec3 specific_force(double t) const;

    TruthSample sample(double t) const;

private:
    Vec3 position_rate(const Vec3& p, double t) const;

    ScenarioConfig cfg_;
    double step_;
    std::vector<Vec3> grid_;  // [lon, lat, h] at k * step_
};

inline Trajectory gen_truth(const ScenarioConfig& cfg) { return Trajectory(cfg); }

}  // namespace ifa
