// IMU increment synthesis and GPS measurement model with lever arm.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ifa/aligner.hpp"
#include "ifa/trajectory.hpp"

namespace ifa {

/// Sensor error budget, in the units sensor datasheets use.
struct SensorErrors {
    double gyro_drift = 0.0;       // deg/h
    double gyro_noise_psd = 0.0;   // deg/h/sqrt(Hz)
    double accel_bias = 0.0;       // micro-g
    double accel_noise_psd = 0.0;  // micro-g/sqrt(Hz)
    double gps_vel_sigma = 0.0;    // m/s, per axis
    double gps_pos_sigma = 0.0;    // m, per axis
    Vec3 lever_arm = Vec3::Zero(); // body frame, m
    /// false: every axis carries +drift / +bias. true: each axis drawn from
    /// N(0, drift) / N(0, bias) once per run.
    bool random_bias = false;
    std::uint64_t rng_seed = 1;

    void validate() const;

    static SensorErrors none() { return {}; }
    /// Navigation-grade IMU with single-point GPS and a [1 1 1] m lever arm.
    static SensorErrors reference_grade();
};

/// Per-run random streams; a pure function of (seed, run).
struct RunStreams {
    std::mt19937_64 imu;
    std::mt19937_64 gps;
    static RunStreams make(std::uint64_t seed, std::uint64_t run);
};

/// Error-free increments over each half-interval plus the truth at every
/// update endpoint.
struct TruthRecord {
    double interval = 0.0;
    std::vector<ImuInterval> imu;     // M entries
    std::vector<TruthSample> epochs;  // M + 1 entries, t_k = k T
};

/// Integrates the truth rates over every half interval (3-point Gauss-Legendre
/// on sub-segments of at most cfg.truth_step).
TruthRecord record_truth(const Trajectory& traj);

/// Adds drift/bias and white noise to the exact increments.
std::vector<ImuInterval> sample_imu(const TruthRecord& truth, const SensorErrors& errors,
                                    std::mt19937_64& rng);

/// Antenna fix displaced by the lever arm, plus white noise.
AidFix gps_measure(const TruthSample& truth, const SensorErrors& errors, std::mt19937_64& rng);

/// Lever-arm displaced fix without noise.
AidFix gps_antenna(const TruthSample& truth, const Vec3& lever_arm);

/// IMU and aiding streams ready for an aligner.
struct AlignmentInput {
    double interval = 0.0;
    std::vector<ImuInterval> imu;  // M entries
    std::vector<AidFix> fixes;     // M + 1 entries
};

AlignmentInput simulate_measurements(const TruthRecord& truth, const SensorErrors& errors,
                                     std::uint64_t run);

}  // namespace ifa
