// Scenario and sensor configuration file.
//
// INI-style key = value pairs in two sections; angles in degrees, everything
// else SI unless the key says otherwise. Keys left out keep the built-in
// maneuvering profile and reference-grade sensor values.
//
//   [scenario]
//   lat_deg lon_deg h_m duration_s imu_rate_hz interval_s truth_step_s
//   roll_deg pitch_deg yaw_deg                     mean attitude
//   {roll,pitch,yaw}_amp_deg _period_s _phase_deg  attitude sinusoids
//   vN_mps vU_mps vE_mps                           mean velocity
//   {vN,vU,vE}_amp_mps _period_s _phase_deg        velocity sinusoids
//
//   [sensors]
//   gyro_drift_deg_h gyro_noise_deg_h_rthz accel_bias_ug accel_noise_ug_rthz
//   gps_vel_sigma_mps gps_pos_sigma_m lever_x_m lever_y_m lever_z_m
//   random_bias (true/false) seed
//
// Lever-arm components are body axes (x forward, y up, z right).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ifa/sensors.hpp"
#include "ifa/trajectory.hpp"

namespace ifa {

struct SimulationConfig {
    ScenarioConfig scenario = ScenarioConfig::maneuvering_default();
    SensorErrors sensors = SensorErrors::reference_grade();

    /// 64-bit FNV-1a of the canonical text form at 12 significant digits;
    /// independent of comments, key order and number formatting in the
    /// source file.
    std::uint64_t hash() const;
};

/// Throws FormatError on syntax errors and InvalidArgument on unknown keys,
/// non-numeric values or a configuration that fails validation.
SimulationConfig parse_config(std::istream& is);
SimulationConfig load_config(const std::string& path);

/// Canonical text form with every key present, numbers at the given
/// significant digits (0: shortest exact representation).
std::string config_text(const SimulationConfig& cfg, int digits = 15);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace ifa
