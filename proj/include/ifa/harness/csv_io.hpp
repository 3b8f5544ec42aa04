// Headered CSV streams for IMU samples, GPS fixes and simulation truth.
//
//   IMU:   t_end_s,dtheta_x,dtheta_y,dtheta_z,dv_x,dv_y,dv_z
//   GPS:   t_s,lat_rad,lon_rad,h_m,vN_mps,vU_mps,vE_mps
//   Truth: t_s,q_s,q_x,q_y,q_z,vN,vU,vE,lat,lon,h
//
// One IMU row per sample (half an update interval). The truth quaternion q
// satisfies quat_to_dcm(q) = C_n^b. Values are written in shortest round-trip
// form so a write/read cycle is exact.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ifa/aligner.hpp"
#include "ifa/trajectory.hpp"

namespace ifa {

inline constexpr std::string_view kImuHeader = "t_end_s,dtheta_x,dtheta_y,dtheta_z,dv_x,dv_y,dv_z";
inline constexpr std::string_view kGpsHeader = "t_s,lat_rad,lon_rad,h_m,vN_mps,vU_mps,vE_mps";
inline constexpr std::string_view kTruthHeader = "t_s,q_s,q_x,q_y,q_z,vN,vU,vE,lat,lon,h";

struct ImuSample {
    double t_end = 0.0;
    Vec3 dtheta = Vec3::Zero();  // rad
    Vec3 dv = Vec3::Zero();      // m/s
};

struct TruthRow {
    double t = 0.0;
    UnitQuaternion q;  // quat_to_dcm(q) = C_n^b
    NavVelocity v = NavVelocity::Zero();
    GeodeticPosition p;
};

/// Splits each two-sample interval into its samples; the first sample ends at
/// t0 + T/2.
std::vector<ImuSample> imu_samples(const std::vector<ImuInterval>& imu, double interval,
                                   double t0 = 0.0);
TruthRow truth_row(const TruthSample& s);

void write_imu_csv(std::ostream& os, const std::vector<ImuSample>& rows);
void write_gps_csv(std::ostream& os, const std::vector<AidFix>& rows);
void write_truth_csv(std::ostream& os, const std::vector<TruthRow>& rows);

/// Readers throw FormatError (with the 1-based line number) on a wrong
/// header, a wrong field count or a non-numeric field.
std::vector<ImuSample> read_imu_csv(std::istream& is);
std::vector<AidFix> read_gps_csv(std::istream& is);
std::vector<TruthRow> read_truth_csv(std::istream& is);

/// File wrappers; throw Error when the file cannot be opened.
void write_imu_file(const std::string& path, const std::vector<ImuSample>& rows);
void write_gps_file(const std::string& path, const std::vector<AidFix>& rows);
void write_truth_file(const std::string& path, const std::vector<TruthRow>& rows);
std::vector<ImuSample> read_imu_file(const std::string& path);
std::vector<AidFix> read_gps_file(const std::string& path);
std::vector<TruthRow> read_truth_file(const std::string& path);

}  // namespace ifa
