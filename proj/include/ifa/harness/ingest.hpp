// Turns recorded IMU samples and lower-rate GPS fixes into the per-interval
// stream the aligners consume.
#pragma once

#include <vector>

#include "ifa/harness/csv_io.hpp"
#include "ifa/sensors.hpp"

namespace ifa {

struct IngestOptions {
    double interval = 0.02;     // update interval T (s)
    double max_gps_gap = 2.0;   // s
    double time_tolerance = 1e-9;  // s, GPS rows this close to an endpoint are used as-is
};

/// Linear interpolation between two fixes; longitude is unwrapped across +-pi.
AidFix interpolate_fix(const AidFix& a, const AidFix& b, double t);

/// Pairs IMU samples two per update and interpolates GPS to every interval
/// endpoint. Only intervals whose endpoints lie inside the GPS span are kept.
/// Throws RateMismatch when the IMU period is not T/2 or is irregular,
/// GapError when consecutive GPS rows are further apart than max_gps_gap and
/// FormatError (data row number, header = line 1) for non-increasing GPS time.
AlignmentInput ingest_logs(const std::vector<ImuSample>& imu, const std::vector<AidFix>& gps,
                           const IngestOptions& options = {});

/// Every stride-th fix starting with the first, e.g. stride 25 turns 50 Hz
/// endpoint fixes into a 2 Hz log.
std::vector<AidFix> decimate_fixes(const std::vector<AidFix>& fixes, int stride);

/// Truth rows matched to each fix time (within tol). Throws InvalidArgument
/// when a fix has no matching row.
std::vector<TruthSample> truth_at_fixes(const std::vector<TruthRow>& truth,
                                        const std::vector<AidFix>& fixes, double tol = 1e-6);

}  // namespace ifa
