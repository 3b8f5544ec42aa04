// Drives an aligner over a measurement stream and records the attitude
// history, with errors against truth when truth is available.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ifa/aligner_pif.hpp"
#include "ifa/aligner_vif.hpp"
#include "ifa/sensors.hpp"

namespace ifa {

enum class Method { vif, pif };

std::string_view method_name(Method m);
/// Accepts "vif" or "pif"; throws InvalidArgument otherwise.
Method parse_method(std::string_view name);

/// Either aligner behind one interface.
class Aligner {
public:
    Aligner(Method method, const NavVelocity& v0, const GeodeticPosition& p0, double interval,
            AlignerOptions options = {});

    std::optional<AlignmentEstimate> update(const ImuInterval& imu, const AidFix& prev,
                                            const AidFix& next);
    AlignmentEstimate estimate() const;
    Method method() const;
    /// (alpha, beta) of the most recent update.
    std::pair<Vec3, Vec3> observation() const;
    const Kmatrix& k() const;

private:
    std::variant<VifAligner, PifAligner> impl_;
};

struct ReportRow {
    double t = 0.0;
    EulerAngles estimate;              // deg
    std::optional<EulerAngles> error;  // deg, estimate relative to truth
    bool degenerate = false;
};

struct RunReport {
    Method method = Method::vif;
    std::uint64_t seed = 0;
    std::uint64_t run = 0;
    std::uint64_t config_hash = 0;
    bool has_truth = false;
    std::vector<ReportRow> rows;
    Vec4 final_spectrum = Vec4::Zero();  // eigenvalues of K, ascending
    bool degenerate_at_end = true;

    /// Row whose time is closest to t; nullptr if empty.
    const ReportRow* at(double t) const;
};

struct RunOptions {
    Method method = Method::vif;
    AlignerOptions aligner;
    /// Record one row every this many solves (>= 1).
    int record_every = 1;
    std::uint64_t seed = 0;
    std::uint64_t run = 0;
    std::uint64_t config_hash = 0;
};

/// Feeds every update of in to the chosen aligner. truth, when non-empty,
/// must hold the M + 1 endpoint samples aligned with in.fixes.
RunReport run_alignment(const AlignmentInput& in, const RunOptions& options,
                        std::span<const TruthSample> truth = {});

/// Attitude error of an estimate relative to truth, as Euler angles of
/// C_est * C_true^T (rad).
EulerAngles attitude_error(const Dcm& estimate, const Dcm& truth);

/// Writes the report as CSV; error columns only when the report has truth.
void write_report_csv(const RunReport& report, const std::string& path);
std::string report_csv(const RunReport& report);

}  // namespace ifa
