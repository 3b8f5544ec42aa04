// Batch of independently seeded alignment runs on one truth trajectory,
// summarized as per-axis mean and 3-sigma error at fixed epochs.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ifa/harness/runner.hpp"

namespace ifa {

struct McOptions {
    Method method = Method::vif;
    AlignerOptions aligner;
    int runs = 100;
    std::vector<double> epochs = {5.0, 10.0, 20.0, 60.0, 100.0, 300.0};
    /// Worker threads; results do not depend on this.
    int threads = 1;
    std::uint64_t config_hash = 0;
};

struct EpochStats {
    double t = 0.0;
    std::size_t count = 0;
    EulerAngles mean;         // deg
    EulerAngles three_sigma;  // deg, 3 x sample standard deviation
};

struct ExcludedRun {
    std::uint64_t run = 0;
    std::string reason;
};

struct McSummary {
    Method method = Method::vif;
    std::uint64_t seed = 0;
    std::uint64_t config_hash = 0;
    int requested_runs = 0;
    int completed_runs = 0;
    std::vector<ExcludedRun> excluded;
    std::vector<EpochStats> epochs;
};

/// Errors of one run at each requested epoch.
struct RunSample {
    std::uint64_t run = 0;
    std::vector<EulerAngles> errors;  // deg, one per epoch
};

/// Statistics over the given runs. The values at each epoch are sorted
/// before summation, so the result does not depend on the order of runs.
std::vector<EpochStats> summarize(const std::vector<double>& epochs,
                                  const std::vector<RunSample>& runs);

/// Runs options.runs simulations (run index 0..runs-1, seed from
/// errors.rng_seed). Runs that throw or end with a degenerate spectrum are
/// listed in excluded. Throws InvalidArgument when runs < 2 or an epoch lies
/// outside the trajectory.
McSummary monte_carlo(const TruthRecord& truth, const SensorErrors& errors,
                      const McOptions& options);

std::string summary_csv(const McSummary& summary);

}  // namespace ifa
