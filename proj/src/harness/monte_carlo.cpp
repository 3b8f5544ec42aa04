#include "ifa/harness/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "ifa/errors.hpp"

namespace ifa {

namespace {

struct Moments {
    double mean = 0.0;
    double three_sigma = 0.0;
};

Moments moments(std::vector<double> x)
{
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double sum = 0.0;
    for (double v : x) {
        sum += v;
    }
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : x) {
        ss += (v - mean) * (v - mean);
    }
    return {mean, x.size() > 1 ? 3.0 * std::sqrt(ss / (n - 1.0)) : 0.0};
}

}  // namespace

std::vector<EpochStats> summarize(const std::vector<double>& epochs,
                                  const std::vector<RunSample>& runs)
{
    std::vector<EpochStats> out;
    for (std::size_t e = 0; e < epochs.size(); ++e) {
        std::vector<double> roll, pitch, yaw;
        for (const auto& r : runs) {
            roll.push_back(r.errors.at(e).roll);
            pitch.push_back(r.errors.at(e).pitch);
            yaw.push_back(r.errors.at(e).yaw);
        }
        EpochStats s;
        s.t = epochs[e];
        s.count = runs.size();
        if (!runs.empty()) {
            const auto mr = moments(roll);
            const auto mp = moments(pitch);
            const auto my = moments(yaw);
            s.mean = {mr.mean, mp.mean, my.mean};
            s.three_sigma = {mr.three_sigma, mp.three_sigma, my.three_sigma};
        }
        out.push_back(s);
    }
    return out;
}

McSummary monte_carlo(const TruthRecord& truth, const SensorErrors& errors,
                      const McOptions& options)
{
    if (options.runs < 2) {
        throw InvalidArgument("Monte-Carlo needs at least two runs");
    }
    const double span = truth.interval * static_cast<double>(truth.imu.size());
    for (double t : options.epochs) {
        if (!(t > 0.0) || t > span + 0.5 * truth.interval) {
            throw InvalidArgument("epoch " + std::to_string(t) + " s outside the trajectory");
        }
    }

    const auto n = static_cast<std::size_t>(options.runs);
    std::vector<std::optional<RunSample>> samples(n);
    std::vector<std::string> failures(n);

    auto work = [&](std::size_t run) {
        try {
            const auto in = simulate_measurements(truth, errors, run);
            RunOptions ro;
            ro.method = options.method;
            ro.aligner = options.aligner;
            ro.seed = errors.rng_seed;
            ro.run = run;
            ro.config_hash = options.config_hash;
            const auto report = run_alignment(in, ro, truth.epochs);
            if (report.degenerate_at_end) {
                failures[run] = "degenerate spectrum at end of run";
                return;
            }
            RunSample s;
            s.run = run;
            for (double t : options.epochs) {
                const ReportRow* row = report.at(t);
                if (row == nullptr || !row->error || std::abs(row->t - t) > 0.5 * truth.interval) {
                    failures[run] = "no estimate at epoch " + std::to_string(t);
                    return;
                }
                s.errors.push_back(*row->error);
            }
            samples[run] = std::move(s);
        } catch (const Error& e) {
            failures[run] = e.what();
        }
    };

    const int threads = std::max(1, std::min(options.threads, options.runs));
    if (threads == 1) {
        for (std::size_t r = 0; r < n; ++r) {
            work(r);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (int i = 0; i < threads; ++i) {
            pool.emplace_back([&] {
                for (std::size_t r = next++; r < n; r = next++) {
                    work(r);
                }
            });
        }
    }

    McSummary summary;
    summary.method = options.method;
    summary.seed = errors.rng_seed;
    summary.config_hash = options.config_hash;
    summary.requested_runs = options.runs;
    std::vector<RunSample> done;
    for (std::size_t r = 0; r < n; ++r) {
        if (samples[r]) {
            done.push_back(std::move(*samples[r]));
        } else {
            summary.excluded.push_back({r, failures[r]});
        }
    }
    summary.completed_runs = static_cast<int>(done.size());
    summary.epochs = summarize(options.epochs, done);
    return summary;
}

std::string summary_csv(const McSummary& summary)
{
    std::ostringstream os;
    os << std::setprecision(12);
    os << "# method=" << method_name(summary.method) << " seed=" << summary.seed
       << " config_hash=" << std::hex << summary.config_hash << std::dec
       << " runs=" << summary.completed_runs << '/' << summary.requested_runs << '\n';
    for (const auto& x : summary.excluded) {
        os << "# excluded run " << x.run << ": " << x.reason << '\n';
    }
    os << "t_s,n,mean_roll_deg,mean_pitch_deg,mean_yaw_deg,"
          "3sigma_roll_deg,3sigma_pitch_deg,3sigma_yaw_deg\n";
    for (const auto& e : summary.epochs) {
        os << e.t << ',' << e.count << ',' << e.mean.roll << ',' << e.mean.pitch << ','
           << e.mean.yaw << ',' << e.three_sigma.roll << ',' << e.three_sigma.pitch << ','
           << e.three_sigma.yaw << '\n';
    }
    return os.str();
}

}  // namespace ifa
