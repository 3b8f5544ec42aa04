// Command-line front end: simulate, align, montecarlo, oracle.
//
// Exit codes: 0 success, 1 other failure, 2 malformed input file,
// 3 attitude still unobservable (degenerate spectrum) at the end of a run.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ifa/errors.hpp"
#include "ifa/harness/config.hpp"
#include "ifa/harness/csv_io.hpp"
#include "ifa/harness/ingest.hpp"
#include "ifa/harness/monte_carlo.hpp"
#include "ifa/harness/oracle.hpp"
#include "ifa/harness/runner.hpp"

namespace fs = std::filesystem;
using namespace ifa;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitFormat = 2;
constexpr int kExitDegenerate = 3;

struct Common {
    std::string config;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool no_lever_arm = false;
    std::string out;
};

SimulationConfig resolve(const Common& c)
{
    SimulationConfig cfg = c.config.empty() ? SimulationConfig{} : load_config(c.config);
    if (c.seed_given) {
        cfg.sensors.rng_seed = c.seed;
    }
    if (c.no_lever_arm) {
        cfg.sensors.lever_arm = Vec3::Zero();
    }
    return cfg;
}

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw InvalidArgument("bad number '" + item + "' in list");
        }
    }
    if (out.empty()) {
        throw InvalidArgument("empty list");
    }
    return out;
}

// Writes to path, or stdout when path is empty or "-".
void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) {
        throw Error("cannot open " + path + " for writing");
    }
    os << text;
}

void add_common(CLI::App* cmd, Common& c, bool lever)
{
    cmd->add_option("--config", c.config, "Scenario/sensor config file");
    cmd->add_option("--seed", c.seed, "Noise seed (overrides the config)")
        ->each([&c](const std::string&) { c.seed_given = true; });
    if (lever) {
        cmd->add_flag("--no-lever-arm", c.no_lever_arm, "Zero the GPS lever arm");
    }
}

int cmd_simulate(const Common& c, std::uint64_t run, int gps_stride)
{
    const auto cfg = resolve(c);
    const std::string dir = c.out.empty() ? "." : c.out;
    fs::create_directories(dir);

    const Trajectory traj(cfg.scenario);
    const auto truth = record_truth(traj);
    const auto in = simulate_measurements(truth, cfg.sensors, run);

    write_imu_file((fs::path(dir) / "imu.csv").string(), imu_samples(in.imu, in.interval));
    write_gps_file((fs::path(dir) / "gps.csv").string(), decimate_fixes(in.fixes, gps_stride));
    std::vector<TruthRow> rows;
    rows.reserve(truth.epochs.size());
    for (const auto& s : truth.epochs) {
        rows.push_back(truth_row(s));
    }
    write_truth_file((fs::path(dir) / "truth.csv").string(), rows);
    emit((fs::path(dir) / "config.ini").string(), config_text(cfg));
    std::cerr << "wrote " << in.imu.size() << " updates to " << dir << '\n';
    return 0;
}

int cmd_align(const Common& c, const std::string& method, const std::string& in_dir,
              std::uint64_t run, int record_every, double max_gap, int solve_every)
{
    RunOptions ro;
    ro.method = parse_method(method);
    ro.record_every = record_every;
    ro.aligner.solve_every = solve_every;
    ro.run = run;

    RunReport report;
    if (!in_dir.empty()) {
        const auto cfg_path = fs::path(in_dir) / "config.ini";
        IngestOptions io;
        io.max_gps_gap = max_gap;
        if (!c.config.empty()) {
            io.interval = load_config(c.config).scenario.interval;
        } else if (fs::exists(cfg_path)) {
            io.interval = load_config(cfg_path.string()).scenario.interval;
        }
        const auto imu = read_imu_file((fs::path(in_dir) / "imu.csv").string());
        const auto gps = read_gps_file((fs::path(in_dir) / "gps.csv").string());
        const auto in = ingest_logs(imu, gps, io);
        std::vector<TruthSample> truth;
        const auto truth_path = fs::path(in_dir) / "truth.csv";
        if (fs::exists(truth_path)) {
            truth = truth_at_fixes(read_truth_file(truth_path.string()), in.fixes);
        }
        if (fs::exists(cfg_path)) {
            const auto cfg = load_config(cfg_path.string());
            ro.seed = cfg.sensors.rng_seed;
            ro.config_hash = cfg.hash();
        }
        report = run_alignment(in, ro, truth);
    } else {
        const auto cfg = resolve(c);
        ro.seed = cfg.sensors.rng_seed;
        ro.config_hash = cfg.hash();
        const Trajectory traj(cfg.scenario);
        const auto truth = record_truth(traj);
        const auto in = simulate_measurements(truth, cfg.sensors, run);
        report = run_alignment(in, ro, truth.epochs);
    }
    emit(c.out, report_csv(report));
    if (report.degenerate_at_end) {
        std::cerr << "attitude not observable: degenerate spectrum at end of run\n";
        return kExitDegenerate;
    }
    return 0;
}

int cmd_montecarlo(const Common& c, const std::string& method, int runs,
                   const std::string& epochs, int threads)
{
    const auto cfg = resolve(c);
    McOptions mo;
    mo.method = parse_method(method);
    mo.runs = runs;
    mo.threads = threads;
    mo.config_hash = cfg.hash();
    if (!epochs.empty()) {
        mo.epochs = parse_list(epochs);
    }
    const Trajectory traj(cfg.scenario);
    const auto truth = record_truth(traj);
    const auto summary = monte_carlo(truth, cfg.sensors, mo);
    emit(c.out, summary_csv(summary));
    return summary.completed_runs == 0 ? kExitDegenerate : 0;
}

int cmd_oracle(const Common& c, const std::string& epochs, double substep)
{
    const auto cfg = resolve(c);
    const Trajectory traj(cfg.scenario);
    const auto times = epochs.empty() ? std::vector<double>{cfg.scenario.duration}
                                      : parse_list(epochs);
    const auto conv = oracle_with_convergence(traj, times, substep);

    std::ostringstream os;
    os << std::setprecision(17);
    os << "# substep=" << 0.5 * substep << " step_change=" << conv.step_change
       << " observed_order=" << conv.observed_order << '\n';
    os << "t_s";
    for (const char* name : {"alpha_v", "beta_v", "alpha_p", "beta_p"}) {
        for (int i = 0; i < 3; ++i) {
            os << ',' << name << '_' << i;
        }
    }
    for (const char* name : {"nav_chain", "body_chain"}) {
        for (int i = 0; i < 9; ++i) {
            os << ',' << name << '_' << i / 3 << i % 3;
        }
    }
    os << '\n';
    for (const auto& s : conv.samples) {
        os << s.t;
        for (const Vec3* v : {&s.alpha_v, &s.beta_v, &s.alpha_p, &s.beta_p}) {
            os << ',' << (*v)[0] << ',' << (*v)[1] << ',' << (*v)[2];
        }
        for (const Dcm* m : {&s.nav_chain, &s.body_chain}) {
            for (int i = 0; i < 9; ++i) {
                os << ',' << (*m)(i / 3, i % 3);
            }
        }
        os << '\n';
    }
    emit(c.out, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"In-flight coarse alignment toolkit"};
    app.require_subcommand(1);

    Common c;
    std::string method = "vif";
    std::string in_dir;
    std::string epochs;
    std::uint64_t run = 0;
    int runs = 100;
    int threads = 1;
    int record_every = 1;
    int solve_every = 1;
    int gps_stride = 1;
    double max_gap = 2.0;
    double substep = 0.05;

    auto* sim = app.add_subcommand("simulate", "Write truth, IMU and GPS CSV files");
    add_common(sim, c, true);
    sim->add_option("--out", c.out, "Output directory")->required();
    sim->add_option("--run", run, "Run index within the seed");
    sim->add_option("--gps-stride", gps_stride, "Keep every n-th GPS fix (25 gives 2 Hz)")
        ->check(CLI::PositiveNumber);

    auto* align = app.add_subcommand("align", "Run one aligner on files or a simulated scenario");
    add_common(align, c, true);
    align->add_option("--method", method, "vif or pif");
    align->add_option("--in", in_dir, "Directory with imu.csv, gps.csv [, truth.csv, config.ini]");
    align->add_option("--out", c.out, "Report CSV (default stdout)");
    align->add_option("--run", run, "Run index within the seed");
    align->add_option("--record-every", record_every, "Report every n-th solve")
        ->check(CLI::PositiveNumber);
    align->add_option("--solve-every", solve_every, "Solve for attitude every n-th update")
        ->check(CLI::PositiveNumber);
    align->add_option("--max-gap", max_gap, "Largest GPS gap to interpolate over (s)");

    auto* mc = app.add_subcommand("montecarlo", "Batch of seeded runs with summary statistics");
    add_common(mc, c, true);
    mc->add_option("--method", method, "vif or pif");
    mc->add_option("--runs", runs, "Number of runs")->check(CLI::Range(2, 1000000));
    mc->add_option("--epochs", epochs, "Comma-separated epochs (s)");
    mc->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    mc->add_option("--out", c.out, "Summary CSV (default stdout)");

    auto* orc = app.add_subcommand("oracle", "Fine-step reference integrals on the truth profile");
    add_common(orc, c, false);
    orc->add_option("--epochs", epochs, "Comma-separated output times (s)");
    orc->add_option("--substep", substep, "Integration substep (s)")->check(CLI::PositiveNumber);
    orc->add_option("--out", c.out, "Output CSV (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            return cmd_simulate(c, run, gps_stride);
        }
        if (align->parsed()) {
            return cmd_align(c, method, in_dir, run, record_every, max_gap, solve_every);
        }
        if (mc->parsed()) {
            return cmd_montecarlo(c, method, runs, epochs, threads);
        }
        return cmd_oracle(c, epochs, substep);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFormat;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}
