#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ifa/errors.hpp"
#include "ifa/harness/config.hpp"
#include "ifa/harness/csv_io.hpp"
#include "ifa/harness/ingest.hpp"
#include "ifa/harness/monte_carlo.hpp"
#include "ifa/harness/oracle.hpp"
#include "ifa/harness/runner.hpp"
#include "ifa/harness/state_io.hpp"
#include "support.hpp"

using namespace ifa;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;
constexpr double kOmega = 7.292115e-5;

std::size_t format_line(const std::function<void()>& f)
{
    try {
        f();
    } catch (const FormatError& e) {
        return e.line();
    }
    return 0;
}

// Replays the simulator's export path: IMU samples and (optionally thinned)
// fixes go through CSV text and back through ingestion.
AlignmentInput replay(const AlignmentInput& in, int stride)
{
    std::stringstream imu_csv, gps_csv;
    write_imu_csv(imu_csv, imu_samples(in.imu, in.interval));
    write_gps_csv(gps_csv, decimate_fixes(in.fixes, stride));
    return ingest_logs(read_imu_csv(imu_csv), read_gps_csv(gps_csv));
}

double yaw_error_at(const RunReport& r, double t) { return r.at(t)->error->yaw; }

}  // namespace

// ---- CSV -------------------------------------------------------------------

TEST(Csv, ImuRoundTripIsExact)
{
    std::mt19937_64 rng(41);
    std::vector<ImuSample> rows;
    for (int i = 0; i < 200; ++i) {
        rows.push_back({0.01 * (i + 1), test::random_vec(rng, 1e-3), test::random_vec(rng, 0.1)});
    }
    std::stringstream ss;
    write_imu_csv(ss, rows);
    EXPECT_EQ(ss.str().substr(0, kImuHeader.size()), kImuHeader);
    const auto back = read_imu_csv(ss);
    ASSERT_EQ(back.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(back[i].t_end, rows[i].t_end);
        EXPECT_EQ(back[i].dtheta, rows[i].dtheta);
        EXPECT_EQ(back[i].dv, rows[i].dv);
    }
}

TEST(Csv, GpsAndTruthRoundTrip)
{
    const auto& sc = test::maneuvering(20.0);
    std::stringstream gps;
    write_gps_csv(gps, sc.ideal.fixes);
    const auto fixes = read_gps_csv(gps);
    ASSERT_EQ(fixes.size(), sc.ideal.fixes.size());
    EXPECT_EQ(fixes[123].v, sc.ideal.fixes[123].v);
    EXPECT_EQ(fixes[123].p.as_vector(), sc.ideal.fixes[123].p.as_vector());

    std::vector<TruthRow> rows;
    for (const auto& s : sc.truth.epochs) {
        rows.push_back(truth_row(s));
    }
    std::stringstream truth;
    write_truth_csv(truth, rows);
    const auto back = read_truth_csv(truth);
    ASSERT_EQ(back.size(), rows.size());
    EXPECT_EQ(back[77].q.coeffs(), rows[77].q.coeffs());
    // Stored quaternion encodes the nav-to-body matrix.
    EXPECT_LT((quat_to_dcm(back[77].q).transpose() - sc.truth.epochs[77].body_to_nav).norm(), 1e-15);
}

TEST(Csv, ImuSamplesSplitIntervals)
{
    std::vector<ImuInterval> imu(3);
    imu[1].dtheta2 = Vec3(1.0, 2.0, 3.0);
    const auto rows = imu_samples(imu, 0.02, 5.0);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_DOUBLE_EQ(rows[0].t_end, 5.01);
    EXPECT_DOUBLE_EQ(rows[5].t_end, 5.06);
    EXPECT_EQ(rows[3].dtheta, Vec3(1.0, 2.0, 3.0));
}

TEST(Csv, ErrorsCarryLineNumbers)
{
    std::string good = std::string(kImuHeader) + "\n0.01,0,0,0,0,0,0\n";
    {
        std::stringstream ss("t,x\n");
        EXPECT_EQ(format_line([&] { read_imu_csv(ss); }), 1u);
    }
    {
        std::stringstream ss(good + "0.02,0,0,0,0,0\n");
        EXPECT_EQ(format_line([&] { read_imu_csv(ss); }), 3u);
    }
    {
        std::stringstream ss(good + "0.02,0,0,x,0,0,0\n");
        EXPECT_EQ(format_line([&] { read_imu_csv(ss); }), 3u);
    }
    {
        std::stringstream ss(std::string(kGpsHeader) + "\n0,0.5,0,0,1,0,0,9\n");
        EXPECT_EQ(format_line([&] { read_gps_csv(ss); }), 2u);
    }
    {
        std::stringstream ss("");
        EXPECT_EQ(format_line([&] { read_truth_csv(ss); }), 1u);
    }
    EXPECT_THROW(read_imu_file("/nonexistent/imu.csv"), Error);
}

// ---- ingest ----------------------------------------------------------------

TEST(Ingest, EndpointFixesPassThrough)
{
    const auto& in = test::maneuvering(20.0).ideal;
    const auto out = replay(in, 1);
    ASSERT_EQ(out.imu.size(), in.imu.size());
    ASSERT_EQ(out.fixes.size(), in.fixes.size());
    for (std::size_t k = 0; k < in.imu.size(); ++k) {
        ASSERT_EQ(out.imu[k].dtheta1, in.imu[k].dtheta1);
        ASSERT_EQ(out.imu[k].dv2, in.imu[k].dv2);
        ASSERT_EQ(out.fixes[k].v, in.fixes[k].v);
    }
    EXPECT_DOUBLE_EQ(out.interval, 0.02);
}

TEST(Ingest, TwoHertzFixesAreInterpolated)
{
    const auto& in = test::maneuvering(20.0).ideal;
    const auto out = replay(in, 25);
    ASSERT_EQ(out.fixes.size(), in.fixes.size());
    // Fix 30 lies 5/25 of the way from GPS row 1 (fix 25) to row 2 (fix 50).
    const Vec3 expected = 0.8 * in.fixes[25].v + 0.2 * in.fixes[50].v;
    EXPECT_LT((out.fixes[30].v - expected).norm(), 1e-12);
    EXPECT_EQ(out.fixes[50].v, in.fixes[50].v);
}

TEST(Ingest, InterpolationUnwrapsLongitude)
{
    const AidFix a{0.0, NavVelocity::Zero(), {kPi - 0.01, 0.3, 0.0}};
    const AidFix b{1.0, NavVelocity::Zero(), {-kPi + 0.03, 0.3, 0.0}};
    const AidFix m = interpolate_fix(a, b, 0.25);
    EXPECT_NEAR(m.p.lon, kPi, 1e-12);
    const AidFix n = interpolate_fix(a, b, 0.75);
    EXPECT_NEAR(n.p.lon, -kPi + 0.02, 1e-12);
}

TEST(Ingest, GapAndRateErrors)
{
    const auto& in = test::maneuvering(20.0).ideal;
    const auto samples = imu_samples(in.imu, in.interval);
    auto fixes = decimate_fixes(in.fixes, 25);
    fixes.erase(fixes.begin() + 3, fixes.begin() + 9);  // a 3.5 s hole
    EXPECT_THROW(ingest_logs(samples, fixes), GapError);
    IngestOptions wide;
    wide.max_gps_gap = 5.0;
    EXPECT_NO_THROW(ingest_logs(samples, fixes, wide));

    EXPECT_THROW(ingest_logs(samples, {in.fixes.front()}), GapError);

    IngestOptions slow;
    slow.interval = 0.04;
    EXPECT_THROW(ingest_logs(samples, in.fixes, slow), RateMismatch);

    auto jitter = samples;
    jitter[10].t_end += 0.003;
    EXPECT_THROW(ingest_logs(jitter, in.fixes), RateMismatch);

    auto back = in.fixes;
    back[4].t = back[3].t;
    EXPECT_EQ(format_line([&] { ingest_logs(samples, back); }), 6u);
}

TEST(Ingest, TruthMatchedToFixes)
{
    const auto& sc = test::maneuvering(20.0);
    std::vector<TruthRow> rows;
    for (const auto& s : sc.truth.epochs) {
        rows.push_back(truth_row(s));
    }
    const auto fixes = decimate_fixes(sc.ideal.fixes, 50);
    const auto matched = truth_at_fixes(rows, fixes);
    ASSERT_EQ(matched.size(), fixes.size());
    EXPECT_EQ(matched[3].t, 3.0);
    EXPECT_LT((matched[3].body_to_nav - sc.truth.epochs[150].body_to_nav).norm(), 1e-15);
    auto odd = fixes;
    odd[2].t += 0.005;
    EXPECT_THROW(truth_at_fixes(rows, odd), InvalidArgument);
}

TEST(Ingest, ReplayMatchesInMemoryRun)
{
    const auto& sc = test::maneuvering(20.0);
    const auto in = simulate_measurements(sc.truth, SensorErrors::reference_grade(), 0);
    RunOptions ro;
    ro.method = Method::pif;
    const auto direct = run_alignment(in, ro, sc.truth.epochs);
    const auto replayed = run_alignment(replay(in, 1), ro, sc.truth.epochs);
    ASSERT_EQ(direct.rows.size(), replayed.rows.size());
    EXPECT_EQ(report_csv(direct), report_csv(replayed));
}

// ---- config ----------------------------------------------------------------

TEST(Config, EmptyFileGivesDefaults)
{
    std::stringstream ss("");
    const auto cfg = parse_config(ss);
    EXPECT_EQ(cfg.hash(), SimulationConfig{}.hash());
    EXPECT_EQ(cfg.sensors.lever_arm, Vec3(1.0, 1.0, 1.0));
    EXPECT_NEAR(cfg.scenario.initial_position.lat, 30.0 * kDeg, 1e-15);
}

TEST(Config, UnitsAndOverrides)
{
    std::stringstream ss("[scenario]\nlat_deg = 45\nduration_s = 60\n"
                         "[sensors]\nlever_y_m = -0.5\nrandom_bias = true\nseed = 99\n");
    const auto cfg = parse_config(ss);
    EXPECT_NEAR(cfg.scenario.initial_position.lat, kPi / 4.0, 1e-15);
    EXPECT_EQ(cfg.scenario.duration, 60.0);
    EXPECT_EQ(cfg.sensors.lever_arm, Vec3(1.0, -0.5, 1.0));
    EXPECT_TRUE(cfg.sensors.random_bias);
    EXPECT_EQ(cfg.sensors.rng_seed, 99u);
}

TEST(Config, Errors)
{
    auto parse = [](const std::string& text) {
        std::stringstream ss(text);
        return parse_config(ss);
    };
    EXPECT_THROW(parse("[scenario]\nlat_dg = 4\n"), InvalidArgument);
    EXPECT_THROW(parse("[vehicle]\nmass = 4\n"), InvalidArgument);
    EXPECT_THROW(parse("[scenario]\nlat_deg = north\n"), InvalidArgument);
    EXPECT_THROW(parse("[sensors]\nrandom_bias = maybe\n"), InvalidArgument);
    EXPECT_THROW(parse("[sensors]\nseed = -3\n"), InvalidArgument);
    EXPECT_THROW(parse("[scenario]\nimu_rate_hz = 200\n"), InvalidArgument);
    EXPECT_THROW(parse("[sensors]\naccel_bias_ug = -1\n"), InvalidArgument);
    EXPECT_EQ(format_line([&] { parse("[scenario]\nlat_deg = 4\n[broken\n"); }), 3u);
    EXPECT_THROW(load_config("/nonexistent/cfg.ini"), Error);
}

TEST(Config, HashIgnoresFormattingButNotValues)
{
    auto hash = [](const std::string& text) {
        std::stringstream ss(text);
        return parse_config(ss).hash();
    };
    const auto a = hash("[scenario]\nlat_deg = 45\nyaw_deg = 10\n");
    EXPECT_EQ(a, hash("; comment\n[scenario]\nyaw_deg=10.000\n\nlat_deg = 4.5e1\n"));
    EXPECT_NE(a, hash("[scenario]\nlat_deg = 45\nyaw_deg = 10.001\n"));
    EXPECT_NE(a, hash("[scenario]\nlat_deg = 45\nyaw_deg = 10\n[sensors]\nseed = 2\n"));
}

TEST(Config, CanonicalTextRoundTrips)
{
    std::stringstream src("[scenario]\nlat_deg = 12.345\nvE_phase_deg = 33\n[sensors]\nlever_z_m = 0.7\n");
    const auto cfg = parse_config(src);
    std::stringstream text(config_text(cfg, 0));
    const auto back = parse_config(text);
    EXPECT_EQ(config_text(back, 0), config_text(cfg, 0));
    EXPECT_EQ(back.hash(), cfg.hash());
}

TEST(Config, Fnv1aReferenceValues)
{
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
    EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ull);
}

TEST(Config, ShippedFilesLoad)
{
    const auto def = load_config(IFA_SOURCE_DIR "/config/default.ini");
    EXPECT_EQ(def.hash(), SimulationConfig{}.hash());
    const auto lever = load_config(IFA_SOURCE_DIR "/config/aircraft_lever_arm.ini");
    EXPECT_EQ(lever.sensors.lever_arm, Vec3(2.33, 0.35, 1.35));
}

// ---- state snapshots -------------------------------------------------------

TEST(StateIo, VifSnapshotResumesBitwise)
{
    const auto& in = test::maneuvering(20.0).ideal;
    VifAligner whole(in.fixes[0].v, in.fixes[0].p, in.interval);
    VifAligner first(in.fixes[0].v, in.fixes[0].p, in.interval);
    const std::size_t split = 411;
    for (std::size_t k = 0; k < split; ++k) {
        whole.update(in.imu[k], in.fixes[k], in.fixes[k + 1]);
        first.update(in.imu[k], in.fixes[k], in.fixes[k + 1]);
    }
    VifAligner resumed(vif_state_from_json(to_json(first.state())));
    for (std::size_t k = split; k < in.imu.size(); ++k) {
        whole.update(in.imu[k], in.fixes[k], in.fixes[k + 1]);
        resumed.update(in.imu[k], in.fixes[k], in.fixes[k + 1]);
    }
    EXPECT_EQ(to_json(whole.state()), to_json(resumed.state()));
    EXPECT_EQ(whole.estimate().body_to_nav_now, resumed.estimate().body_to_nav_now);
}

TEST(StateIo, PifSnapshotResumesBitwise)
{
    const auto& in = test::maneuvering(20.0).ideal;
    PifAligner whole(in.fixes[0].v, in.fixes[0].p, in.interval);
    PifAligner first(in.fixes[0].v, in.fixes[0].p, in.interval);
    const std::size_t split = 222;
    for (std::size_t k = 0; k < split; ++k) {
        whole.update(in.imu[k], in.fixes[k], in.fixes[k + 1]);
        first.update(in.imu[k], in.fixes[k], in.fixes[k + 1]);
    }
    PifAligner resumed(pif_state_from_json(to_json(first.state())));
    for (std::size_t k = split; k < in.imu.size(); ++k) {
        whole.update(in.imu[k], in.fixes[k], in.fixes[k + 1]);
        resumed.update(in.imu[k], in.fixes[k], in.fixes[k + 1]);
    }
    EXPECT_EQ(to_json(whole.state()), to_json(resumed.state()));
}

TEST(StateIo, InitialStateRoundTrip)
{
    const VifAligner a(NavVelocity(1.0, 2.0, 3.0), {0.1, 0.2, 30.0}, 0.02);
    const auto back = vif_state_from_json(to_json(a.state()));
    EXPECT_EQ(back.updates, 0);
    EXPECT_EQ(back.v0, a.state().v0);
    EXPECT_EQ(back.p0.as_vector(), a.state().p0.as_vector());
    EXPECT_EQ(back.k.matrix(), Mat4::Zero());
}

TEST(StateIo, Errors)
{
    const VifAligner a(NavVelocity::Zero(), {0.0, 0.2, 0.0}, 0.02);
    const std::string vif = to_json(a.state());
    EXPECT_THROW(pif_state_from_json(vif), FormatError);
    EXPECT_THROW(vif_state_from_json("{not json"), FormatError);
    EXPECT_THROW(vif_state_from_json(R"({"kind":"vif"})"), FormatError);
    VifState bent = a.state();
    bent.body_chain(0, 0) = 1.1;
    EXPECT_THROW(vif_state_from_json(to_json(bent)), NotARotation);
}

// ---- Monte-Carlo -----------------------------------------------------------

TEST(Summarize, MeanAndThreeSigma)
{
    std::vector<RunSample> runs;
    const double yaw[] = {1.0, 2.0, 4.0, 7.0};
    for (int i = 0; i < 4; ++i) {
        runs.push_back({static_cast<std::uint64_t>(i), {EulerAngles{0.5, -1.0, yaw[i]}}});
    }
    const auto stats = summarize({10.0}, runs);
    ASSERT_EQ(stats.size(), 1u);
    EXPECT_EQ(stats[0].count, 4u);
    EXPECT_DOUBLE_EQ(stats[0].mean.yaw, 3.5);
    // sample variance: (6.25 + 2.25 + 0.25 + 12.25) / 3 = 7
    EXPECT_DOUBLE_EQ(stats[0].three_sigma.yaw, 3.0 * std::sqrt(7.0));
    EXPECT_EQ(stats[0].three_sigma.roll, 0.0);
    EXPECT_DOUBLE_EQ(stats[0].mean.pitch, -1.0);
}

TEST(Summarize, OrderOfRunsDoesNotMatter)
{
    std::mt19937_64 rng(42);
    std::normal_distribution<double> n(0.0, 0.1);
    std::vector<RunSample> runs;
    for (int i = 0; i < 57; ++i) {
        runs.push_back({static_cast<std::uint64_t>(i),
                        {EulerAngles{n(rng), n(rng), n(rng)}, EulerAngles{n(rng), n(rng), n(rng)}}});
    }
    const auto a = summarize({1.0, 2.0}, runs);
    std::shuffle(runs.begin(), runs.end(), rng);
    const auto b = summarize({1.0, 2.0}, runs);
    for (std::size_t e = 0; e < 2; ++e) {
        EXPECT_EQ(a[e].mean.yaw, b[e].mean.yaw);
        EXPECT_EQ(a[e].three_sigma.roll, b[e].three_sigma.roll);
        EXPECT_EQ(a[e].three_sigma.pitch, b[e].three_sigma.pitch);
    }
}

TEST(MonteCarlo, NoiseFreeRunsHaveNoScatter)
{
    const auto& sc = test::maneuvering(20.0);
    McOptions mo;
    mo.runs = 3;
    mo.epochs = {10.0, 20.0};
    const auto s = monte_carlo(sc.truth, SensorErrors::none(), mo);
    EXPECT_EQ(s.completed_runs, 3);
    for (const auto& e : s.epochs) {
        EXPECT_EQ(e.three_sigma.yaw, 0.0);
        EXPECT_EQ(e.three_sigma.roll, 0.0);
        EXPECT_LT(std::abs(e.mean.yaw), 0.01);
    }
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResults)
{
    const auto& sc = test::maneuvering(20.0);
    McOptions mo;
    mo.method = Method::pif;
    mo.runs = 7;
    mo.epochs = {5.0, 20.0};
    const auto one = monte_carlo(sc.truth, SensorErrors::reference_grade(), mo);
    mo.threads = 3;
    const auto three = monte_carlo(sc.truth, SensorErrors::reference_grade(), mo);
    EXPECT_EQ(summary_csv(one), summary_csv(three));
    EXPECT_GT(one.epochs[1].three_sigma.yaw, 0.0);
}

TEST(MonteCarlo, RejectsBadOptions)
{
    const auto& sc = test::maneuvering(20.0);
    McOptions mo;
    mo.runs = 1;
    mo.epochs = {10.0};
    EXPECT_THROW(monte_carlo(sc.truth, SensorErrors::none(), mo), InvalidArgument);
    mo.runs = 2;
    mo.epochs = {25.0};
    EXPECT_THROW(monte_carlo(sc.truth, SensorErrors::none(), mo), InvalidArgument);
}

// Two updates at rest give two parallel observations: heading stays
// unobservable and every run is excluded.
TEST(MonteCarlo, DegenerateRunsAreExcluded)
{
    const test::Scenario sc(ScenarioConfig::stationary(0.04));
    McOptions mo;
    mo.runs = 4;
    mo.epochs = {0.04};
    const auto s = monte_carlo(sc.truth, SensorErrors::none(), mo);
    EXPECT_EQ(s.completed_runs, 0);
    ASSERT_EQ(s.excluded.size(), 4u);
    EXPECT_EQ(s.excluded[2].run, 2u);
    EXPECT_EQ(s.epochs[0].count, 0u);
}

// ---- oracle ----------------------------------------------------------------

// At rest on a level, north-pointing body the frames turn with the earth only:
// single and double integrals of gravity rotated about the spin axis.
TEST(Oracle, StationaryClosedForm)
{
    const double lat = 30.0 * kDeg;
    const Trajectory traj(ScenarioConfig::stationary(600.0));
    const std::vector<double> times{100.0, 600.0};
    const auto out = oracle_integrate(traj, times, 1e-2);
    const Vec3 u(std::cos(lat), std::sin(lat), 0.0);
    const Vec3 g = gravity_n({0.0, lat, 0.0});
    const Vec3 g_par = u * u.dot(g);
    const Vec3 g_perp = g - g_par;
    for (const auto& s : out) {
        const double t = s.t;
        const double wt = kOmega * t;
        const Vec3 single = t * g_par + std::sin(wt) / kOmega * g_perp +
                            (1.0 - std::cos(wt)) / kOmega * u.cross(g);
        const Vec3 dbl = 0.5 * t * t * g_par + (1.0 - std::cos(wt)) / (kOmega * kOmega) * g_perp +
                         (t - std::sin(wt) / kOmega) / kOmega * u.cross(g);
        const Dcm spin = Eigen::AngleAxisd(wt, u).toRotationMatrix();
        EXPECT_LT((s.nav_chain - spin).norm(), 1e-14);
        EXPECT_LT((s.body_chain - spin).norm(), 1e-14);
        EXPECT_LT((s.beta_v + single).norm(), 1e-9 * single.norm());
        EXPECT_LT((s.alpha_v - s.beta_v).norm(), 1e-9 * single.norm());
        EXPECT_LT((s.beta_p + dbl).norm(), 1e-9 * dbl.norm());
        EXPECT_LT((s.alpha_p - s.beta_p).norm(), 1e-9 * dbl.norm());
    }
}

TEST(Oracle, ManeuveringResidualAndConvergence)
{
    const auto& sc = test::maneuvering(300.0);
    const std::vector<double> times{10.0};
    const auto conv = oracle_with_convergence(sc.traj, times, 2e-3);
    const auto& s = conv.samples.front();
    const Dcm cbn0 = sc.traj.attitude(0.0);
    EXPECT_LT((cbn0 * s.alpha_v - s.beta_v).norm(), 1e-9);
    EXPECT_LT((cbn0 * s.alpha_p - s.beta_p).norm(), 1e-9);
    EXPECT_LT(conv.step_change, 1e-10);
    // Fine steps sit on the rounding floor; measure the order where the
    // truncation error still dominates.
    const auto coarse = oracle_with_convergence(sc.traj, times, 0.1);
    EXPECT_NEAR(coarse.observed_order, 4.0, 0.1);
}

// ---- runner ----------------------------------------------------------------

TEST(Runner, MethodNames)
{
    EXPECT_EQ(parse_method("vif"), Method::vif);
    EXPECT_EQ(parse_method("pif"), Method::pif);
    EXPECT_EQ(method_name(Method::pif), "pif");
    EXPECT_THROW(parse_method("ekf"), InvalidArgument);
}

TEST(Runner, ReportWithoutTruthHasNoErrorColumns)
{
    const auto& in = test::maneuvering(20.0).ideal;
    RunOptions ro;
    ro.record_every = 50;
    const auto r = run_alignment(in, ro);
    EXPECT_FALSE(r.has_truth);
    EXPECT_EQ(r.rows.size(), 20u);
    EXPECT_FALSE(r.rows.back().error.has_value());
    const std::string csv = report_csv(r);
    EXPECT_EQ(csv.find("err_"), std::string::npos);
    EXPECT_NE(csv.find("t_s,roll_deg,pitch_deg,yaw_deg,degenerate"), std::string::npos);
    EXPECT_FALSE(r.degenerate_at_end);
}

TEST(Runner, RepeatedRunsAreBitwiseIdentical)
{
    const auto& sc = test::maneuvering(20.0);
    const auto e = SensorErrors::reference_grade();
    RunOptions ro;
    ro.method = Method::vif;
    ro.seed = e.rng_seed;
    const auto a = run_alignment(simulate_measurements(sc.truth, e, 3), ro, sc.truth.epochs);
    const auto b = run_alignment(simulate_measurements(sc.truth, e, 3), ro, sc.truth.epochs);
    EXPECT_EQ(report_csv(a), report_csv(b));
    EXPECT_EQ(a.final_spectrum, b.final_spectrum);
}

TEST(Runner, TwoHertzReplayStaysClose)
{
    const auto& sc = test::maneuvering(100.0);
    RunOptions ro;
    const auto exact = run_alignment(sc.ideal, ro, sc.truth.epochs);
    const auto thin = run_alignment(replay(sc.ideal, 25), ro, sc.truth.epochs);
    EXPECT_LT(std::abs(yaw_error_at(thin, 100.0) - yaw_error_at(exact, 100.0)), 0.1);
}

TEST(Runner, AttitudeErrorOfSmallYaw)
{
    const Dcm truth = euler_to_dcm({0.1, -0.2, 1.0});
    // Positive yaw turns North toward East: a negative turn about Up.
    const Dcm yawed = Eigen::AngleAxisd(-0.01, Vec3::UnitY()).toRotationMatrix() * truth;
    const EulerAngles e = attitude_error(yawed, truth);
    EXPECT_NEAR(e.yaw, 0.01, 1e-15);
    EXPECT_NEAR(e.roll, 0.0, 1e-15);
    EXPECT_NEAR(e.pitch, 0.0, 1e-15);
}
