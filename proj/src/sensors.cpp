#include "ifa/sensors.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "ifa/errors.hpp"

namespace ifa {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;
constexpr double kDegPerHour = kDeg / 3600.0;
constexpr double kMicroG = 1e-6 * wgs84::kStandardGravity;

struct RateIntegral {
    Vec3 angle = Vec3::Zero();
    Vec3 velocity = Vec3::Zero();
};

RateIntegral integrate_rates(const Trajectory& traj, double a, double b)
{
    static const std::array<double, 3> nodes = {-std::sqrt(0.6), 0.0, std::sqrt(0.6)};
    static const std::array<double, 3> weights = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
    const double span = b - a;
    const int n = std::max(1, static_cast<int>(std::ceil(span / traj.config().truth_step - 1e-9)));
    const double h = span / n;
    RateIntegral out;
    for (int i = 0; i < n; ++i) {
        const double mid = a + (i + 0.5) * h;
        for (int j = 0; j < 3; ++j) {
            const TruthSample s = traj.sample(mid + 0.5 * h * nodes[j]);
            out.angle += (0.5 * h * weights[j]) * s.angular_rate;
            out.velocity += (0.5 * h * weights[j]) * s.specific_force;
        }
    }
    return out;
}

Vec3 gaussian3(std::mt19937_64& rng, double sigma)
{
    if (sigma == 0.0) {
        return Vec3::Zero();
    }
    std::normal_distribution<double> n(0.0, sigma);
    const double x = n(rng);
    const double y = n(rng);
    const double z = n(rng);
    return {x, y, z};
}

}  // namespace

void SensorErrors::validate() const
{
    if (gyro_drift < 0.0 || gyro_noise_psd < 0.0 || accel_bias < 0.0 || accel_noise_psd < 0.0 ||
        gps_vel_sigma < 0.0 || gps_pos_sigma < 0.0) {
        throw InvalidArgument("sensor error magnitudes must be non-negative");
    }
    if (!lever_arm.allFinite()) {
        throw InvalidArgument("lever arm must be finite");
    }
}

SensorErrors SensorErrors::reference_grade()
{
    SensorErrors e;
    e.gyro_drift = 0.01;
    e.gyro_noise_psd = 0.1;
    e.accel_bias = 50.0;
    e.accel_noise_psd = 500.0;
    e.gps_vel_sigma = 0.1;
    e.gps_pos_sigma = 2.0;
    e.lever_arm = Vec3(1.0, 1.0, 1.0);
    return e;
}

RunStreams RunStreams::make(std::uint64_t seed, std::uint64_t run)
{
    const auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x & 0xffffffffu); };
    const auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
    std::seed_seq imu_seq{lo(seed), hi(seed), lo(run), hi(run), 1u};
    std::seed_seq gps_seq{lo(seed), hi(seed), lo(run), hi(run), 2u};
    return {std::mt19937_64(imu_seq), std::mt19937_64(gps_seq)};
}

TruthRecord record_truth(const Trajectory& traj)
{
    const auto& cfg = traj.config();
    const std::int64_t m = cfg.update_count();
    const double t = cfg.interval;
    TruthRecord rec;
    rec.interval = t;
    rec.imu.reserve(static_cast<std::size_t>(m));
    rec.epochs.reserve(static_cast<std::size_t>(m) + 1);
    rec.epochs.push_back(traj.sample(0.0));
    for (std::int64_t k = 0; k < m; ++k) {
        const double t0 = static_cast<double>(k) * t;
        const double tm = (static_cast<double>(k) + 0.5) * t;
        const double t1 = static_cast<double>(k + 1) * t;
        const RateIntegral first = integrate_rates(traj, t0, tm);
        const RateIntegral second = integrate_rates(traj, tm, t1);
        rec.imu.push_back({first.angle, second.angle, first.velocity, second.velocity});
        rec.epochs.push_back(traj.sample(t1));
    }
    return rec;
}

std::vector<ImuInterval> sample_imu(const TruthRecord& truth, const SensorErrors& errors,
                                    std::mt19937_64& rng)
{
    errors.validate();
    const double dt = 0.5 * truth.interval;
    const double rate = 1.0 / dt;

    Vec3 drift = Vec3::Constant(errors.gyro_drift * kDegPerHour);
    Vec3 bias = Vec3::Constant(errors.accel_bias * kMicroG);
    if (errors.random_bias) {
        drift = gaussian3(rng, errors.gyro_drift * kDegPerHour);
        bias = gaussian3(rng, errors.accel_bias * kMicroG);
    }
    // white rate noise of density psd has per-sample sigma psd * sqrt(rate),
    // i.e. psd / sqrt(rate) on the increment
    const double gyro_sigma = errors.gyro_noise_psd * kDegPerHour / std::sqrt(rate);
    const double accel_sigma = errors.accel_noise_psd * kMicroG / std::sqrt(rate);

    std::vector<ImuInterval> out;
    out.reserve(truth.imu.size());
    for (const ImuInterval& exact : truth.imu) {
        ImuInterval s = exact;
        s.dtheta1 += drift * dt + gaussian3(rng, gyro_sigma);
        s.dv1 += bias * dt + gaussian3(rng, accel_sigma);
        s.dtheta2 += drift * dt + gaussian3(rng, gyro_sigma);
        s.dv2 += bias * dt + gaussian3(rng, accel_sigma);
        out.push_back(s);
    }
    return out;
}

AidFix gps_antenna(const TruthSample& truth, const Vec3& lever_arm)
{
    AidFix fix;
    fix.t = truth.t;
    fix.v = truth.v;
    fix.p = truth.p;
    if (lever_arm.isZero()) {
        return fix;
    }
    const Dcm& cbn = truth.body_to_nav;
    const Vec3 lever_n = cbn * lever_arm;
    // w_eb^b: body rate with respect to the earth-fixed frame
    const Vec3 w_eb = truth.angular_rate - cbn.transpose() * earth_rate_n(truth.p.lat);
    fix.v += cbn * w_eb.cross(lever_arm);
    fix.p = GeodeticPosition::from_vector(truth.p.as_vector() + curvature_matrix(truth.p) * lever_n);
    return fix;
}

AidFix gps_measure(const TruthSample& truth, const SensorErrors& errors, std::mt19937_64& rng)
{
    AidFix fix = gps_antenna(truth, errors.lever_arm);
    const Vec3 dr = gaussian3(rng, errors.gps_pos_sigma);
    const Vec3 dv = gaussian3(rng, errors.gps_vel_sigma);
    fix.v += dv;
    if (!dr.isZero()) {
        fix.p = GeodeticPosition::from_vector(fix.p.as_vector() + curvature_matrix(fix.p) * dr);
    }
    return fix;
}

AlignmentInput simulate_measurements(const TruthRecord& truth, const SensorErrors& errors,
                                     std::uint64_t run)
{
    RunStreams streams = RunStreams::make(errors.rng_seed, run);
    AlignmentInput in;
    in.interval = truth.interval;
    in.imu = sample_imu(truth, errors, streams.imu);
    in.fixes.reserve(truth.epochs.size());
    for (const TruthSample& epoch : truth.epochs) {
        in.fixes.push_back(gps_measure(epoch, errors, streams.gps));
    }
    return in;
}

}  // namespace ifa
