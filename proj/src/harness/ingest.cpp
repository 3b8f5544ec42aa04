#include "ifa/harness/ingest.hpp"

#include <cmath>

#include "ifa/errors.hpp"

namespace ifa {

AidFix interpolate_fix(const AidFix& a, const AidFix& b, double t)
{
    const double span = b.t - a.t;
    const double w = span > 0.0 ? (t - a.t) / span : 0.0;
    AidFix out;
    out.t = t;
    out.v = a.v + w * (b.v - a.v);
    out.p.lat = a.p.lat + w * (b.p.lat - a.p.lat);
    out.p.h = a.p.h + w * (b.p.h - a.p.h);
    out.p.lon = GeodeticPosition::wrap_lon(a.p.lon + w * wrap_pi(b.p.lon - a.p.lon));
    return out;
}

AlignmentInput ingest_logs(const std::vector<ImuSample>& imu, const std::vector<AidFix>& gps,
                           const IngestOptions& options)
{
    const double T = options.interval;
    if (!(T > 0.0)) {
        throw InvalidArgument("update interval must be positive");
    }
    if (imu.size() < 2) {
        throw RateMismatch("need at least two IMU samples to establish the rate");
    }
    if (gps.size() < 2) {
        throw GapError("need at least two GPS fixes");
    }

    const double dt = imu[1].t_end - imu[0].t_end;
    if (std::abs(2.0 * dt - T) > 1e-6 * T) {
        throw RateMismatch("IMU period " + std::to_string(dt) + " s is not half of T = " +
                           std::to_string(T) + " s");
    }
    for (std::size_t i = 1; i < imu.size(); ++i) {
        if (std::abs(imu[i].t_end - imu[i - 1].t_end - dt) > 1e-6 * T) {
            throw RateMismatch("IMU samples not at a fixed rate near t = " +
                               std::to_string(imu[i].t_end));
        }
    }
    for (std::size_t i = 1; i < gps.size(); ++i) {
        const double gap = gps[i].t - gps[i - 1].t;
        if (!(gap > 0.0)) {
            throw FormatError("GPS time not increasing", i + 2);
        }
        if (gap > options.max_gps_gap) {
            throw GapError("GPS gap of " + std::to_string(gap) + " s at t = " +
                           std::to_string(gps[i - 1].t));
        }
    }

    const double tol = options.time_tolerance;
    const double gps_first = gps.front().t - tol;
    const double gps_last = gps.back().t + tol;

    // First sample whose start time is covered by GPS.
    std::size_t j = 0;
    while (j < imu.size() && imu[j].t_end - dt < gps_first) {
        ++j;
    }

    std::size_t g = 0;
    auto fix_at = [&](double t) {
        while (g + 2 < gps.size() && gps[g + 1].t <= t) {
            ++g;
        }
        if (std::abs(gps[g].t - t) <= tol) {
            AidFix f = gps[g];
            f.t = t;
            return f;
        }
        if (std::abs(gps[g + 1].t - t) <= tol) {
            AidFix f = gps[g + 1];
            f.t = t;
            return f;
        }
        return interpolate_fix(gps[g], gps[g + 1], t);
    };

    AlignmentInput out;
    out.interval = T;
    if (j + 1 >= imu.size() || imu[j + 1].t_end > gps_last) {
        return out;
    }
    out.fixes.push_back(fix_at(imu[j].t_end - dt));
    for (; j + 1 < imu.size() && imu[j + 1].t_end <= gps_last; j += 2) {
        out.imu.push_back({imu[j].dtheta, imu[j + 1].dtheta, imu[j].dv, imu[j + 1].dv});
        out.fixes.push_back(fix_at(imu[j + 1].t_end));
    }
    return out;
}

std::vector<AidFix> decimate_fixes(const std::vector<AidFix>& fixes, int stride)
{
    if (stride < 1) {
        throw InvalidArgument("stride must be >= 1");
    }
    std::vector<AidFix> out;
    for (std::size_t i = 0; i < fixes.size(); i += static_cast<std::size_t>(stride)) {
        out.push_back(fixes[i]);
    }
    return out;
}

std::vector<TruthSample> truth_at_fixes(const std::vector<TruthRow>& truth,
                                        const std::vector<AidFix>& fixes, double tol)
{
    std::vector<TruthSample> out;
    out.reserve(fixes.size());
    std::size_t i = 0;
    for (const auto& f : fixes) {
        while (i < truth.size() && truth[i].t < f.t - tol) {
            ++i;
        }
        if (i == truth.size() || std::abs(truth[i].t - f.t) > tol) {
            throw InvalidArgument("no truth row at t = " + std::to_string(f.t));
        }
        TruthSample s;
        s.t = truth[i].t;
        s.body_to_nav = quat_to_dcm(truth[i].q).transpose();
        s.v = truth[i].v;
        s.p = truth[i].p;
        out.push_back(s);
    }
    return out;
}

}  // namespace ifa
