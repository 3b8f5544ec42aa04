#include "ifa/aligner.hpp"

#include <cmath>

#include "ifa/errors.hpp"

namespace ifa::detail {

namespace {
constexpr double kChainRepair = 1e-12;
}

IntervalRates interval_rates(const AidFix& lower)
{
    IntervalRates r;
    r.earth_rate = earth_rate_n(lower.p.lat);
    r.nav_rate = r.earth_rate + transport_rate_n(lower.v, lower.p);
    r.gravity = gravity_n(lower.p);
    return r;
}

Vec3 linear_segment_integral(double interval, const Vec3& nav_rate, const Vec3& a, const Vec3& b)
{
    const double t = interval;
    return 0.5 * t * (a + b) + nav_rate.cross((t * t / 6.0) * a + (t * t / 3.0) * b);
}

Vec3 linear_segment_double_integral(double interval, const Vec3& nav_rate, const Vec3& a,
                                    const Vec3& b)
{
    const double t = interval;
    const double t2 = t * t;
    return (t2 / 3.0) * a + (t2 / 6.0) * b + nav_rate.cross((t2 * t / 12.0) * (a + b));
}

void check_update_inputs(double interval, const ImuInterval& imu, const AidFix& prev,
                         const AidFix& next)
{
    if (!imu.plausible()) {
        throw InvalidArgument("IMU interval is non-finite or exceeds 0.1 rad");
    }
    if (!prev.v.allFinite() || !next.v.allFinite()) {
        throw InvalidArgument("aided velocity is not finite");
    }
    const double dt = next.t - prev.t;
    if (std::abs(dt - interval) > 1e-6 * interval) {
        throw InvalidArgument("aiding fixes must bracket exactly one update interval");
    }
}

AlignmentEstimate make_estimate(std::int64_t update, double interval, const Kmatrix& k,
                                const Dcm& nav_chain, const Dcm& body_chain)
{
    AlignmentEstimate est;
    est.update = update;
    est.elapsed = static_cast<double>(update) * interval;
    est.solution = optimal_quaternion(k);
    est.body_to_nav_initial = quat_to_dcm(est.solution.q).transpose();
    est.body_to_nav_now =
        compose_attitude(nav_chain.transpose(), est.body_to_nav_initial, body_chain);
    return est;
}

Dcm advance_chain(const Dcm& chain, const RotVec& step)
{
    Dcm next = chain * rotvec_to_dcm(step);
    if (orthonormality_error(next) > kChainRepair) {
        next = orthonormalize(next);
    }
    return next;
}

}  // namespace ifa::detail
