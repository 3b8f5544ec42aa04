#include "ifa/aligner_pif.hpp"

#include <utility>

#include "ifa/errors.hpp"

namespace ifa {

PifAligner::PifAligner(const NavVelocity& v0, const GeodeticPosition& p0, double interval,
                       AlignerOptions options)
    : options_(options)
{
    if (!(interval > 0.0)) {
        throw InvalidArgument("update interval must be positive");
    }
    if (options_.solve_every < 1) {
        throw InvalidArgument("solve_every must be >= 1");
    }
    state_.interval = interval;
    state_.v0 = v0;
    state_.p0 = p0;
}

PifAligner::PifAligner(PifState state, AlignerOptions options)
    : state_(std::move(state)), options_(options)
{
    if (!(state_.interval > 0.0)) {
        throw InvalidArgument("update interval must be positive");
    }
}

std::optional<AlignmentEstimate> PifAligner::update(const ImuInterval& imu, const AidFix& prev,
                                                    const AidFix& next)
{
    auto& s = state_;
    const double t = s.interval;
    detail::check_update_inputs(t, imu, prev, next);
    const auto rates = detail::interval_rates(prev);
    const Vec3& w = rates.nav_rate;

    const Dcm nav_prev = s.nav_chain;
    const Dcm body_prev = s.body_chain;
    s.nav_chain = detail::advance_chain(nav_prev, t * w);
    s.body_chain = detail::advance_chain(body_prev, body_rotvec(imu));

    // alpha_p: carried single integral times T plus this interval's double integral
    s.alpha_p += t * s.body_prefix + body_prev * double_integral_increment(imu, t);
    s.body_prefix += body_prev * sculling_increment(imu);

    s.u_r += nav_prev * detail::linear_segment_integral(t, w, prev.v, next.v);

    const Vec3 ev_prev = rates.earth_rate.cross(prev.v);
    const Vec3 ev_next = rates.earth_rate.cross(next.v);
    s.u_v += nav_prev * detail::linear_segment_double_integral(t, w, ev_prev, ev_next) +
             t * s.nav_prefix_v;
    s.nav_prefix_v += nav_prev * detail::linear_segment_integral(t, w, ev_prev, ev_next);

    const Vec3& g = rates.gravity;
    s.u_g += nav_prev * ((0.5 * t * t) * g + (t * t * t / 6.0) * w.cross(g)) + t * s.nav_prefix_g;
    s.nav_prefix_g += nav_prev * (t * g + (0.5 * t * t) * w.cross(g));

    s.r_n += 0.5 * t * (prev.v + next.v);

    ++s.updates;
    const double elapsed = static_cast<double>(s.updates) * t;
    s.beta_p = s.u_r - elapsed * s.v0 + s.u_v - s.u_g;

    s.k.accumulate(s.alpha_p, s.beta_p);

    if (s.updates % options_.solve_every != 0) {
        return std::nullopt;
    }
    return estimate();
}

AlignmentEstimate PifAligner::estimate() const
{
    return detail::make_estimate(state_.updates, state_.interval, state_.k, state_.nav_chain,
                                 state_.body_chain);
}

}  // namespace ifa
