#include "ifa/aligner_vif.hpp"

#include <utility>

#include "ifa/errors.hpp"

namespace ifa {

VifAligner::VifAligner(const NavVelocity& v0, const GeodeticPosition& p0, double interval,
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

VifAligner::VifAligner(VifState state, AlignerOptions options)
    : state_(std::move(state)), options_(options)
{
    if (!(state_.interval > 0.0)) {
        throw InvalidArgument("update interval must be positive");
    }
}

std::optional<AlignmentEstimate> VifAligner::update(const ImuInterval& imu, const AidFix& prev,
                                                    const AidFix& next)
{
    const double t = state_.interval;
    detail::check_update_inputs(t, imu, prev, next);
    const auto rates = detail::interval_rates(prev);

    const Dcm nav_prev = state_.nav_chain;
    const Dcm body_prev = state_.body_chain;

    state_.nav_chain = detail::advance_chain(nav_prev, t * rates.nav_rate);
    state_.body_chain = detail::advance_chain(body_prev, body_rotvec(imu));

    state_.alpha_v += body_prev * sculling_increment(imu);

    const Vec3 coriolis = detail::linear_segment_integral(
        t, rates.nav_rate, rates.earth_rate.cross(prev.v), rates.earth_rate.cross(next.v));
    const Vec3 grav = t * rates.gravity + (0.5 * t * t) * rates.nav_rate.cross(rates.gravity);
    state_.beta_prime_v += nav_prev * (coriolis - grav);
    state_.beta_v = state_.nav_chain * next.v - state_.v0 + state_.beta_prime_v;

    state_.k.accumulate(state_.alpha_v, state_.beta_v);
    ++state_.updates;

    if (state_.updates % options_.solve_every != 0) {
        return std::nullopt;
    }
    return estimate();
}

AlignmentEstimate VifAligner::estimate() const
{
    return detail::make_estimate(state_.updates, state_.interval, state_.k, state_.nav_chain,
                                 state_.body_chain);
}

}  // namespace ifa
