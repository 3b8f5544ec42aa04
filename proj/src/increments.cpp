#include "ifa/increments.hpp"

#include "ifa/errors.hpp"

namespace ifa {

bool ImuInterval::finite() const
{
    return dtheta1.allFinite() && dtheta2.allFinite() && dv1.allFinite() && dv2.allFinite();
}

bool ImuInterval::plausible() const
{
    return finite() && (dtheta1 + dtheta2).norm() < 0.1;
}

Vec3 sculling_increment(const ImuInterval& s)
{
    const Vec3 dv = s.dv1 + s.dv2;
    return dv + 0.5 * (s.dtheta1 + s.dtheta2).cross(dv) +
           (2.0 / 3.0) * (s.dtheta1.cross(s.dv2) + s.dv1.cross(s.dtheta2));
}

Vec3 double_integral_increment(const ImuInterval& s, double interval)
{
    if (!(interval > 0.0)) {
        throw InvalidArgument("update interval must be positive");
    }
    const Vec3 sum = 25.0 * s.dv1 + 5.0 * s.dv2 + 12.0 * s.dtheta1.cross(s.dv1) +
                     8.0 * s.dtheta1.cross(s.dv2) + 2.0 * s.dv1.cross(s.dtheta2) +
                     2.0 * s.dtheta2.cross(s.dv2);
    return (interval / 30.0) * sum;
}

RotVec body_rotvec(const ImuInterval& s)
{
    return s.dtheta1 + s.dtheta2 + (2.0 / 3.0) * s.dtheta1.cross(s.dtheta2);
}

}  // namespace ifa
