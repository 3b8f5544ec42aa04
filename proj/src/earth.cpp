#include "ifa/earth.hpp"

#include <cmath>
#include <numbers>

#include "ifa/errors.hpp"

namespace ifa {

namespace {

constexpr double kPolarCosLimit = 1e-9;

void require_off_pole(double lat)
{
    if (std::abs(std::cos(lat)) < kPolarCosLimit) {
        throw PolarSingularity("local-level frame undefined at the pole");
    }
}

}  // namespace

double GeodeticPosition::wrap_lon(double lon)
{
    constexpr double pi = std::numbers::pi;
    if (lon > -pi && lon <= pi) {
        return lon;
    }
    double w = std::remainder(lon, 2.0 * pi);
    if (w <= -pi) {
        w += 2.0 * pi;
    }
    return w;
}

Radii radii_of_curvature(double lat)
{
    using namespace wgs84;
    const double s = std::sin(lat);
    const double w2 = 1.0 - kEccentricitySq * s * s;
    const double w = std::sqrt(w2);
    return {kSemiMajorAxis * (1.0 - kEccentricitySq) / (w2 * w), kSemiMajorAxis / w};
}

Mat3 curvature_matrix(const GeodeticPosition& p)
{
    require_off_pole(p.lat);
    const auto r = radii_of_curvature(p.lat);
    Mat3 rc = Mat3::Zero();
    rc(0, 2) = 1.0 / ((r.transverse + p.h) * std::cos(p.lat));
    rc(1, 0) = 1.0 / (r.meridian + p.h);
    rc(2, 1) = 1.0;
    return rc;
}

Mat3 inverse_curvature_matrix(const GeodeticPosition& p)
{
    require_off_pole(p.lat);
    const auto r = radii_of_curvature(p.lat);
    Mat3 inv = Mat3::Zero();
    inv(0, 1) = r.meridian + p.h;
    inv(1, 2) = 1.0;
    inv(2, 0) = (r.transverse + p.h) * std::cos(p.lat);
    return inv;
}

Vec3 earth_rate_n(double lat)
{
    return {wgs84::kRotationRate * std::cos(lat), wgs84::kRotationRate * std::sin(lat), 0.0};
}

Vec3 transport_rate_n(const NavVelocity& v, const GeodeticPosition& p)
{
    require_off_pole(p.lat);
    const auto r = radii_of_curvature(p.lat);
    const double re = r.transverse + p.h;
    return {v[2] / re, v[2] * std::tan(p.lat) / re, -v[0] / (r.meridian + p.h)};
}

Vec3 nav_rate_n(const NavVelocity& v, const GeodeticPosition& p)
{
    return earth_rate_n(p.lat) + transport_rate_n(v, p);
}

double gravity_magnitude(double lat, double h)
{
    using namespace wgs84;
    const double s2 = std::sin(lat) * std::sin(lat);
    const double normal =
        kEquatorGravity * (1.0 + kSomiglianaK * s2) / std::sqrt(1.0 - kEccentricitySq * s2);
    return normal - kFreeAirGradient * h;
}

Vec3 gravity_n(const GeodeticPosition& p)
{
    return {0.0, -gravity_magnitude(p.lat, p.h), 0.0};
}

Mat3 nav_to_ecef(const GeodeticPosition& p)
{
    const double sl = std::sin(p.lat), cl = std::cos(p.lat);
    const double so = std::sin(p.lon), co = std::cos(p.lon);
    Mat3 c;
    c.col(0) << -sl * co, -sl * so, cl;
    c.col(1) << cl * co, cl * so, sl;
    c.col(2) << -so, co, 0.0;
    return c;
}

}  // namespace ifa
