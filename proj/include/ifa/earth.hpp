// WGS-84 earth model and local-level frame quantities.
//
// The navigation frame is North-Up-East throughout the library; vectors
// resolved in it are ordered [N, U, E].
#pragma once

#include <Eigen/Dense>

namespace ifa {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Ground velocity in the navigation frame, [v_N, v_U, v_E] (m/s).
using NavVelocity = Eigen::Vector3d;

namespace wgs84 {
inline constexpr double kSemiMajorAxis = 6378137.0;          // m
inline constexpr double kFlattening = 1.0 / 298.257223563;
inline constexpr double kEccentricitySq = kFlattening * (2.0 - kFlattening);
inline constexpr double kRotationRate = 7.292115e-5;          // rad/s
inline constexpr double kEquatorGravity = 9.7803253359;       // m/s^2
inline constexpr double kSomiglianaK = 0.00193185265241;
inline constexpr double kFreeAirGradient = 3.086e-6;          // 1/s^2
inline constexpr double kStandardGravity = 9.80665;           // m/s^2, unit conversion only
}  // namespace wgs84

/// Curvilinear position: longitude, latitude (rad) and ellipsoidal height (m).
struct GeodeticPosition {
    double lon = 0.0;
    double lat = 0.0;
    double h = 0.0;

    /// [lon, lat, h], the ordering used by the curvature matrix.
    Vec3 as_vector() const { return {lon, lat, h}; }
    static GeodeticPosition from_vector(const Vec3& p) { return {wrap_lon(p[0]), p[1], p[2]}; }

    /// Wraps longitude into (-pi, pi].
    static double wrap_lon(double lon);
};

struct Radii {
    double meridian;    // R_N
    double transverse;  // R_E
};

Radii radii_of_curvature(double lat);

/// R_c with p_dot = R_c * v^n, p = [lon, lat, h]. Throws PolarSingularity.
Mat3 curvature_matrix(const GeodeticPosition& p);
Mat3 inverse_curvature_matrix(const GeodeticPosition& p);

Vec3 earth_rate_n(double lat);

/// Transport rate of the N-U-E frame over the ellipsoid. Throws PolarSingularity.
Vec3 transport_rate_n(const NavVelocity& v, const GeodeticPosition& p);

/// Navigation-frame rate with respect to inertial space, earth + transport.
Vec3 nav_rate_n(const NavVelocity& v, const GeodeticPosition& p);

/// Somigliana normal gravity with a linear free-air correction.
double gravity_magnitude(double lat, double h);
Vec3 gravity_n(const GeodeticPosition& p);

/// Orientation of the N-U-E frame with respect to the earth-fixed frame (C_n^e);
/// columns are the N, U, E axes in ECEF.
Mat3 nav_to_ecef(const GeodeticPosition& p);

}  // namespace ifa
