#include "ifa/attitude.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>

#include "ifa/errors.hpp"

namespace ifa {

namespace {

constexpr double kSeriesThreshold = 1e-7;
constexpr double kRepairThreshold = 1e-9;
constexpr double kNotRotationTol = 1e-6;

void canonicalize(double& s, Vec3& eta)
{
    bool flip = s < 0.0;
    if (s == 0.0) {
        for (int i = 0; i < 3; ++i) {
            if (eta[i] != 0.0) {
                flip = eta[i] < 0.0;
                break;
            }
        }
    }
    if (flip) {
        s = -s;
        eta = -eta;
    }
}

Mat3 axis_rotation(int axis, double angle)
{
    return Eigen::AngleAxisd(angle, Vec3::Unit(axis)).toRotationMatrix();
}

}  // namespace

UnitQuaternion::UnitQuaternion(double s, const Vec3& eta) : s_(s), eta_(eta)
{
    const double n = std::sqrt(s_ * s_ + eta_.squaredNorm());
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidArgument("quaternion must be finite and nonzero");
    }
    s_ /= n;
    eta_ /= n;
    canonicalize(s_, eta_);
}

UnitQuaternion::UnitQuaternion(const Vec4& coeffs)
    : UnitQuaternion(coeffs[0], coeffs.tail<3>())
{
}

Mat3 skew(const Vec3& a)
{
    Mat3 m;
    m << 0.0, -a[2], a[1],
         a[2], 0.0, -a[0],
        -a[1], a[0], 0.0;
    return m;
}

Vec3 vee(const Mat3& m)
{
    return 0.5 * Vec3(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1));
}

Dcm rotvec_to_dcm(const RotVec& phi)
{
    const double angle = phi.norm();
    const Mat3 px = skew(phi);
    if (angle < kSeriesThreshold) {
        return Mat3::Identity() + px + 0.5 * px * px;
    }
    return Mat3::Identity() + (std::sin(angle) / angle) * px +
           ((1.0 - std::cos(angle)) / (angle * angle)) * px * px;
}

RotVec dcm_to_rotvec(const Dcm& c)
{
    // quat_to_dcm(q) is the transpose of c, so q is the Hamilton quaternion of c.
    const UnitQuaternion q = dcm_to_quat(c.transpose());
    const double vn = q.eta().norm();
    if (vn == 0.0) {
        return RotVec::Zero();
    }
    return (2.0 * std::atan2(vn, q.s()) / vn) * q.eta();
}

Dcm quat_to_dcm(const UnitQuaternion& q)
{
    const double s = q.s();
    const Vec3& eta = q.eta();
    return (s * s - eta.squaredNorm()) * Mat3::Identity() + 2.0 * eta * eta.transpose() -
           2.0 * s * skew(eta);
}

UnitQuaternion dcm_to_quat(const Dcm& c)
{
    if (!c.allFinite() || orthonormality_error(c) > kNotRotationTol) {
        throw NotARotation("matrix is not a proper rotation");
    }
    // r = c^T has the conventional (Hamilton) form (s^2 - eta.eta) I + 2 eta eta^T + 2 s (eta x).
    const Mat3 r = c.transpose();
    const std::array<double, 4> denom = {r.trace(), r(0, 0), r(1, 1), r(2, 2)};
    int branch = 0;
    for (int i = 1; i < 4; ++i) {
        if (denom[i] > denom[branch]) {
            branch = i;
        }
    }

    double s;
    Vec3 eta;
    if (branch == 0) {
        s = 0.5 * std::sqrt(1.0 + r.trace());
        const double f = 0.25 / s;
        eta << f * (r(2, 1) - r(1, 2)), f * (r(0, 2) - r(2, 0)), f * (r(1, 0) - r(0, 1));
    } else {
        const int i = branch - 1;
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        const double ei = 0.5 * std::sqrt(1.0 + r(i, i) - r(j, j) - r(k, k));
        const double f = 0.25 / ei;
        eta[i] = ei;
        eta[j] = f * (r(i, j) + r(j, i));
        eta[k] = f * (r(i, k) + r(k, i));
        s = f * (r(k, j) - r(j, k));
    }
    return UnitQuaternion(s, eta);
}

QuatMulMatrices quat_mul_matrices(const Vec4& q)
{
    const double s = q[0];
    const Vec3 eta = q.tail<3>();
    QuatMulMatrices m;
    m.plus(0, 0) = s;
    m.plus.block<1, 3>(0, 1) = -eta.transpose();
    m.plus.block<3, 1>(1, 0) = eta;
    m.minus.topRows<1>() = m.plus.topRows<1>();
    m.minus.block<3, 1>(1, 0) = eta;
    m.plus.block<3, 3>(1, 1) = s * Mat3::Identity() + skew(eta);
    m.minus.block<3, 3>(1, 1) = s * Mat3::Identity() - skew(eta);
    return m;
}

QuatMulMatrices quat_mul_matrices(const Vec3& v)
{
    return quat_mul_matrices(Vec4(0.0, v[0], v[1], v[2]));
}

Dcm orthonormalize(const Dcm& c)
{
    Eigen::JacobiSVD<Mat3> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 r = svd.matrixU() * svd.matrixV().transpose();
    if (r.determinant() < 0.0) {
        Mat3 u = svd.matrixU();
        u.col(2) = -u.col(2);
        r = u * svd.matrixV().transpose();
    }
    return r;
}

double orthonormality_error(const Dcm& c)
{
    return std::max((c.transpose() * c - Mat3::Identity()).norm(), std::abs(c.determinant() - 1.0));
}

bool is_rotation(const Dcm& c, double tol)
{
    return c.allFinite() && orthonormality_error(c) <= tol;
}

Dcm compose_attitude(const Dcm& nav0_to_navt, const Dcm& body_to_nav_initial,
                     const Dcm& bodyt_to_body0)
{
    Dcm c = nav0_to_navt * body_to_nav_initial * bodyt_to_body0;
    if (orthonormality_error(c) > kRepairThreshold) {
        c = orthonormalize(c);
    }
    return c;
}

double rotation_angle_between(const Dcm& a, const Dcm& b)
{
    return dcm_to_rotvec(a.transpose() * b).norm();
}

double rotation_angle_between(const UnitQuaternion& a, const UnitQuaternion& b)
{
    // conj(a) (x) b
    const Vec4 ac(a.s(), -a.eta()[0], -a.eta()[1], -a.eta()[2]);
    const Vec4 d = quat_mul_matrices(ac).plus * b.coeffs();
    return 2.0 * std::atan2(d.tail<3>().norm(), std::abs(d[0]));
}

Dcm euler_to_dcm(const EulerAngles& e)
{
    // axes: 0 = North, 1 = Up, 2 = East
    return axis_rotation(1, -e.yaw) * axis_rotation(2, e.pitch) * axis_rotation(0, e.roll);
}

EulerAngles dcm_to_euler(const Dcm& c)
{
    EulerAngles e;
    const double horiz = std::hypot(c(0, 0), c(2, 0));
    e.pitch = std::atan2(c(1, 0), horiz);
    if (horiz < 1e-12) {
        const double sign = c(1, 0) > 0.0 ? 1.0 : -1.0;
        e.roll = 0.0;
        e.yaw = std::atan2(-sign * c(2, 1), c(2, 2));
    } else {
        e.yaw = std::atan2(c(2, 0), c(0, 0));
        e.roll = std::atan2(-c(1, 2), c(1, 1));
    }
    e.roll = wrap_pi(e.roll);
    e.yaw = wrap_pi(e.yaw);
    return e;
}

bool near_gimbal_lock(const Dcm& c)
{
    const double pitch = std::atan2(c(1, 0), std::hypot(c(0, 0), c(2, 0)));
    return std::abs(pitch) > std::numbers::pi / 2.0 - 1e-6;
}

double wrap_pi(double angle)
{
    constexpr double pi = std::numbers::pi;
    if (angle > -pi && angle <= pi) {
        return angle;
    }
    double w = std::remainder(angle, 2.0 * pi);
    if (w <= -pi) {
        w += 2.0 * pi;
    }
    return w;
}

}  // namespace ifa
