// Rotation algebra: quaternions, DCMs, rotation vectors and Euler angles.
#pragma once

#include <Eigen/Dense>

#include "ifa/earth.hpp"

namespace ifa {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

/// Direction cosine matrix. C_a^b maps vectors resolved in frame a into frame b.
using Dcm = Eigen::Matrix3d;

/// Rotation vector (rad); direction is the axis, norm the angle.
using RotVec = Eigen::Vector3d;

/// Unit quaternion, scalar first. Stored canonically with s >= 0.
///
/// The attitude convention follows the alignment formulation: q encodes the
/// nav-to-body DCM through quat_to_dcm(), i.e. C_n^b = quat_to_dcm(q) and the
/// body-to-nav matrix is its transpose.
class UnitQuaternion {
public:
    UnitQuaternion() = default;

    /// Normalizes and canonicalizes; throws InvalidArgument on a zero vector.
    UnitQuaternion(double s, const Vec3& eta);
    explicit UnitQuaternion(const Vec4& coeffs);

    static UnitQuaternion identity() { return {}; }

    double s() const { return s_; }
    const Vec3& eta() const { return eta_; }
    Vec4 coeffs() const { return {s_, eta_[0], eta_[1], eta_[2]}; }

private:
    double s_ = 1.0;
    Vec3 eta_ = Vec3::Zero();
};

/// (a x) such that skew(a) * b == a.cross(b).
Mat3 skew(const Vec3& a);

/// Inverse of skew() on the antisymmetric part of m.
Vec3 vee(const Mat3& m);

/// Rodrigues formula; switches to a two-term series below 1e-7 rad.
Dcm rotvec_to_dcm(const RotVec& phi);

/// Rotation vector of a DCM (principal log), angle in [0, pi].
RotVec dcm_to_rotvec(const Dcm& c);

/// (s^2 - eta.eta) I + 2 eta eta^T - 2 s (eta x): the nav-to-body DCM for q.
Dcm quat_to_dcm(const UnitQuaternion& q);

/// Inverse of quat_to_dcm (Shepperd branch selection). Throws NotARotation
/// when the input is off SO(3) by more than 1e-6.
UnitQuaternion dcm_to_quat(const Dcm& c);

struct QuatMulMatrices {
    Mat4 plus;   // [q+]: q (x) p == plus * p
    Mat4 minus;  // [q-]: p (x) q == minus * p
};

/// Quaternion multiplication matrices of an arbitrary 4-vector (not
/// necessarily unit). A 3-vector enters as the pure quaternion (0, v).
QuatMulMatrices quat_mul_matrices(const Vec4& q);
QuatMulMatrices quat_mul_matrices(const Vec3& v);

/// Attitude chain rule: C_b^n(t) = C_{n(0)}^{n(t)} C_b^n(0) C_{b(t)}^{b(0)}.
/// Renormalizes when the product drifts off SO(3) by more than 1e-9.
Dcm compose_attitude(const Dcm& nav0_to_navt, const Dcm& body_to_nav_initial,
                     const Dcm& bodyt_to_body0);

/// Nearest orthonormal matrix (symmetric orthogonalization).
Dcm orthonormalize(const Dcm& c);

/// max(||C^T C - I||_F, |det C - 1|)
double orthonormality_error(const Dcm& c);
bool is_rotation(const Dcm& c, double tol = 1e-10);

/// Angle (rad) of the rotation taking a to b.
double rotation_angle_between(const Dcm& a, const Dcm& b);
double rotation_angle_between(const UnitQuaternion& a, const UnitQuaternion& b);

/// Body attitude as heading about Up, then pitch about the rotated East axis,
/// then roll about the twice-rotated North axis. Angles in rad; yaw is
/// positive from North toward East, pitch positive nose up, roll positive
/// right wing down.
struct EulerAngles {
    double roll = 0.0;
    double pitch = 0.0;
    double yaw = 0.0;
};

/// Body-to-nav DCM for the given angles.
Dcm euler_to_dcm(const EulerAngles& e);
EulerAngles dcm_to_euler(const Dcm& body_to_nav);

/// True when |pitch| is within 1e-6 rad of +-pi/2, where roll and yaw are
/// no longer separable. Extraction still succeeds (roll is set to 0).
bool near_gimbal_lock(const Dcm& body_to_nav);

/// Wraps into (-pi, pi].
double wrap_pi(double angle);

}  // namespace ifa
