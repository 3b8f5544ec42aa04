// Optimal initial-attitude quaternion from accumulated vector pairs.
//
// Every pair (alpha, beta) with C_b^n(0) alpha = beta contributes
// B^T B to K, where B = [beta+] - [alpha-]. The attitude minimizing
// q^T K q over unit q is the eigenvector of the smallest eigenvalue.
#pragma once

#include "ifa/attitude.hpp"

namespace ifa {

/// 4x4 symmetric positive semidefinite accumulation matrix.
class Kmatrix {
public:
    Kmatrix() : m_(Mat4::Zero()) {}
    explicit Kmatrix(const Mat4& m) : m_(m) {}

    /// Adds the pair (alpha in body(0), beta in nav(0)).
    void accumulate(const Vec3& alpha, const Vec3& beta);

    const Mat4& matrix() const { return m_; }
    double trace() const { return m_.trace(); }

private:
    Mat4 m_;
};

/// The residual operator [beta+] - [alpha-] of one pair.
Mat4 pair_operator(const Vec3& alpha, const Vec3& beta);

struct SymmetricEigen {
    Vec4 values;   // ascending
    Mat4 vectors;  // column i pairs with values[i]
    int sweeps = 0;
};

/// Cyclic Jacobi eigen-decomposition of a symmetric 4x4 matrix. Iterates
/// until the off-diagonal Frobenius norm is below 1e-14 of the total norm.
SymmetricEigen jacobi_eigen(const Mat4& a);

struct QuaternionSolution {
    UnitQuaternion q;
    double lambda_min = 0.0;
    /// Second-smallest minus smallest eigenvalue.
    double gap = 0.0;
    /// gap below 1e-9 * trace: the attitude is not (yet) observable and q is
    /// the tie-broken pick among the near-degenerate eigenvectors.
    bool degenerate = false;
};

/// Smallest-eigenvalue eigenvector of K, canonical sign s >= 0.
QuaternionSolution optimal_quaternion(const Kmatrix& k);

}  // namespace ifa
