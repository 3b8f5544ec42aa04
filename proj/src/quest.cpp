#include "ifa/quest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace ifa {

namespace {

constexpr double kJacobiTol = 1e-14;
constexpr int kMaxSweeps = 60;
constexpr double kDegenerateRel = 1e-9;

double off_diagonal_norm(const Mat4& a)
{
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) {
                sum += a(i, j) * a(i, j);
            }
        }
    }
    return std::sqrt(sum);
}

Vec4 canonical(Vec4 v)
{
    for (int i = 0; i < 4; ++i) {
        if (v[i] != 0.0) {
            return v[i] < 0.0 ? Vec4(-v) : v;
        }
    }
    return v;
}

bool lexicographically_less(const Vec4& a, const Vec4& b)
{
    return std::lexicographical_compare(a.data(), a.data() + 4, b.data(), b.data() + 4);
}

}  // namespace

Mat4 pair_operator(const Vec3& alpha, const Vec3& beta)
{
    return quat_mul_matrices(beta).plus - quat_mul_matrices(alpha).minus;
}

void Kmatrix::accumulate(const Vec3& alpha, const Vec3& beta)
{
    const Mat4 b = pair_operator(alpha, beta);
    m_.noalias() += b.transpose() * b;
    // keep exact symmetry against rounding in the product
    m_ = 0.5 * (m_ + m_.transpose()).eval();
}

SymmetricEigen jacobi_eigen(const Mat4& input)
{
    Mat4 a = 0.5 * (input + input.transpose());
    Mat4 v = Mat4::Identity();
    const double scale = a.norm();
    int sweep = 0;
    while (sweep < kMaxSweeps && off_diagonal_norm(a) > kJacobiTol * scale) {
        ++sweep;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < 4; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::array<int, 4> order;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) < a(j, j); });
    SymmetricEigen out;
    out.sweeps = sweep;
    for (int i = 0; i < 4; ++i) {
        out.values[i] = a(order[i], order[i]);
        out.vectors.col(i) = v.col(order[i]);
    }
    return out;
}

QuaternionSolution optimal_quaternion(const Kmatrix& k)
{
    const SymmetricEigen eig = jacobi_eigen(k.matrix());
    const double tol = kDegenerateRel * std::abs(k.trace());

    QuaternionSolution sol;
    sol.lambda_min = eig.values[0];
    sol.gap = eig.values[1] - eig.values[0];
    sol.degenerate = sol.gap <= tol;

    Vec4 pick = canonical(eig.vectors.col(0));
    if (sol.degenerate) {
        for (int i = 1; i < 4 && eig.values[i] - eig.values[0] <= tol; ++i) {
            const Vec4 cand = canonical(eig.vectors.col(i));
            if (lexicographically_less(pick, cand)) {
                pick = cand;
            }
        }
    }
    sol.q = UnitQuaternion(pick);
    return sol;
}

}  // namespace ifa
