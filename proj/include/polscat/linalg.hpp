/**
 * @file linalg.hpp
 * @brief Small fixed-size complex linear algebra: 2x2 / 4x4 matrices, the
 *        Kronecker product, and a Jacobi eigensolver for 4x4 Hermitian
 *        matrices.
 *
 * Everything here operates on plain std::array value types; no allocation,
 * no shared state, safe to call concurrently.
 *
 * The eigensolver is a cyclic Jacobi iteration with complex Givens
 * rotations.  At this fixed 4x4 size Jacobi is unconditionally stable,
 * converges quadratically, and needs no external dependency; the sweep stops
 * once the off-diagonal Frobenius norm drops below 1e-13.
 */

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace polscat {

using cplx = std::complex<double>;
using Mat2 = std::array<std::array<cplx, 2>, 2>;
using Mat4 = std::array<std::array<cplx, 4>, 4>;
using Mat4d = std::array<std::array<double, 4>, 4>;

inline Mat2 matmul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

inline Mat2 adjoint(const Mat2& a) {
    return Mat2{{{std::conj(a[0][0]), std::conj(a[1][0])},
                 {std::conj(a[0][1]), std::conj(a[1][1])}}};
}

inline cplx trace(const Mat2& a) { return a[0][0] + a[1][1]; }

inline double frobenius_sq(const Mat2& a) {
    double s = 0.0;
    for (const auto& row : a)
        for (const auto& v : row) s += std::norm(v);
    return s;
}

inline Mat2 conj_entrywise(const Mat2& a) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = std::conj(a[i][j]);
    return r;
}

// Kronecker product with row-major index pairing:
// (A (x) B)[2i+k][2j+l] = A[i][j] * B[k][l].
inline Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
    return r;
}

inline cplx trace(const Mat4& a) {
    return a[0][0] + a[1][1] + a[2][2] + a[3][3];
}

// Frobenius norm of the off-diagonal part; the Jacobi convergence measure.
inline double offdiag_norm(const Mat4& a) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) s += std::norm(a[i][j]);
    return std::sqrt(s);
}

/**
 * Eigenvalues of a 4x4 Hermitian matrix by the cyclic Jacobi method,
 * returned sorted in descending order.
 *
 * Each rotation zeroes one off-diagonal pair (p,q): the complex phase of
 * a_pq is absorbed into the rotation, reducing the 2x2 pivot block to the
 * real symmetric case, which is then annihilated by the classic tangent
 * formula t^2 + 2*tau*t - 1 = 0 with the smaller-angle root.  The input is
 * taken by value; only the (numerically Hermitian) matrix content matters,
 * and the strict upper triangle is mirrored from the lower before iterating.
 */
inline std::array<double, 4> jacobi_eigenvalues(Mat4 a) {
    // Symmetrize exactly so rounding in the caller cannot bias the sweep.
    for (int i = 0; i < 4; ++i) {
        a[i][i] = cplx(a[i][i].real(), 0.0);
        for (int j = i + 1; j < 4; ++j) {
            const cplx m = 0.5 * (a[i][j] + std::conj(a[j][i]));
            a[i][j] = m;
            a[j][i] = std::conj(m);
        }
    }

    constexpr double kOffTol = 1e-13;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && offdiag_norm(a) >= kOffTol; ++sweep) {
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const cplx apq = a[p][q];
                const double mag = std::abs(apq);
                if (mag < 1e-300) {
                    a[p][q] = a[q][p] = 0.0;
                    continue;
                }
                const cplx phase = apq / mag;
                const double app = a[p][p].real();
                const double aqq = a[q][q].real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                a[p][p] = cplx(app - t * mag, 0.0);
                a[q][q] = cplx(aqq + t * mag, 0.0);
                a[p][q] = a[q][p] = 0.0;
                for (int r = 0; r < 4; ++r) {
                    if (r == p || r == q) continue;
                    const cplx arp = a[r][p];
                    const cplx arq = a[r][q];
                    const cplx nrp = arp * (phase * c) - arq * s;
                    const cplx nrq = arp * (phase * s) + arq * c;
                    a[r][p] = nrp;
                    a[p][r] = std::conj(nrp);
                    a[r][q] = nrq;
                    a[q][r] = std::conj(nrq);
                }
            }
        }
    }

    std::array<double, 4> ev{a[0][0].real(), a[1][1].real(), a[2][2].real(),
                             a[3][3].real()};
    // Descending insertion sort; four elements.
    for (int i = 1; i < 4; ++i)
        for (int j = i; j > 0 && ev[j] > ev[j - 1]; --j)
            std::swap(ev[j], ev[j - 1]);
    return ev;
}

} // namespace polscat
