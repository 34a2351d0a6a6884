/**
 * @file polarization.hpp
 * @brief Field-side polarization description: Pauli basis, Stokes vectors,
 *        the 2x2 coherency matrix, degree of polarization, field entropy.
 *
 * Conventions (fixed once, used consistently everywhere):
 *  - Pauli matrices are the standard ones: sigma1 = [[0,1],[1,0]],
 *    sigma2 = [[0,-i],[i,0]], sigma3 = [[1,0],[0,-1]]; sigma0 = identity.
 *  - Stokes components are the Pauli expectations in that basis:
 *    s1 = 2 Re(X*Y), s2 = 2 Im(X*Y), s3 = |X|^2 - |Y|^2 for a field (X, Y).
 *    This keeps rho = (sigma0 + s . sigma)/2 literally true with the
 *    matrices above; it differs from the common optics ordering by a
 *    relabeling of s1..s3.
 *  - Field entropy is base-2 (two-dimensional state space, maximum 1),
 *    with the 0*log(0) = 0 convention.
 *  - Stokes input is normalized to s0 = 1 on ingestion.
 */

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "polscat/linalg.hpp"

namespace polscat {

// x*log2(x) with the continuity convention at zero.
inline double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// The fixed Pauli basis sigma0..sigma3.
inline const Mat2& pauli(int k) {
    static const std::array<Mat2, 4> sigma = {
        Mat2{{{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(1, 0)}}},
        Mat2{{{cplx(0, 0), cplx(1, 0)}, {cplx(1, 0), cplx(0, 0)}}},
        Mat2{{{cplx(0, 0), cplx(0, -1)}, {cplx(0, 1), cplx(0, 0)}}},
        Mat2{{{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(-1, 0)}}},
    };
    return sigma[static_cast<std::size_t>(k)];
}

/**
 * Stokes vector (s0, s1, s2, s3).  A plain value; operations validate the
 * physicality invariants (s0 > 0, |s|^2 <= s0^2) where they require them.
 */
struct StokesVector {
    std::array<double, 4> s{};

    StokesVector() = default;
    StokesVector(double s0, double s1, double s2, double s3) : s{s0, s1, s2, s3} {}

    double operator[](int i) const { return s[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return s[static_cast<std::size_t>(i)]; }

    // Rescale so s0 = 1; rejects non-positive intensity.
    StokesVector normalized() const {
        if (!(s[0] > 0.0)) throw std::invalid_argument("StokesVector: s0 must be positive");
        return StokesVector(1.0, s[1] / s[0], s[2] / s[0], s[3] / s[0]);
    }
};

// Check the physicality invariants; tol bounds the allowed excess of
// (s1^2+s2^2+s3^2)/s0^2 over 1 after normalization.
inline void validate_stokes(const StokesVector& s, double tol = 1e-12) {
    if (!(s[0] > 0.0)) throw std::invalid_argument("StokesVector: s0 must be positive");
    for (double v : s.s)
        if (!std::isfinite(v)) throw std::invalid_argument("StokesVector: non-finite component");
    const double p2 = (s[1] * s[1] + s[2] * s[2] + s[3] * s[3]) / (s[0] * s[0]);
    if (p2 > 1.0 + tol)
        throw std::invalid_argument("StokesVector: polarized part exceeds total intensity");
}

/**
 * 2x2 coherency (density) matrix rho.  A plain value; validate_coherency
 * enforces Hermiticity, unit trace, and positive semidefiniteness.
 */
struct CoherencyMatrix {
    Mat2 rho{};
};

inline void validate_coherency(const CoherencyMatrix& c, double tol = 1e-12) {
    const Mat2& r = c.rho;
    if (std::abs(r[0][0].imag()) > tol || std::abs(r[1][1].imag()) > tol ||
        std::abs(r[0][1] - std::conj(r[1][0])) > tol)
        throw std::invalid_argument("CoherencyMatrix: not Hermitian");
    if (std::abs(trace(r).real() - 1.0) > tol)
        throw std::invalid_argument("CoherencyMatrix: trace must be 1");
    // Closed-form eigenvalues of the Hermitian 2x2: mean +- radius.
    const double mean = 0.5 * (r[0][0].real() + r[1][1].real());
    const double half_diff = 0.5 * (r[0][0].real() - r[1][1].real());
    const double radius = std::sqrt(half_diff * half_diff + std::norm(r[0][1]));
    if (mean - radius < -tol)
        throw std::invalid_argument("CoherencyMatrix: negative eigenvalue");
}

/**
 * rho = (sigma0 + s1*sigma1 + s2*sigma2 + s3*sigma3) / 2 for the normalized
 * Stokes vector.  Rejects s0 <= 0 and unphysical Stokes input.
 */
inline CoherencyMatrix coherency_from_stokes(const StokesVector& s_in) {
    validate_stokes(s_in);
    const StokesVector s = s_in.normalized();
    CoherencyMatrix c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cplx sum = 0.0;
            for (int mu = 0; mu < 4; ++mu) sum += s[mu] * pauli(mu)[i][j];
            c.rho[i][j] = 0.5 * sum;
        }
    return c;
}

/**
 * s_mu = Tr(rho * sigma_mu); the exact inverse of coherency_from_stokes for
 * unit-trace input.
 */
inline StokesVector stokes_from_coherency(const CoherencyMatrix& c) {
    validate_coherency(c);
    StokesVector s;
    for (int mu = 0; mu < 4; ++mu) s[mu] = trace(matmul(c.rho, pauli(mu))).real();
    return s;
}

/**
 * Degree of polarization P = sqrt(s1^2 + s2^2 + s3^2) / s0 in [0, 1].
 * Small floating overshoots above 1 (up to 1e-9) are clamped; larger ones
 * indicate genuinely unphysical input and are rejected.
 */
inline double degree_of_polarization(const StokesVector& s) {
    if (!(s[0] > 0.0)) throw std::invalid_argument("degree_of_polarization: s0 must be positive");
    const double p = std::sqrt(s[1] * s[1] + s[2] * s[2] + s[3] * s[3]) / s[0];
    if (p > 1.0 + 1e-9)
        throw std::invalid_argument("degree_of_polarization: ratio exceeds 1 beyond tolerance");
    return p > 1.0 ? 1.0 : p;
}

/**
 * Field entropy: the base-2 von Neumann entropy of the coherency matrix as
 * a function of the degree of polarization p.  The eigenvalues of rho are
 * (1 +- p)/2, so E(p) = -nu+ log2(nu+) - nu- log2(nu-), strictly decreasing
 * from E(0) = 1 to E(1) = 0.
 */
inline double field_entropy(double p) {
    if (!(p >= -1e-12 && p <= 1.0 + 1e-12))
        throw std::invalid_argument("field_entropy: degree of polarization outside [0, 1]");
    p = std::fmin(1.0, std::fmax(0.0, p));
    const double hi = 0.5 * (1.0 + p);
    const double lo = 0.5 * (1.0 - p);
    return -xlog2(hi) - xlog2(lo);
}

} // namespace polscat
