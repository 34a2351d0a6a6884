/**
 * @file mueller.hpp
 * @brief Mueller matrix characterization: the Hermitian H matrix, its
 *        eigenspectrum, depolarization index, polarization entropy,
 *        physical realizability, and the Jones -> Mueller map.
 *
 * The central object is the 4x4 Hermitian matrix
 *
 *     H = (1/4) sum_{mu,nu} m[mu][nu] (sigma_mu (x) conj(sigma_nu)),
 *
 * with the row-major Kronecker pairing (A (x) B)[2i+k][2j+l] = A[i][j]B[k][l].
 * H has trace m[0][0] = 1, and M is a physically realizable scattering map
 * exactly when H is positive semidefinite (H is the analogue of a quantum
 * channel's Choi matrix).  Writing lambda_0..lambda_3 for H's eigenvalues:
 *
 *     depolarization index  D = sqrt((4 sum lambda^2 - 1) / 3)
 *                             = sqrt((Tr(M^T M)/3 - 1/3))        (identity)
 *     polarization entropy  E = -sum lambda log4(lambda)
 *
 * Both lie in [0, 1]; D = 1 and E = 0 characterize non-depolarizing
 * (single Jones matrix) media.
 */

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "polscat/linalg.hpp"
#include "polscat/polarization.hpp"

namespace polscat {

// x*log4(x) with the 0*log(0) = 0 convention; base 4 makes the maximally
// mixed four-level spectrum {1/4,1/4,1/4,1/4} have entropy exactly 1.
inline double xlog4(double x) {
    return x > 0.0 ? x * std::log(x) * 0.7213475204444817 : 0.0; // 1/ln(4)
}

/**
 * 4x4 real Mueller matrix, normalized so m[0][0] = 1.  Use from_raw() to
 * ingest measured data (divides by m[0][0], rejecting m[0][0] <= 0);
 * identity()/diagonal() build common cases already normalized.
 */
struct MuellerMatrix {
    Mat4d m{};

    static MuellerMatrix from_raw(const Mat4d& raw) {
        for (const auto& row : raw)
            for (double v : row)
                if (!std::isfinite(v))
                    throw std::invalid_argument("MuellerMatrix: non-finite entry");
        const double m00 = raw[0][0];
        if (!(m00 > 0.0))
            throw std::invalid_argument("MuellerMatrix: m[0][0] must be positive");
        MuellerMatrix out;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out.m[i][j] = raw[i][j] / m00;
        out.m[0][0] = 1.0; // x/x is exact, but make the invariant explicit
        return out;
    }

    static MuellerMatrix identity() {
        return diagonal(1.0, 1.0, 1.0, 1.0);
    }

    static MuellerMatrix diagonal(double a, double b, double c, double d) {
        Mat4d raw{};
        raw[0][0] = a; raw[1][1] = b; raw[2][2] = c; raw[3][3] = d;
        return from_raw(raw);
    }

    const std::array<double, 4>& operator[](int i) const {
        return m[static_cast<std::size_t>(i)];
    }
};

/// 2x2 complex Jones (amplitude transfer) matrix.
struct JonesMatrix {
    Mat2 t{};
};

/// 4x4 Hermitian unit-trace H matrix.
struct HMatrix {
    Mat4 h{};
};

inline void validate_h(const HMatrix& hm, double tol = 1e-12) {
    const Mat4& h = hm.h;
    for (int i = 0; i < 4; ++i) {
        if (std::abs(h[i][i].imag()) > tol)
            throw std::invalid_argument("HMatrix: diagonal not real");
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(h[i][j] - std::conj(h[j][i])) > tol)
                throw std::invalid_argument("HMatrix: not Hermitian");
    }
    if (std::abs(trace(h).real() - 1.0) > tol)
        throw std::invalid_argument("HMatrix: trace must be 1");
}

/// H = (1/4) sum_{mu,nu} m[mu][nu] (sigma_mu (x) conj(sigma_nu)).
inline HMatrix h_from_mueller(const MuellerMatrix& mm) {
    HMatrix out;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const double w = 0.25 * mm.m[mu][nu];
            if (w == 0.0) continue;
            const Mat4 k = kron(pauli(mu), conj_entrywise(pauli(nu)));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) out.h[i][j] += w * k[i][j];
        }
    }
    return out;
}

/**
 * Inverse map via Pauli trace orthogonality:
 * m[mu][nu] = Tr(H (sigma_mu (x) conj(sigma_nu))).  The reconstruction must
 * come out real; imaginary residues above 1e-9 mean the input was not a
 * valid H matrix and are rejected.
 */
inline MuellerMatrix mueller_from_h(const HMatrix& hm) {
    validate_h(hm);
    MuellerMatrix out;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const Mat4 k = kron(pauli(mu), conj_entrywise(pauli(nu)));
            cplx t = 0.0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) t += hm.h[i][j] * k[j][i];
            if (std::abs(t.imag()) > 1e-9)
                throw std::invalid_argument("mueller_from_h: reconstructed entry not real");
            out.m[mu][nu] = t.real();
        }
    }
    return out;
}

/**
 * Eigenvalue spectrum of an H matrix: four reals sorted descending, summing
 * to 1.  from_values() canonicalizes raw eigenvalues: sorts, clips small
 * negatives in [-1e-9, 0) to zero (measurement noise), renormalizes the sum
 * to exactly 1, and rejects anything more negative (unphysical spectrum).
 */
struct EigenSpectrum {
    std::array<double, 4> lambda{};

    static EigenSpectrum from_values(std::array<double, 4> v) {
        double raw_sum = 0.0;
        for (double x : v) {
            if (!std::isfinite(x))
                throw std::invalid_argument("EigenSpectrum: non-finite eigenvalue");
            if (x < -1e-9)
                throw std::domain_error("EigenSpectrum: negative eigenvalue beyond tolerance");
            raw_sum += x;
        }
        // Check the sum before clipping: clipping may legitimately shift it
        // by up to 4e-9, which renormalization then absorbs.
        if (std::abs(raw_sum - 1.0) > 1e-10)
            throw std::invalid_argument("EigenSpectrum: eigenvalues must sum to 1");
        for (double& x : v)
            if (x < 0.0) x = 0.0;
        for (int i = 1; i < 4; ++i)
            for (int j = i; j > 0 && v[j] > v[j - 1]; --j)
                std::swap(v[j], v[j - 1]);
        const double sum = v[0] + v[1] + v[2] + v[3];
        EigenSpectrum out;
        for (int i = 0; i < 4; ++i) out.lambda[i] = v[i] / sum;
        return out;
    }

    double operator[](int i) const { return lambda[static_cast<std::size_t>(i)]; }
};

/// Spectrum of H; rejects spectra with eigenvalues below -1e-9.
inline EigenSpectrum eigenspectrum(const HMatrix& hm) {
    validate_h(hm);
    return EigenSpectrum::from_values(jacobi_eigenvalues(hm.h));
}

// Shared clamp for the two depolarization-index formulas: d2 holds the
// squared index, which may round slightly outside [0, 1].
inline double clamp_index_sq(double d2, const char* who) {
    if (d2 < -1e-12 || d2 > 1.0 + 1e-9)
        throw std::domain_error(std::string(who) + ": index outside [0, 1] beyond tolerance");
    if (d2 <= 0.0) return 0.0;
    const double d = std::sqrt(d2);
    return d > 1.0 ? 1.0 : d;
}

/// D = sqrt(Tr(M^T M)/3 - 1/3) = sqrt((Tr(M^T M) - 1)/3).
inline double depolarization_index_from_m(const MuellerMatrix& mm) {
    double frob2 = 0.0;
    for (const auto& row : mm.m)
        for (double v : row) frob2 += v * v;
    return clamp_index_sq((frob2 - 1.0) / 3.0, "depolarization_index_from_m");
}

/// D = sqrt((4 sum lambda^2 - 1) / 3).
inline double depolarization_index_from_spectrum(const EigenSpectrum& sp) {
    double s2 = 0.0;
    for (double l : sp.lambda) s2 += l * l;
    return clamp_index_sq((4.0 * s2 - 1.0) / 3.0, "depolarization_index_from_spectrum");
}

/// E = -sum lambda log4(lambda), in [0, 1].
inline double polarization_entropy(const EigenSpectrum& sp) {
    double e = 0.0;
    for (double l : sp.lambda) e -= xlog4(l);
    return std::fmin(1.0, std::fmax(0.0, e));
}

/// Realizability verdict plus the diagnostic smallest H eigenvalue.
struct PhysicalityReport {
    bool physical = false;
    double min_eigenvalue = 0.0;
};

/**
 * A Mueller matrix is physically realizable iff H >= 0.  Unphysical input
 * is a valid answer here, not an error, so the raw Jacobi eigenvalues are
 * used without the EigenSpectrum clipping.
 */
inline PhysicalityReport is_physical(const MuellerMatrix& mm, double tol = 1e-9) {
    if (!(tol >= 0.0)) throw std::invalid_argument("is_physical: tol must be >= 0");
    const auto ev = jacobi_eigenvalues(h_from_mueller(mm).h);
    PhysicalityReport r;
    r.min_eigenvalue = ev[3]; // sorted descending
    r.physical = r.min_eigenvalue >= -tol;
    return r;
}

/**
 * Mueller matrix of a deterministic (non-depolarizing) element with Jones
 * matrix T: raw[mu][nu] = (1/2) Tr(sigma_mu T sigma_nu T^dagger), then
 * normalized by raw[0][0] = ||T||_F^2 / 2.  The resulting medium always has
 * D = 1 and E = 0 (rank-1 H).
 */
inline MuellerMatrix mueller_from_jones(const JonesMatrix& j) {
    if (!(frobenius_sq(j.t) > 0.0))
        throw std::invalid_argument("mueller_from_jones: zero Jones matrix");
    const Mat2 tdag = adjoint(j.t);
    Mat4d raw{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            raw[mu][nu] =
                0.5 * trace(matmul(pauli(mu), matmul(j.t, matmul(pauli(nu), tdag)))).real();
    return MuellerMatrix::from_raw(raw);
}

/**
 * Apply the medium to a beam: s'_mu = sum_nu m[mu][nu] s_nu.  Input is
 * validated; the output is returned as-is (a physical M maps physical
 * beams to physical beams, possibly with zero intensity).
 */
inline StokesVector apply_mueller(const MuellerMatrix& mm, const StokesVector& s) {
    validate_stokes(s);
    StokesVector out;
    for (int mu = 0; mu < 4; ++mu) {
        double acc = 0.0;
        for (int nu = 0; nu < 4; ++nu) acc += mm.m[mu][nu] * s[nu];
        out[mu] = acc;
    }
    return out;
}

} // namespace polscat
