/**
 * @file rmt.hpp
 * @brief Random-matrix simulation of multi-mode single-photon scattering.
 *
 * A scattering medium illuminated by one mode and observed through N
 * detected modes is described by N Jones matrices T_1..T_N whose entries
 * are independent complex Gaussian amplitudes (zero mean, unit variance per
 * real component) -- the random-matrix ansatz for a disordered medium.  In
 * the small-aperture limit the measured Mueller matrix is the mode sum
 *
 *     raw[mu][nu] = sum_k (1/2) Tr(sigma_mu T_k sigma_nu T_k^dagger),
 *
 * normalized so M00 = 1.  At N = 1 this is an ideal non-depolarizing
 * medium (D = 1, E = 0); as N grows the ensemble mean drifts toward
 *
 *   - Generic media: the fully depolarizing point p1 = (0, 1), since the
 *     mode average of T sigma_nu T^dagger is proportional to Tr(sigma_nu)
 *     times the identity, so M -> diag(1, 0, 0, 0);
 *   - PolarizationConserving media (diagonal T): every realization keeps
 *     M[3][3] = 1 exactly, so its spectrum is {(1+r)/2, (1-r)/2, 0, 0} and
 *     M -> diag(1, 0, 0, 1), whose spectrum {1/2, 1/2, 0, 0} is the cusp
 *     p3 = (1/sqrt(3), 1/2).
 *
 * Determinism contract: realization r at mode count n draws only from
 * substream(seed, n, r), so sweep output is independent of the worker
 * count.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polscat/mueller.hpp"
#include "polscat/parallel.hpp"
#include "polscat/rng.hpp"

namespace polscat {

enum class MediumKind { Generic, PolarizationConserving };

/**
 * Draw one mode amplitude matrix.  Generic media consume eight normals
 * (real and imaginary parts of all four entries, row-major, real part
 * first); polarization-conserving media consume four, with off-diagonal
 * amplitudes exactly zero.
 */
inline JonesMatrix draw_mode(MediumKind kind, SplitMix64& rng) {
    JonesMatrix j;
    if (kind == MediumKind::Generic) {
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                const double re = rng.normal();
                const double im = rng.normal();
                j.t[r][c] = cplx(re, im);
            }
    } else {
        for (int r = 0; r < 2; ++r) {
            const double re = rng.normal();
            const double im = rng.normal();
            j.t[r][r] = cplx(re, im);
        }
    }
    return j;
}

/**
 * Mode-summed Mueller matrix: raw[mu][nu] = sum_k (1/2) Tr(sigma_mu T_k
 * sigma_nu T_k^dagger), normalized by raw[0][0] = sum_k ||T_k||_F^2 / 2.
 * Rejects empty or all-zero mode sets.
 */
inline MuellerMatrix accumulate_mueller(const std::vector<JonesMatrix>& modes) {
    if (modes.empty()) throw std::invalid_argument("accumulate_mueller: no modes");
    Mat4d raw{};
    for (const JonesMatrix& mode : modes) {
        const Mat2 tdag = adjoint(mode.t);
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
                raw[mu][nu] +=
                    0.5 * trace(matmul(pauli(mu), matmul(mode.t, matmul(pauli(nu), tdag)))).real();
    }
    if (!(raw[0][0] > 0.0))
        throw std::invalid_argument("accumulate_mueller: all modes are zero");
    return MuellerMatrix::from_raw(raw);
}

struct EnsembleConfig {
    int n_modes_max = 30;
    int realizations = 2000;
    MediumKind kind = MediumKind::Generic;
    std::uint64_t seed = 42;
};

/// Ensemble statistics of (D, E) at one mode count.
struct SweepRecord {
    int n = 0;
    double mean_d = 0.0;
    double mean_e = 0.0;
    double std_d = 0.0;
    double std_e = 0.0;
};

/// Sweep statistics plus the per-realization (d, e) points behind them,
/// indexed points[n - 1][realization].
struct SweepResult {
    std::vector<SweepRecord> records;
    std::vector<std::vector<std::pair<double, double>>> points;
};

/**
 * For each N in 1..n_modes_max run cfg.realizations independent media of N
 * modes and aggregate mean and (sample) standard deviation of D and E.
 * Deterministic for a fixed seed, for any worker count.
 */
inline SweepResult sweep_detailed(const EnsembleConfig& cfg, unsigned threads = 1) {
    if (cfg.n_modes_max < 1)
        throw std::invalid_argument("sweep: n_modes_max must be >= 1");
    if (cfg.realizations < 1)
        throw std::invalid_argument("sweep: realizations must be >= 1");

    SweepResult out;
    out.records.reserve(static_cast<std::size_t>(cfg.n_modes_max));
    out.points.resize(static_cast<std::size_t>(cfg.n_modes_max));

    for (int n = 1; n <= cfg.n_modes_max; ++n) {
        auto& pts = out.points[static_cast<std::size_t>(n - 1)];
        pts.resize(static_cast<std::size_t>(cfg.realizations));
        parallel_for(static_cast<std::size_t>(cfg.realizations), threads, [&](std::size_t r) {
            SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(n),
                                       static_cast<std::uint64_t>(r));
            std::vector<JonesMatrix> modes(static_cast<std::size_t>(n));
            for (JonesMatrix& mode : modes) mode = draw_mode(cfg.kind, rng);
            const MuellerMatrix m = accumulate_mueller(modes);
            const EigenSpectrum sp = eigenspectrum(h_from_mueller(m));
            pts[r] = {depolarization_index_from_spectrum(sp), polarization_entropy(sp)};
        });

        SweepRecord rec;
        rec.n = n;
        for (const auto& [d, e] : pts) {
            rec.mean_d += d;
            rec.mean_e += e;
        }
        const double count = static_cast<double>(cfg.realizations);
        rec.mean_d /= count;
        rec.mean_e /= count;
        if (cfg.realizations > 1) {
            double vd = 0.0, ve = 0.0;
            for (const auto& [d, e] : pts) {
                vd += (d - rec.mean_d) * (d - rec.mean_d);
                ve += (e - rec.mean_e) * (e - rec.mean_e);
            }
            rec.std_d = std::sqrt(vd / (count - 1.0));
            rec.std_e = std::sqrt(ve / (count - 1.0));
        }
        out.records.push_back(rec);
    }
    return out;
}

/// Sweep returning only the aggregated records.
inline std::vector<SweepRecord> sweep(const EnsembleConfig& cfg, unsigned threads = 1) {
    return sweep_detailed(cfg, threads).records;
}

} // namespace polscat
