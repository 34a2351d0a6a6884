/**
 * @file sampler.hpp
 * @brief Monte Carlo sampling of the admissible (D, E) domain.
 *
 * Admissible spectra are exactly the points of the probability simplex
 * {λ >= 0, sum λ = 1}, i.e. the squared coordinates of points on the unit
 * 4-sphere.  Sampling the sphere uniformly (four independent standard
 * normals, normalized -- rotationally invariant and rejection-free) and
 * squaring gives the spectrum measure used for the domain cloud.
 *
 * Determinism contract: point i draws only from substream(seed, i) and
 * writes only slot i, so the emitted cloud is bitwise identical for any
 * worker count.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polscat/bounds.hpp"
#include "polscat/mueller.hpp"
#include "polscat/parallel.hpp"
#include "polscat/rng.hpp"

namespace polscat {

/**
 * One uniform draw from the 4-sphere spectrum measure: λ_i = g_i^2 / |g|^2
 * with g standard normal in R^4, sorted descending.  The measure-zero event
 * |g|^2 < 1e-300 is re-drawn.
 */
inline EigenSpectrum sample_spectrum(SplitMix64& rng) {
    for (;;) {
        std::array<double, 4> g{};
        double norm2 = 0.0;
        for (double& x : g) {
            x = rng.normal();
            norm2 += x * x;
        }
        if (norm2 < 1e-300) continue;
        return EigenSpectrum::from_values(
            {g[0] * g[0] / norm2, g[1] * g[1] / norm2, g[2] * g[2] / norm2,
             g[3] * g[3] / norm2});
    }
}

struct SamplerConfig {
    std::uint64_t count = 100000;
    std::uint64_t seed = 42;
};

/// One sampled domain point with its generating spectrum.
struct CloudPoint {
    double d = 0.0;
    double e = 0.0;
    EigenSpectrum spectrum;
};

/**
 * Generate cfg.count cloud points.  Deterministic for a fixed seed and
 * independent of the worker count; every emitted point lies inside the
 * analytic domain (the sampled spectra are exactly the admissible ones).
 */
inline std::vector<CloudPoint> generate_cloud(const SamplerConfig& cfg, unsigned threads = 1) {
    if (cfg.count < 1) throw std::invalid_argument("generate_cloud: count must be >= 1");
    std::vector<CloudPoint> out(cfg.count);
    parallel_for(cfg.count, threads, [&](std::size_t i) {
        SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(i));
        CloudPoint& p = out[i];
        p.spectrum = sample_spectrum(rng);
        p.d = depolarization_index_from_spectrum(p.spectrum);
        p.e = polarization_entropy(p.spectrum);
    });
    return out;
}

} // namespace polscat
