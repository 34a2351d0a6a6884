/**
 * @file rng.hpp
 * @brief Deterministic, splittable random number generation.
 *
 * The library fixes one concrete generator so that every sampled figure is
 * reproducible from a single 64-bit seed: SplitMix64 (Steele, Lea & Flood),
 * a counter-based generator whose output function is a bijective avalanche
 * mix of a Weyl sequence.  Two properties matter here:
 *
 *  - streams are cheap to construct, so each Monte Carlo point or ensemble
 *    realization gets its own substream derived from (seed, index...); the
 *    emitted data is then independent of how work is split across threads;
 *  - the full 64-bit state is a single integer, trivially serializable.
 *
 * Normal deviates come from the Box-Muller transform (pair-cached), built
 * on 53-bit uniforms in [0,1).
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace polscat {

// SplitMix64 finalizer: bijective 64-bit avalanche mix.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Minimal SplitMix64 stream.  All library sampling goes through this.
struct SplitMix64 {
    std::uint64_t state = 0;
    bool has_spare = false;   // Box-Muller caches the second deviate
    double spare = 0.0;

    explicit SplitMix64(std::uint64_t s = 0) : state(s) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        return mix64(state);
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Standard normal deviate, Box-Muller with pair caching.
    double normal() {
        if (has_spare) {
            has_spare = false;
            return spare;
        }
        // 1 - u in (0, 1] keeps the log argument away from zero.
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare = r * std::sin(a);
        has_spare = true;
        return r * std::cos(a);
    }
};

/**
 * Derive a deterministic substream from a seed and an index path.
 *
 * The path is folded into the state hash-combine style, with the SplitMix64
 * finalizer providing the avalanche at each step.  Distinct (seed, path)
 * tuples map to distinct stream states up to 64-bit hash collisions, and the
 * derivation involves no shared state, so worker threads may build their own
 * substreams concurrently.
 */
inline SplitMix64 substream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL);
    for (std::uint64_t u : path) {
        h = mix64(h ^ (u + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2)));
    }
    return SplitMix64(h);
}

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t i) {
    return substream(seed, {i});
}

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
    return substream(seed, {i, j});
}

} // namespace polscat
