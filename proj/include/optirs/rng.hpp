// SPDX-License-Identifier: Apache-2.0
//
// Deterministic random streams for the Monte Carlo paths. Streams are
// derived from (seed, name, index) so parallel workers reproduce bit-exact
// sequences regardless of scheduling, and the samplers avoid
// implementation-defined std::*_distribution algorithms.

#ifndef OPTIRS_RNG_HPP
#define OPTIRS_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace optirs {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// A named substream: mt19937_64 seeded from a hash of (seed, name, index).
inline std::mt19937_64 make_stream(std::uint64_t seed, std::string_view name,
                                   std::uint64_t index = 0) {
    std::uint64_t s = splitmix64(seed ^ fnv1a(name));
    s = splitmix64(s ^ (0x51ed2701a9e3ac13ULL + index));
    return std::mt19937_64(s);
}

inline double uniform01(std::mt19937_64& rng) {
    // 53-bit mantissa, open at 0 is not required here
    return double(rng() >> 11) * 0x1.0p-53;
}

inline double normal01(std::mt19937_64& rng) {
    // Box-Muller; one draw per call keeps the stream layout simple
    double u1;
    do {
        u1 = uniform01(rng);
    } while (u1 <= 0.0);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
}

// Marsaglia-Tsang gamma sampler, shape k, unit scale.
inline double gamma_draw(std::mt19937_64& rng, double shape) {
    if (shape < 1.0) {
        const double u = uniform01(rng);
        return gamma_draw(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal01(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01(rng);
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

} // namespace optirs

#endif
