// Counter-based deterministic random numbers.
//
// Every random draw is a pure function of (seed, stream, counter indices), so
// realizations never depend on call order, thread count, or how many other
// draws happened first. Adding vehicles or query points cannot perturb an
// existing realization.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace gale::rng {

/// SplitMix64 finalizer; full-avalanche 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Hash of (seed, stream, i, j) with good avalanche in every argument.
constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                     std::uint64_t i, std::uint64_t j) {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ull);
    h = mix64(h ^ (stream + 0x9e3779b97f4a7c15ull));
    h = mix64(h ^ (i + 0xbf58476d1ce4e5b9ull));
    h = mix64(h ^ (j + 0x94d049bb133111ebull));
    return h;
}

/// Uniform double in [0, 1) from 64 random bits.
constexpr double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Uniform double in [0, 1).
constexpr double uniform(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t i, std::uint64_t j = 0) {
    return to_unit(counter_hash(seed, stream, i, j));
}

/// Uniform phase angle in [0, 2*pi).
inline double phase(std::uint64_t seed, std::uint64_t stream,
                    std::uint64_t i, std::uint64_t j) {
    return 2.0 * std::numbers::pi * uniform(seed, stream, i, j);
}

/// Exponential variate with the given mean.
inline double exponential(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t i, double mean) {
    // u in [0,1) keeps the argument of log1p inside (-1, 0].
    return -mean * std::log1p(-uniform(seed, stream, i));
}

} // namespace gale::rng
