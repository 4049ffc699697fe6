#pragma once

#include <cstdint>
#include <random>

namespace recon {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Child seed for stream `stream` of a master seed. Streams are independent of
/// evaluation order, so parallel consumers stay reproducible.
constexpr std::uint64_t deriveSeed(std::uint64_t master, std::uint64_t stream) noexcept {
    return mix64(mix64(master) ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

inline Rng makeRng(std::uint64_t seed) {
    return Rng{mix64(seed)};
}

/// Uniform integer in [0, bound). bound must be positive.
inline std::uint64_t uniformBelow(Rng &rng, std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>{0, bound - 1}(rng);
}

inline double uniformReal(Rng &rng) {
    return std::uniform_real_distribution<double>{0.0, 1.0}(rng);
}

} // namespace recon
