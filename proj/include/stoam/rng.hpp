#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace stoam {

// splitmix64: cheap, well-mixed 64-bit stream used for seed derivation only.
// The simulation draws themselves come from std::mt19937_64.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(const void* data, std::size_t size,
                             std::uint64_t hash = 0xcbf29ce484222325ULL) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

inline std::uint64_t fnv1a64(std::string_view text, std::uint64_t hash = 0xcbf29ce484222325ULL) {
    return fnv1a64(text.data(), text.size(), hash);
}

/// Derives a per-trial seed from (master seed, experiment kind, image index,
/// trial index). Trials are paired across sweep axes by construction: the
/// derived seed does not depend on kappa or dispersion values.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view kind,
                                 std::uint64_t image, std::uint64_t trial) {
    std::uint64_t h = fnv1a64(kind);
    h = fnv1a64(&master, sizeof master, h);
    h = fnv1a64(&image, sizeof image, h);
    h = fnv1a64(&trial, sizeof trial, h);
    std::uint64_t s = h;
    return splitmix64(s);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64{seed};
}

} // namespace stoam
