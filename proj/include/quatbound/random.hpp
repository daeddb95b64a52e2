#pragma once

#include <cstdint>
#include <random>

#include "quatbound/quaternion.hpp"

namespace quatbound {

/// splitmix64 mixing step; used to condition seeds and to derive per-trial
/// streams. Fixed here so sweeps reproduce bit-for-bit across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic per-trial seed for a (sweep seed, degree, trial) triple.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t degree, std::uint64_t trial) {
    return splitmix64(splitmix64(splitmix64(seed) ^ degree) ^ trial);
}

/// The library's generator. Seeds are pre-mixed with splitmix64 so that
/// small consecutive seeds give unrelated streams.
inline std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(splitmix64(seed)); }

/// Uniform double in [0, 1) from the top 53 bits of one engine output.
/// Bypasses std::uniform_real_distribution, whose mapping is not pinned by
/// the standard, to keep streams portable.
inline double uniform_unit(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [-1, 1).
inline double uniform_symmetric(std::mt19937_64& eng) { return 2.0 * uniform_unit(eng) - 1.0; }

/// Uniform quaternion in the closed ball of the given radius, by rejection
/// from the cube.
inline Quaternion ball_quaternion(std::mt19937_64& eng, double radius) {
    while (true) {
        const Quaternion q{uniform_symmetric(eng), uniform_symmetric(eng), uniform_symmetric(eng),
                           uniform_symmetric(eng)};
        if (norm_sq(q) <= 1.0) return q * radius;
    }
}

/// Uniformly directed pure unit quaternion (zero real part).
inline Quaternion unit_pure_quaternion(std::mt19937_64& eng) {
    while (true) {
        const Quaternion p{0.0, uniform_symmetric(eng), uniform_symmetric(eng), uniform_symmetric(eng)};
        const double n2 = norm_sq(p);
        if (n2 > 1e-12 && n2 <= 1.0) return p * (1.0 / std::sqrt(n2));
    }
}

}  // namespace quatbound
