#ifndef RANDIC_RNG_HPP
#define RANDIC_RNG_HPP

#include <cstdint>
#include <random>

namespace randic {

/// All randomized code in this library draws from a std::mt19937_64 through
/// the helpers below. The standard distributions are not bit-portable across
/// implementations, so we do not use them; these helpers pin the mapping from
/// raw 64-bit draws to values, making every seeded run reproducible.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound), bound >= 1. Rejection sampling, unbiased.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    // threshold = 2^64 mod bound, rejecting draws below it removes the bias
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

inline int uniform_int(Rng& rng, int lo, int hi_inclusive) {
    return lo + static_cast<int>(uniform_below(
                    rng, static_cast<std::uint64_t>(hi_inclusive - lo) + 1));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace randic

#endif
