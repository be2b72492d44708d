#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace oropeak {

/// One SplitMix64 step. Used for seed mixing only; the workhorse generator
/// is std::mt19937_64, whose output sequence is pinned by the standard.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Child seed for work item (a, b) under a master seed. Two chained
/// SplitMix64 steps so that (master, a, b) -> seed is documented and stable:
///   s1 = splitmix64(master ^ (GOLDEN * (a + 1)))
///   child = splitmix64(s1 ^ (GOLDEN * (b + 1)))
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;
    std::uint64_t s1 = splitmix64(master ^ (golden * (a + 1)));
    return splitmix64(s1 ^ (golden * (b + 1)));
}

/// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
/// std::uniform_real_distribution is not bit-stable across standard library
/// implementations; this is.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) by rejection on the top bits; n must be > 0.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % n;
}

/// Sample k distinct indices from [0, weights.size()) without replacement,
/// with inclusion driven by the given nonnegative weights (exponential-race
/// scheme; equivalent in distribution to successive weighted draws).
/// Returned indices are sorted ascending.
std::vector<std::size_t> weighted_sample_without_replacement(
    const std::vector<double>& weights, std::size_t k, std::mt19937_64& gen);

} // namespace oropeak
