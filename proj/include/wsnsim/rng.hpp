#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace wsnsim {

/// SplitMix64 finalizer. Used for all seed derivation so every stream in a
/// run is reproducible in isolation from (master_seed, index).
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Stable two-input seed mix: mix_seed(a, b) == splitmix64(splitmix64(a) ^ b).
constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ b);
}

/// mt19937_64 with hand-rolled bounded draws. The standard distributions are
/// not pinned across library implementations; these are.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform integer in [0, n). n must be >= 1. Masked rejection, unbiased.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~0ULL >> __builtin_clzll(n - 1 | 1);
        std::uint64_t v;
        do {
            v = eng_() & mask;
        } while (v >= n);
        return v;
    }

    /// Uniform double in [0, 1).
    double real01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * real01(); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
        }
    }

    /// k distinct elements drawn uniformly from pool (partial Fisher-Yates).
    template <class T>
    std::vector<T> sample(std::vector<T> pool, std::size_t k) {
        if (k > pool.size()) k = pool.size();
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + static_cast<std::size_t>(below(pool.size() - i));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

private:
    std::mt19937_64 eng_;
};

// Per-trial stream tags (see README for the derivation scheme).
inline constexpr std::uint64_t kTopologyStream = 0xA1;
inline constexpr std::uint64_t kWorkloadStream = 0xB2;
inline constexpr std::uint64_t kElectionStream = 0xC3;

} // namespace wsnsim
