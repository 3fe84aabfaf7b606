#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace presharp {

// Deterministic RNG wrapper. All distribution math is done by hand on top of
// mt19937_64 so that sequences are reproducible across standard libraries
// (std::uniform_real_distribution and std::shuffle are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // multiply-shift; bias is negligible for the desk-scale ranges used here
        unsigned __int128 m = static_cast<unsigned __int128>(gen_()) * n;
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Deterministic Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace presharp
