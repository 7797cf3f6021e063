#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace tsga {

/// Seedable random source for reproducible runs.
///
/// The engine is std::mt19937_64, whose output sequence is pinned by the
/// standard, and all sampling below is built directly on raw 64-bit draws.
/// Standard-library distributions are deliberately avoided: their algorithms
/// are implementation-defined, so using them would make traces differ between
/// platforms for the same seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased draw from {0, ..., n-1} via rejection sampling.
    std::size_t uniform_index(std::size_t n) {
        assert(n > 0);
        const std::uint64_t bound = n;
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % bound;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return static_cast<std::size_t>(x % bound);
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform_real() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_real() < p; }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_index(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace tsga
