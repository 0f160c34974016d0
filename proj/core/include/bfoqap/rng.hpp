#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bfoqap {

/// Deterministic random source: one fixed engine plus hand-rolled bounded
/// draws. The standard distributions are implementation-defined, so going
/// through them would break the seed => identical run guarantee across
/// toolchains.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [lo, hi], both inclusive; unbiased via rejection.
    int uniform_int(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
        const std::uint64_t span =
            static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) -
                                       static_cast<std::int64_t>(lo)) + 1;
        constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t overhang = (top % span + 1) % span;
        std::uint64_t r = next_u64();
        if (overhang != 0) {
            const std::uint64_t max_ok = top - overhang;
            while (r > max_ok) r = next_u64();
        }
        return static_cast<int>(lo + static_cast<std::int64_t>(r % span));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double probability) { return uniform01() < probability; }

    /// Fisher-Yates shuffle; consumes size-1 draws.
    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (int i = static_cast<int>(xs.size()) - 1; i > 0; --i) {
            using std::swap;
            swap(xs[i], xs[static_cast<std::size_t>(uniform_int(0, i))]);
        }
    }

    /// Stable replicate-seed derivation (splitmix64 finalizer), so batch
    /// runners can give every era an independent stream from one base seed.
    static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
        std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace bfoqap
