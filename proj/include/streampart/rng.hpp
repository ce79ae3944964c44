/******************************************************************************
 * rng.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace streampart {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seeded pseudo-random source. mt19937_64 output is fully specified by the
// standard and the bounded draw below avoids std::uniform_int_distribution,
// so the same seed yields the same sequence on every platform.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    static RngStream derived(std::uint64_t seed, std::uint64_t salt) {
        return RngStream(splitmix64(seed ^ splitmix64(salt)));
    }

    std::uint64_t next_raw() { return engine_(); }

    // Unbiased draw in [0, n). n must be nonzero.
    std::uint64_t next_index(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t v = engine_();
        while (v >= limit) {
            v = engine_();
        }
        return v % n;
    }

    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_index(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool next_bool() { return (next_raw() & 1ULL) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[next_index(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

// Purpose-separated stream salts. Tie-break draws live on their own stream;
// algorithms that make the same decision sequence then consume the same
// tie-break draws regardless of how many permutations or ghost hosts they draw.
constexpr std::uint64_t kTieBreakSalt = 0x74696562u;
constexpr std::uint64_t kPermutationSalt = 0x7065726du;
constexpr std::uint64_t kGhostSalt = 0x67686f73u;
constexpr std::uint64_t kHashSalt = 0x68617368u;

} // namespace streampart
