#pragma once

#include <cstdint>
#include <string_view>

namespace homds {

/// SplitMix64 (Steele, Lea, Flood 2014). Small, splittable and bit-reproducible
/// across platforms, which std::uniform_int_distribution is not.
class SplitMix64 {
public:
    static constexpr std::string_view kAlgorithm = "splitmix64";

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound) by rejection; bound must be nonzero.
    constexpr std::uint64_t uniform(std::uint64_t bound) noexcept {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

    /// Child generator with an independent stream.
    constexpr SplitMix64 split() noexcept { return SplitMix64(next() ^ 0xD1B54A32D192ED03ULL); }

private:
    std::uint64_t state_;
};

/// Seed for the i-th item of a batch; stable regardless of how the batch is scheduled.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    SplitMix64 g(seed ^ (index * 0xA0761D6478BD642FULL + 0x8EBC6AF09C88C6E3ULL));
    g.next();
    return g.next();
}

}  // namespace homds
