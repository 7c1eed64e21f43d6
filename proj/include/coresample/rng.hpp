#pragma once

#include <cstdint>

namespace coresample {

// Counter-based 64-bit mixer (splitmix64). Output i depends only on
// (seed, i), so streams are reproducible across platforms and can be
// evaluated at any index without sequencing.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static std::uint64_t mix(std::uint64_t z) noexcept {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Value at a fixed counter position, independent of next() calls.
    static std::uint64_t at(std::uint64_t seed, std::uint64_t index) noexcept {
        return mix(seed + (index + 1) * 0x9e3779b97f4a7c15ULL);
    }

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) from the top 53 bits.
    double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    static double to_unit(std::uint64_t bits) noexcept {
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

} // namespace coresample
