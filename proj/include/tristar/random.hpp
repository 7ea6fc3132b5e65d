#pragma once

#include <cstdint>

namespace tristar {

/// SplitMix64 (Steele, Lea, Flood 2014). 64-bit state advanced by the golden
/// gamma 0x9E3779B97F4A7C15, output mixed with the standard two
/// multiply-xorshift rounds. Integer-only, so every platform produces the
/// same stream for the same seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Integer in [0, bound) by multiply-shift: floor(next() * bound / 2^64).
    std::uint64_t below(std::uint64_t bound)
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace tristar
