#pragma once

#include <cstdint>

namespace bruns {

/// splitmix64 (Steele, Lea & Flood; Vigna's fixed-increment variant).
/// One 64-bit word of state, passes BigCrush, and cheap enough to create
/// one generator per simulated innings.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// splitmix64 finalizer as a standalone 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Independent per-innings stream keyed by (seed, innings index).
/// Streams depend only on the key, never on which worker draws them, so
/// ensembles are bit-identical under any degree of parallelism.
inline SplitMix64 innings_stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ull * (index + 1)));
}

} // namespace bruns
