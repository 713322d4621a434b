#pragma once

#include <cstdint>
#include <random>

namespace qgraph {

/// SplitMix64 finalizer; used to spread seeds and derive per-chain streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Stream seed for chain `index` under a master seed. Streams are pairwise
/// distinct by construction of the mixer.
inline std::uint64_t chain_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

/// mt19937_64 with explicit, platform-independent conversions. The std
/// distributions are implementation-defined, which would break byte-identical
/// reruns; these conversions are pinned.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0,1) with 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound); bound >= 1. Debiased multiply-shift.
    int next_below(int bound) {
        auto b = static_cast<std::uint64_t>(bound);
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * b;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < b) {
            std::uint64_t threshold = (0 - b) % b;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * b;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<int>(m >> 64);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace qgraph
