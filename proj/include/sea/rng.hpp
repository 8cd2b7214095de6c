#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace sea {

// One SplitMix64 step; also serves as the finalizer in seed derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic child-seed derivation. Run i of a batch uses
// mix_seed(master, i); grid cells mix their coordinates in first. Results are
// therefore independent of scheduling and of the --jobs setting.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
    std::uint64_t s = base ^ (salt + 0x632be59bd9b4e019ULL);
    splitmix64(s);
    return splitmix64(s);
}

// xoshiro256** (Blackman & Vigna), state seeded through SplitMix64. Hand-rolled
// rather than <random> because the standard distributions are not specified
// bit-for-bit across library implementations, and every recorded result here
// must be reproducible from its seed on any platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) word = splitmix64(s);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0,1), 53-bit resolution.
    double next_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bool(double p) { return next_real() < p; }

    // Uniform in [0,n); unbiased via rejection. n <= 1 consumes no draw.
    std::size_t next_below(std::size_t n) {
        if (n <= 1) return 0;
        const auto span = static_cast<std::uint64_t>(n);
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % span;
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return static_cast<std::size_t>(v % span);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_;
};

} // namespace sea
