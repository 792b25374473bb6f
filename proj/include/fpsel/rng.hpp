#pragma once

#include <cstdint>
#include <limits>

namespace fpsel {

// splitmix64 step, used to expand a 64-bit seed into generator state.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256** (Blackman/Vigna). All randomness in the library flows through
// this generator so that a run is a pure function of its 64-bit seed. The
// generator identifier is embedded in result metadata.
class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    std::uint64_t next() {
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

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_double() < p; }

    // Unbiased integer in [0, bound) by rejection on a power-of-two mask.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t mask = mask_for(bound - 1);
        std::uint64_t v;
        do {
            v = next() & mask;
        } while (v >= bound);
        return v;
    }

    // UniformRandomBitGenerator interface.
    result_type operator()() { return next(); }
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<std::uint64_t>::max(); }

    static constexpr const char* name() { return "xoshiro256**"; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    static constexpr std::uint64_t mask_for(std::uint64_t v) {
        v |= v >> 1;
        v |= v >> 2;
        v |= v >> 4;
        v |= v >> 8;
        v |= v >> 16;
        v |= v >> 32;
        return v;
    }

    std::uint64_t state_[4];
};

// Identifies one replicate's random stream.
struct SeedSpec {
    std::uint64_t base_seed = 0;
    std::uint64_t replicate_index = 0;
};

// seed = base ^ ((index + 1) * 0x9E3779B97F4A7C15 mod 2^64). The multiplier is
// odd, so distinct indices map to distinct seeds for a fixed base.
inline std::uint64_t derive_seed(const SeedSpec& spec) {
    return spec.base_seed ^ ((spec.replicate_index + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace fpsel
