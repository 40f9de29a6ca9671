#pragma once

#include <cstdint>

namespace infbandit {

// Counter-mode splitmix64. The stream is a pure function of (key, counter):
//   output(c) = mix64(key + kGolden * (c + 1))
// which is the classic splitmix64 sequence seeded at `key`. Because each output
// depends only on its counter, scalar and SIMD consumers produce the same
// stream, and a consumer can skip ahead in O(1).
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t stream_at(std::uint64_t key, std::uint64_t counter) {
    return mix64(key + kGolden * (counter + 1));
}

class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return counter_; }

    std::uint64_t next_u64() { return stream_at(key_, counter_++); }

    // Uniform in [0,1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound) via Lemire's multiply-shift; bound >= 1.
    std::uint64_t next_bounded(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    // Advance past `n` draws without generating them (used after a kernel
    // consumed the counters [counter, counter+n) directly).
    void skip(std::uint64_t n) { counter_ += n; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Deterministic seed derivation: independent streams for (base, a, b) tuples.
// Used for trial seeds (base, policy index, trial index) and for splitting a
// trial seed into environment / policy / graph streams.
inline constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                           std::uint64_t b = 0) {
    std::uint64_t h = mix64(base + kGolden);
    h = mix64(h ^ (a + kGolden));
    h = mix64(h ^ (b + kGolden));
    return h;
}

// Stream tags for derive_seed's `b` argument.
inline constexpr std::uint64_t kStreamEnvironment = 1;
inline constexpr std::uint64_t kStreamPolicy = 2;
inline constexpr std::uint64_t kStreamGraph = 3;

}  // namespace infbandit
