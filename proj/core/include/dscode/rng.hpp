#pragma once

#include <cstdint>

namespace dscode {

/// SplitMix64 (Steele, Lea, Flood; Vigna's reference constants).
/// Chosen because it is tiny and fully specified: re-implementations in
/// other languages reproduce fuzz corpora from the same seeds.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Independent per-case stream: seed = mix(master) xor mix(index+1).
    static SplitMix64 stream(std::uint64_t master_seed, std::uint64_t case_index) {
        SplitMix64 a(master_seed);
        SplitMix64 b(case_index + 1);
        return SplitMix64(a.next() ^ b.next());
    }

private:
    std::uint64_t state_;
};

}  // namespace dscode
