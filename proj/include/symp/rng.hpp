#pragma once

#include <cstdint>

namespace symp {

// SplitMix64. Self-contained so that seeded output is identical on every
// platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], lo <= hi. Modulo bias is irrelevant here.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Fork an independent stream (for sub-generators that must not perturb
    // the parent's sequence).
    Rng fork() { return Rng(next() ^ 0xd1b54a32d192ed03ULL); }

private:
    std::uint64_t state_;
};

}  // namespace symp
