#pragma once

#include <cstdint>

namespace dualvar {

// Deterministic splitmix64 stream. Identical seeds give identical streams on every
// platform, and split(i) derives an independent substream for trial i so that
// per-trial randomness does not depend on how many draws earlier trials consumed.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : seed_(seed), state_(scramble(seed)) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return position_; }

    std::uint64_t next_u64() {
        ++position_;
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). bound = 0 is invalid and returns 0.
    std::uint64_t uniform(std::uint64_t bound) {
        if (bound == 0) return 0;
        return next_u64() % bound;
    }

    // Uniform integer in [lo, hi], inclusive.
    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Independent substream for the given index; deterministic in (seed, index) only.
    Prng split(std::uint64_t index) const {
        return Prng(scramble(seed_ ^ (0x5851f42d4c957f2dULL * (index + 1))));
    }

private:
    static std::uint64_t scramble(std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33;
        return x;
    }

    std::uint64_t seed_;
    std::uint64_t state_;
    std::uint64_t position_ = 0;
};

} // namespace dualvar
