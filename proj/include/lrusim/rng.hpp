#ifndef LRUSIM_RNG_HPP
#define LRUSIM_RNG_HPP

#include <cstdint>

namespace lrusim {

// SplitMix64 (Steele, Lea, Flood 2014). Small, fast, and the output for a
// given seed is fixed by the algorithm, so traces replay across builds.
// child(n) derives an independent stream from the *original* seed, never
// from the evolving state, so stream n is the same no matter how many
// draws the parent has made.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased enough for bounds << 2^64 (Lemire multiply-shift).
    uint32_t next_below(uint32_t bound) {
        return static_cast<uint32_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bool(double p) { return next_double() < p; }

    // Integer uniform in [lo, hi] inclusive.
    int next_range(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<uint32_t>(hi - lo + 1)));
    }

    Rng child(uint64_t stream) const {
        uint64_t z = seed_ ^ (0x9e3779b97f4a7c15ULL * (stream + 0x632be59bd9b4e019ULL));
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    uint64_t seed() const { return seed_; }

private:
    uint64_t seed_;
    uint64_t state_;
};

} // namespace lrusim

#endif
