#ifndef CXM_RNG_HPP
#define CXM_RNG_HPP

#include <cstdint>

namespace cxm {

// PCG32 (Melissa O'Neill's pcg32_random_r). Chosen over <random> engines so
// that seeded streams are bit-identical across compilers and platforms; every
// stochastic experiment in this project derives its streams from here.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        state_ = 0u;
        inc_ = (stream << 1u) | 1u;
        next_u32();
        state_ += seed;
        next_u32();
    }

    std::uint32_t next_u32() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        std::uint32_t xorshifted =
            static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
    }

    std::uint64_t next_u64() {
        std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Unbiased bounded draw in [0, n) by rejection.
    std::uint32_t bounded(std::uint32_t n) {
        if (n <= 1) return 0;
        std::uint32_t threshold = (-n) % n;
        for (;;) {
            std::uint32_t r = next_u32();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool coin() { return (next_u32() & 1u) != 0; }

    bool bernoulli(double p) { return uniform() < p; }

  private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

// splitmix64; used to hash (seed, index) pairs into independent stream ids.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stream derived deterministically from a master seed and a replicate index.
inline Rng derived_rng(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix_seed(seed, index), mix_seed(seed ^ 0xda3e39cb94b95bdbULL, index));
}

} // namespace cxm

#endif
