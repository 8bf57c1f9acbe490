#pragma once

// Deterministic splitmix64 generator. All randomized verification derives
// from one 64-bit seed so runs are reproducible across platforms; stdlib
// distributions are avoided because their output is implementation-defined.

#include <cstdint>

namespace octlin {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, n); n must be nonzero.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long long in_range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    // Independent substream for item `index`; used to make parallel trial
    // loops order-independent.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0xa0761d6478bd642fULL * (index + 1)));
        return Rng(mix.next());
    }

  private:
    std::uint64_t state_;
};

} // namespace octlin
