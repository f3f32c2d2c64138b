#pragma once

#include "fmk/rational.hpp"

#include <cstdint>
#include <random>

namespace fmk {

// Deterministic RNG for property suites. Values are reduced with plain
// modulo so a given seed produces the same stream on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform-ish integer in [lo, hi] (inclusive); bias is irrelevant here.
    long long int_in(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(engine_() % span);
    }

    bool coin() { return engine_() % 2 == 0; }

    // Integer or half-integer in [lo, hi]; exercises the rational channel.
    Rational rational_in(long long lo, long long hi) {
        Rational r(int_in(2 * lo, 2 * hi));
        return r / 2;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace fmk
