#pragma once

#include <cstdint>
#include <random>

#include "ktl/integers.hpp"

namespace ktl {

// Seeded RNG with platform-independent bounded draws (std::uniform_int_distribution
// is implementation-defined, which would break the byte-identical-report contract).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Int int_in(std::int64_t lo, std::int64_t hi) { return Int(range(lo, hi)); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace ktl
