#pragma once

#include <cstdint>
#include <random>

#include "rational.hpp"

namespace exalg {

// Deterministic RNG. Only raw mt19937_64 draws reduced by explicit modulus
// are used: standard distribution objects are not bit-stable across
// implementations, and reports must replay byte-identically from a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

  // Uniform integer in [lo, hi].
  long intrange(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Small rational with numerator in [-max_num, max_num] and denominator in
  // [1, max_den]; biased toward simple values, which is what we want for
  // witnesses that stay readable.
  Rational rational(long max_num = 5, long max_den = 3) {
    return rat(intrange(-max_num, max_num), intrange(1, max_den));
  }

  // Nonzero variant for places where degenerate zeros would weaken a test.
  Rational nonzero_rational(long max_num = 5, long max_den = 3) {
    Rational q = rational(max_num, max_den);
    while (q == 0) q = rational(max_num, max_den);
    return q;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace exalg
