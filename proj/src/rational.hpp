#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exalg {

// Exact arbitrary-precision rational. mpq_class keeps values canonicalized
// (lowest terms, positive denominator) under arithmetic; only the two-integer
// constructor needs an explicit canonicalize, which rat() performs.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_pow(const Rational& base, unsigned long e) {
  Rational acc(1), b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// C(n, k) for integer n of either sign (the polynomial n(n-1)..(n-k+1)/k!).
inline Rational binomial(long n, unsigned long k) {
  Rational num(1);
  for (unsigned long i = 0; i < k; ++i) num *= rat(n - static_cast<long>(i));
  return num / Rational(factorial(k));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace exalg
