#pragma once

// Dense truncated power series over Q (coefficient vectors, index = power),
// plus the named series used for the genus computations. All operations
// truncate to the shorter/requested length.

#include <cstddef>
#include <vector>

#include "rational.hpp"

namespace exalg {

using Series = std::vector<Rational>;

Series s_add(const Series& a, const Series& b);
Series s_scale(const Series& a, const Rational& q);
Series s_mul(const Series& a, const Series& b, std::size_t len);
// multiplicative inverse; requires a[0] != 0
Series s_reciprocal(const Series& a, std::size_t len);
Series s_pow(const Series& a, unsigned long k, std::size_t len);
// square root with constant term 1; requires a[0] == 1
Series s_sqrt(const Series& a, std::size_t len);

// sum_k z^k / k!
Series exp_series(std::size_t len);
// z / (1 - e^{-z}) = 1 + z/2 + z^2/12 - z^4/720 + ...
Series todd_series(std::size_t len);
// (1 - e^{-z}) / z
Series inv_todd_series(std::size_t len);
// z / (e^z - 1) = 1 - z/2 + z^2/12 - z^4/720 + ...
Series duflo_series(std::size_t len);

// evaluate a polynomial-in-operator sum c_0 + c_1 x + c_2 x^2 + ... for a
// nilpotent x; stops when powers vanish or coefficients run out
template <class T>
T eval_series(const Series& coeffs, const T& x, const T& identity) {
  T acc = identity * (coeffs.empty() ? Rational(0) : coeffs[0]);
  T power = identity;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    power = power * x;
    if (power.is_zero()) break;
    if (coeffs[k] != 0) acc = acc + power * coeffs[k];
  }
  return acc;
}

}  // namespace exalg
