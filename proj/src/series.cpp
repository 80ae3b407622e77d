#include "series.hpp"

#include <stdexcept>

namespace exalg {

Series s_add(const Series& a, const Series& b) {
  Series out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Series s_scale(const Series& a, const Rational& q) {
  Series out = a;
  for (auto& v : out) v *= q;
  return out;
}

Series s_mul(const Series& a, const Series& b, std::size_t len) {
  Series out(len, Rational(0));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series s_reciprocal(const Series& a, std::size_t len) {
  if (a.empty() || a[0] == 0) throw std::invalid_argument("series has no inverse");
  Series out(len, Rational(0));
  out[0] = 1 / a[0];
  for (std::size_t n = 1; n < len; ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) acc += a[k] * out[n - k];
    out[n] = -acc / a[0];
  }
  return out;
}

Series s_pow(const Series& a, unsigned long k, std::size_t len) {
  Series out(len, Rational(0));
  out[0] = 1;
  for (unsigned long i = 0; i < k; ++i) out = s_mul(out, a, len);
  return out;
}

Series s_sqrt(const Series& a, std::size_t len) {
  if (a.empty() || a[0] != 1) throw std::invalid_argument("square root needs constant term 1");
  Series out(len, Rational(0));
  out[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    Rational acc = n < a.size() ? a[n] : Rational(0);
    for (std::size_t i = 1; i < n; ++i) acc -= out[i] * out[n - i];
    out[n] = acc / 2;
  }
  return out;
}

Series exp_series(std::size_t len) {
  Series out(len, Rational(0));
  for (std::size_t k = 0; k < len; ++k) out[k] = Rational(1) / Rational(factorial(k));
  return out;
}

Series inv_todd_series(std::size_t len) {
  // (1 - e^{-z})/z has k-th coefficient (-1)^k / (k+1)!
  Series out(len, Rational(0));
  for (std::size_t k = 0; k < len; ++k) {
    out[k] = Rational(1) / Rational(factorial(k + 1));
    if (k % 2 == 1) out[k] = -out[k];
  }
  return out;
}

Series todd_series(std::size_t len) { return s_reciprocal(inv_todd_series(len), len); }

Series duflo_series(std::size_t len) {
  // reciprocal of (e^z - 1)/z, whose k-th coefficient is 1/(k+1)!
  Series denom(len, Rational(0));
  for (std::size_t k = 0; k < len; ++k) denom[k] = Rational(1) / Rational(factorial(k + 1));
  return s_reciprocal(denom, len);
}

}  // namespace exalg
