#include "rr.hpp"

#include <stdexcept>

#include "series.hpp"

namespace exalg {

CohClass CohClass::h_power(int n, int p) {
  if (p < 0 || p > n) throw std::invalid_argument("h power out of range");
  CohClass v = zero(n);
  v.a[p] = 1;
  return v;
}

bool CohClass::is_zero() const {
  for (const auto& q : a)
    if (q != 0) return false;
  return true;
}

CohClass CohClass::operator+(const CohClass& o) const {
  CohClass r = *this;
  for (int p = 0; p <= n; ++p) r.a[p] += o.a[p];
  return r;
}

CohClass CohClass::operator-(const CohClass& o) const {
  CohClass r = *this;
  for (int p = 0; p <= n; ++p) r.a[p] -= o.a[p];
  return r;
}

CohClass CohClass::operator*(const CohClass& o) const {
  CohClass r = zero(n);
  r.a = s_mul(a, o.a, static_cast<std::size_t>(n) + 1);
  return r;
}

CohClass CohClass::operator*(const Rational& q) const {
  CohClass r = *this;
  for (auto& v : r.a) v *= q;
  return r;
}

CohClass CohClass::inverse() const {
  if (a[0] == 0) throw std::domain_error("class with zero constant term");
  CohClass r = zero(n);
  r.a = s_reciprocal(a, static_cast<std::size_t>(n) + 1);
  return r;
}

CohClass ch_line(long k, int n) {
  CohClass v = CohClass::zero(n);
  Rational power(1);
  for (int p = 0; p <= n; ++p) {
    v.a[p] = power / Rational(factorial(static_cast<unsigned long>(p)));
    power *= rat(k);
  }
  return v;
}

CohClass ch(const BundleSymbol& e, int n) {
  if (e.parts.empty()) throw std::invalid_argument("empty bundle symbol");
  CohClass v = CohClass::zero(n);
  for (const auto& [k, mult] : e.parts) {
    if (mult < 1) throw std::invalid_argument("multiplicity must be positive");
    v = v + ch_line(k, n) * Rational(mult);
  }
  return v;
}

CohClass todd_tangent(int n) {
  CohClass v = CohClass::zero(n);
  v.a = s_pow(todd_series(static_cast<std::size_t>(n) + 1),
              static_cast<unsigned long>(n) + 1,
              static_cast<std::size_t>(n) + 1);
  return v;
}

CohClass sqrt_td(int n) {
  CohClass v = CohClass::zero(n);
  v.a = s_sqrt(todd_tangent(n).a, static_cast<std::size_t>(n) + 1);
  return v;
}

CohClass sqrt_ch_omega(int n) {
  CohClass v = CohClass::zero(n);
  Rational power(1);
  const Rational half = rat(-(n + 1), 2);
  for (int p = 0; p <= n; ++p) {
    v.a[p] = power / Rational(factorial(static_cast<unsigned long>(p)));
    power *= half;
  }
  return v;
}

Rational integrate(const CohClass& v) { return v.a[v.n]; }

namespace {

CohClass alternate(const CohClass& v) {
  CohClass r = v;
  for (int p = 1; p <= v.n; p += 2) r.a[p] = -r.a[p];
  return r;
}

}  // namespace

CohClass K_class(const CohClass& v) { return alternate(v); }
CohClass tau_class(const CohClass& v) { return alternate(v); }
CohClass taubar_class(const CohClass& v) { return v; }
CohClass J_class(const CohClass& v) { return alternate(v); }

Rational mukai_C(const CohClass& v, const CohClass& w) {
  return integrate(tau_class(v) * sqrt_ch_omega(v.n).inverse() * w);
}

Rational mukai_M(const CohClass& v, const CohClass& w) {
  return mukai_C(taubar_class(v), w);
}

Rational pushforward_point(const CohClass& w) {
  return integrate(w * sqrt_ch_omega(w.n).inverse());
}

Rational euler_characteristic(int n, long k) {
  return binomial(n + k, static_cast<unsigned long>(n));
}

RRReport verify_rr(int n, long k, const CohClass& l) {
  RRReport rep;
  const CohClass td = todd_tangent(n);
  const Rational l0 = l.a[0];

  rep.chi_integral = integrate(ch_line(k, n) * td);
  rep.chi_binomial = euler_characteristic(n, k);
  rep.hrr = l0 * rep.chi_integral == l0 * rep.chi_binomial &&
            rep.chi_integral == rep.chi_binomial;

  // twisted-pairing identity, both sides independently, all basis pairs
  const CohClass root = sqrt_td(n);
  bool ok = true;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      CohClass a = CohClass::h_power(n, p), b = CohClass::h_power(n, q);
      Rational lhs = mukai_M(a * root, b * root);
      Rational rhs = integrate(K_class(a) * b * td);
      if (lhs != rhs) ok = false;
    }
  rep.pairings = ok;

  // adjunction for P^n -> pt on basis classes against constants
  ok = true;
  for (int q = 0; q <= n; ++q) {
    CohClass w = CohClass::h_power(n, q);
    // <l0 · 1, w> on P^n vs l0 · pushforward(w) on the point
    if (mukai_M(CohClass::one(n) * l0, w) != l0 * pushforward_point(w))
      ok = false;
  }
  rep.adjunction = ok;

  rep.caldararu =
      tau_class(root) * sqrt_ch_omega(n).inverse() == root;
  return rep;
}

std::vector<HrrRow> hrr_table(int max_n, long max_abs_k) {
  std::vector<HrrRow> rows;
  for (int n = 0; n <= max_n; ++n)
    for (long k = -max_abs_k; k <= max_abs_k; ++k) {
      HrrRow row;
      row.n = n;
      row.k = k;
      row.chi_integral = integrate(ch_line(k, n) * todd_tangent(n));
      row.chi_binomial = euler_characteristic(n, k);
      row.match = row.chi_integral == row.chi_binomial;
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace exalg
