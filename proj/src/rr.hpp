#pragma once

// Exact cohomology arithmetic on projective space: Q[h]/(h^{n+1}) with h of
// Hodge bidegree (1,1). Chern characters of sums of line bundles, the Todd
// class of the tangent bundle, the involution operators that act by signs on
// the Hodge grading, the two pairing normalizations, and the pushforward to a
// point with the canonical-root twist. Everything is exact rational data.

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace exalg {

struct CohClass {
  int n = 0;                // ambient dimension
  std::vector<Rational> a;  // a[p] = coefficient of h^p, p = 0..n

  static CohClass zero(int n) {
    return CohClass{n, std::vector<Rational>(static_cast<std::size_t>(n) + 1)};
  }
  static CohClass one(int n) {
    CohClass v = zero(n);
    v.a[0] = 1;
    return v;
  }
  static CohClass h_power(int n, int p);

  bool is_zero() const;
  bool operator==(const CohClass& o) const { return n == o.n && a == o.a; }
  CohClass operator+(const CohClass& o) const;
  CohClass operator-(const CohClass& o) const;
  CohClass operator*(const CohClass& o) const;  // truncated at h^{n+1}
  CohClass operator*(const Rational& q) const;
  // multiplicative inverse; requires a[0] != 0
  CohClass inverse() const;
};

// Direct sum of line bundles O(k) with multiplicities; nonempty.
struct BundleSymbol {
  std::vector<std::pair<long, int>> parts;  // (twist, multiplicity >= 1)
};

// e^{k h} truncated.
CohClass ch_line(long k, int n);
// Σ mult · e^{k h}.
CohClass ch(const BundleSymbol& e, int n);
// (h / (1 - e^{-h}))^{n+1} mod h^{n+1}.
CohClass todd_tangent(int n);
// The square root with constant term 1.
CohClass sqrt_td(int n);
// ω = O(-n-1), so this is e^{-(n+1)h/2}.
CohClass sqrt_ch_omega(int n);

// The h^n coefficient.
Rational integrate(const CohClass& v);

// Sign operators on the diagonal Hodge grading (h^p has bidegree (p,p)):
// K and tau and J all act by (-1)^p there; taubar is the identity.
CohClass K_class(const CohClass& v);
CohClass tau_class(const CohClass& v);
CohClass taubar_class(const CohClass& v);
CohClass J_class(const CohClass& v);

// <v, w> = ∫ tau(v)/sqrt(ch ω) ∧ w, and the variant precomposed with taubar.
Rational mukai_C(const CohClass& v, const CohClass& w);
Rational mukai_M(const CohClass& v, const CohClass& w);

// Pushforward along P^n -> pt for the pairing adjunction: ∫ w · e^{(n+1)h/2}
// (the canonical-root twist makes the adjunction exact).
Rational pushforward_point(const CohClass& w);

// Euler characteristic of O(k) on P^n: the binomial polynomial C(n+k, n),
// which also equals the signed form (-1)^n C(-k-1, n) for k < -n.
Rational euler_characteristic(int n, long k);

struct RRReport {
  bool hrr = false;         // ∫ ch(O(k)) td scaled by l_0 equals l_0 · χ
  bool pairings = false;    // twisted-pairing identity on all basis pairs
  bool adjunction = false;  // point-map adjointness on all basis classes
  bool caldararu = false;   // tau(sqrt td)/sqrt(ch ω) = sqrt td
  Rational chi_integral;
  Rational chi_binomial;
};
// Full verification bundle at (n, k) with the constant pullback class l.
RRReport verify_rr(int n, long k, const CohClass& l);

// Text rows (n, k, chi_integral, chi_binomial, match).
struct HrrRow {
  int n;
  long k;
  Rational chi_integral, chi_binomial;
  bool match;
};
std::vector<HrrRow> hrr_table(int max_n, long max_abs_k);

}  // namespace exalg
