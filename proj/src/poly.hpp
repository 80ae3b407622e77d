#pragma once

// Multivariate polynomials over Q with a fixed, small number of variables.
// Monomials are exponent vectors; the zero polynomial is the empty map.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace exalg {

using Mono = std::vector<int>;

struct Poly {
  int nvars = 0;
  std::map<Mono, Rational> c;

  static Poly zero(int nvars) { return Poly{nvars, {}}; }
  static Poly constant(int nvars, const Rational& q) {
    Poly p{nvars, {}};
    p.add_term(Mono(nvars, 0), q);
    return p;
  }
  static Poly one(int nvars) { return constant(nvars, Rational(1)); }
  // the variable with 1-based index i
  static Poly var(int nvars, int i) {
    if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
    Poly p{nvars, {}};
    Mono mo(nvars, 0);
    mo[i - 1] = 1;
    p.add_term(mo, Rational(1));
    return p;
  }

  void add_term(const Mono& mo, const Rational& q) {
    if (q == 0) return;
    auto it = c.find(mo);
    if (it == c.end()) {
      c.emplace(mo, q);
    } else {
      it->second += q;
      if (it->second == 0) c.erase(it);
    }
  }

  bool is_zero() const { return c.empty(); }
  bool operator==(const Poly& o) const { return nvars == o.nvars && c == o.c; }

  Poly operator+(const Poly& o) const {
    Poly out = *this;
    for (auto& [mo, q] : o.c) out.add_term(mo, q);
    return out;
  }
  Poly operator-(const Poly& o) const { return *this + (o * Rational(-1)); }
  Poly operator*(const Rational& q) const {
    Poly out{nvars, {}};
    if (q == 0) return out;
    for (auto& [mo, v] : c) out.c.emplace(mo, v * q);
    return out;
  }
  Poly operator*(const Poly& o) const {
    Poly out{nvars, {}};
    for (auto& [ma, qa] : c)
      for (auto& [mb, qb] : o.c) {
        Mono mo(nvars);
        for (int i = 0; i < nvars; ++i) mo[i] = ma[i] + mb[i];
        out.add_term(mo, qa * qb);
      }
    return out;
  }

  // partial derivative in the 1-based variable i
  Poly derivative(int i) const {
    Poly out{nvars, {}};
    for (auto& [mo, q] : c) {
      if (mo[i - 1] == 0) continue;
      Mono d = mo;
      d[i - 1] -= 1;
      out.add_term(d, q * mo[i - 1]);
    }
    return out;
  }

  // substitute vals[i] for variable i+1; vals may live in a different ring
  Poly subst(const std::vector<Poly>& vals) const {
    if (static_cast<int>(vals.size()) != nvars)
      throw std::invalid_argument("substitution needs one value per variable");
    int target = vals.empty() ? nvars : vals[0].nvars;
    Poly out = Poly::zero(target);
    for (auto& [mo, q] : c) {
      Poly term = Poly::constant(target, q);
      for (int i = 0; i < nvars; ++i)
        for (int e = 0; e < mo[i]; ++e) term = term * vals[i];
      out = out + term;
    }
    return out;
  }
};

inline std::string to_string(const Poly& p, const std::string& stem = "x") {
  if (p.c.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [mo, q] : p.c) {
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) out += "-";
      first = false;
    } else {
      out += sgn(q) < 0 ? " - " : " + ";
    }
    std::string vars;
    for (int i = 0; i < p.nvars; ++i) {
      if (mo[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += stem + std::to_string(i + 1);
      if (mo[i] > 1) vars += "^" + std::to_string(mo[i]);
    }
    if (vars.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += vars;
    }
  }
  return out;
}

}  // namespace exalg
