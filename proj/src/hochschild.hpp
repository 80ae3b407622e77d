#pragma once

// Hochschild chains of a polynomial ring, with the shuffle product, cut
// coproduct, antipode, the two one-form "connection" maps, and the map to
// differential forms with its antisymmetrization section.
//
// A chain of degree -n is a sum of words (r_0, ..., r_n) of monomials;
// general polynomial slots expand multilinearly. Tensor legs of one-forms are
// reduced to the basis d(var) with polynomial coefficients folded into slot 0
// of the word (the slot the module structure multiplies).

#include <map>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "subset.hpp"

namespace exalg {

using Word = std::vector<Mono>;

struct Chain {
  int nvars = 0;
  std::map<Word, Rational> c;

  static Chain zero(int nvars) { return Chain{nvars, {}}; }
  // expands a word of polynomial slots into monomial words
  static Chain from_polys(const std::vector<Poly>& slots);

  void add_term(const Word& w, const Rational& q) {
    if (q == 0) return;
    auto it = c.find(w);
    if (it == c.end()) {
      c.emplace(w, q);
    } else {
      it->second += q;
      if (it->second == 0) c.erase(it);
    }
  }

  bool is_zero() const { return c.empty(); }
  bool operator==(const Chain& o) const { return nvars == o.nvars && c == o.c; }

  Chain operator+(const Chain& o) const;
  Chain operator-(const Chain& o) const;
  Chain operator*(const Rational& q) const;

  // true if every word has exactly n+1 slots
  bool pure_degree(int* n) const;
};

std::string to_string(const Chain& ch);

// chain tensored with an ordered list of one-form legs d(var)
struct ChainForms {
  int nvars = 0;
  std::map<std::pair<Word, std::vector<int>>, Rational> c;

  static ChainForms zero(int nvars) { return ChainForms{nvars, {}}; }
  void add_term(const Word& w, const std::vector<int>& legs, const Rational& q) {
    if (q == 0) return;
    auto key = std::make_pair(w, legs);
    auto it = c.find(key);
    if (it == c.end()) {
      c.emplace(key, q);
    } else {
      it->second += q;
      if (it->second == 0) c.erase(it);
    }
  }
  bool is_zero() const { return c.empty(); }
  bool operator==(const ChainForms& o) const { return nvars == o.nvars && c == o.c; }
  ChainForms operator+(const ChainForms& o) const;
  ChainForms operator-(const ChainForms& o) const;
  ChainForms operator*(const Rational& q) const;
};

// chain tensored with a wedge of d(var)'s, ascending by variable index
struct WedgeChain {
  int nvars = 0;
  std::map<std::pair<Word, Mask>, Rational> c;

  static WedgeChain zero(int nvars) { return WedgeChain{nvars, {}}; }
  void add_term(const Word& w, Mask vars, const Rational& q) {
    if (q == 0) return;
    auto key = std::make_pair(w, vars);
    auto it = c.find(key);
    if (it == c.end()) {
      c.emplace(key, q);
    } else {
      it->second += q;
      if (it->second == 0) c.erase(it);
    }
  }
  bool is_zero() const { return c.empty(); }
  bool operator==(const WedgeChain& o) const { return nvars == o.nvars && c == o.c; }
};

// polynomial coefficients times a wedge of d(var)'s
struct FormElement {
  int nvars = 0;
  std::map<std::pair<Mono, Mask>, Rational> c;

  static FormElement zero(int nvars) { return FormElement{nvars, {}}; }
  void add_term(const Mono& mo, Mask vars, const Rational& q) {
    if (q == 0) return;
    auto key = std::make_pair(mo, vars);
    auto it = c.find(key);
    if (it == c.end()) {
      c.emplace(key, q);
    } else {
      it->second += q;
      if (it->second == 0) c.erase(it);
    }
  }
  bool is_zero() const { return c.empty(); }
  bool operator==(const FormElement& o) const { return nvars == o.nvars && c == o.c; }
  FormElement operator+(const FormElement& o) const;
  FormElement operator-(const FormElement& o) const;
  FormElement operator*(const Rational& q) const;
};

std::string to_string(const FormElement& f);

// pairs of words with the second word starting at 1 (a cut-style tensor over
// the ring through the slot-0 action)
struct CutChain {
  int nvars = 0;
  std::map<std::pair<Word, Word>, Rational> c;

  static CutChain zero(int nvars) { return CutChain{nvars, {}}; }
  void add_term(const Word& a, const Word& b, const Rational& q) {
    if (q == 0) return;
    auto key = std::make_pair(a, b);
    auto it = c.find(key);
    if (it == c.end()) {
      c.emplace(key, q);
    } else {
      it->second += q;
      if (it->second == 0) c.erase(it);
    }
  }
  bool is_zero() const { return c.empty(); }
  bool operator==(const CutChain& o) const { return nvars == o.nvars && c == o.c; }
};

// cyclic differential: adjacent merges with alternating signs plus the wrap
// term multiplying the last slot into slot 0
Chain d_cyclic(const Chain& ch);
// two-sided bar differential: adjacent merges only
Chain d_bar(const Chain& ch);

// shuffle product; slot-0 entries multiply, the remaining slots shuffle with
// the permutation sign
Chain shuffle(const Chain& a, const Chain& b);

// cut coproduct, second word led by 1
CutChain cut(const Chain& ch);

// antipode: reverse slots 1..n with sign (-1)^{n(n+1)/2}
Chain antipode(const Chain& ch);

// counit: the slot-0 polynomial of length-1 words
Poly counit(const Chain& ch);
// unit: a polynomial as a length-1 chain
Chain unit_chain(const Poly& p);

// map to forms: (r_0, ..., r_n) -> (1/n!) r_0 dr_1 ^ ... ^ dr_n
FormElement hkr(const Chain& ch);

// antisymmetrization section of hkr: r_0 dx_{i_1}^...^dx_{i_k} maps to the
// signed sum over permutations of (r_0, x_{i_s(1)}, ..., x_{i_s(k)})
Chain antisym(const FormElement& f);

// multiply i-forms by (-1)^i
FormElement form_J(const FormElement& f);

// right connection: (r_0,...,r_n) -> (r_0,...,r_{n-1}) (x) dr_n
ChainForms alpha_R(const Chain& ch);
// left connection: (r_0,...,r_n) -> (-1)^{n-1} (r_0,r_2,...,r_n) (x) dr_1
ChainForms alpha_L(const Chain& ch);

// the same maps acting on the chain part, new leg adjacent to the chain
ChainForms alpha_R_tensor(const ChainForms& cf);
ChainForms alpha_L_tensor(const ChainForms& cf);

// swap the two legs of a two-leg element, with the one-form Koszul sign
ChainForms swap_two_legs(const ChainForms& cf);

// sum over i of (1/i!) alpha_R^i
ChainForms exp_alpha_R(const Chain& ch);

// wedge the ordered legs into an ascending wedge (permutation sign)
WedgeChain wedge_legs(const ChainForms& cf);

// cut, then send the second word to forms and fold its coefficient into
// slot 0 of the first word
WedgeChain cut_then_forms(const Chain& ch);

}  // namespace exalg
