#pragma once

// The odd symmetric algebra S(V[1]) (exterior algebra on generators x_1..x_m
// of degree -1) and its dual S(V*[-1]) (generators y_i of degree +1), with
// the operator calculus on End(S(V[1])): wedge/contraction operators, the
// left/right symbol isomorphisms, the Berezinian pairing and its adjoint,
// the top-duality maps, and the first-order-operator (adjoint-action)
// machinery. Everything is exact over Q.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "subset.hpp"

namespace exalg {

enum class Side { V, Dual };

// deg(x_S) = -|S| on the V side; deg(y_T) = +|T| on the dual side.
inline long side_degree(Side side, Mask s) {
  return side == Side::V ? -popcount(s) : popcount(s);
}

struct ExtElement {
  Side side = Side::V;
  int m = 0;
  std::map<Mask, Rational> c;

  static ExtElement zero(Side side, int m) { return ExtElement{side, m, {}}; }
  static ExtElement unit(Side side, int m) {
    return ExtElement{side, m, {{Mask{0}, Rational(1)}}};
  }
  static ExtElement basis(Side side, int m, Mask s, Rational q = Rational(1)) {
    ExtElement e{side, m, {}};
    e.add_term(s, q);
    return e;
  }
  static ExtElement gen(Side side, int m, int label) {
    return basis(side, m, bit(label));
  }

  void add_term(Mask s, const Rational& q) {
    if (q == 0) return;
    auto it = c.find(s);
    if (it == c.end()) {
      c.emplace(s, q);
    } else {
      it->second += q;
      if (it->second == 0) c.erase(it);
    }
  }
  bool is_zero() const { return c.empty(); }
  bool operator==(const ExtElement& o) const {
    return side == o.side && m == o.m && c == o.c;
  }
  ExtElement operator+(const ExtElement& o) const;
  ExtElement operator-(const ExtElement& o) const;
  ExtElement operator*(const Rational& q) const;
  ExtElement operator-() const { return *this * Rational(-1); }
  // True if every monomial has the same word length (so the element is
  // homogeneous); k receives that length.
  bool homogeneous_size(int* k) const;
};

ExtElement wedge(const ExtElement& a, const ExtElement& b);

std::string to_string(const ExtElement& e);

// Dense endomorphism of S(V[1]) over the 2^m subset basis; M[out][in].
struct EndOperator {
  int m = 0;
  std::vector<std::vector<Rational>> M;

  static EndOperator zero(int m) {
    std::size_t n = std::size_t{1} << m;
    return EndOperator{m, std::vector<std::vector<Rational>>(
                              n, std::vector<Rational>(n, Rational(0)))};
  }
  static EndOperator identity(int m) {
    EndOperator e = zero(m);
    for (std::size_t i = 0; i < e.M.size(); ++i) e.M[i][i] = 1;
    return e;
  }
  bool operator==(const EndOperator& o) const { return m == o.m && M == o.M; }
  bool is_zero() const;
  EndOperator operator+(const EndOperator& o) const;
  EndOperator operator-(const EndOperator& o) const;
  EndOperator operator*(const Rational& q) const;
  // Standard composition: (a*b)(H) = a(b(H)).
  EndOperator operator*(const EndOperator& o) const;

  ExtElement apply(const ExtElement& v) const;

  // Entries with popcount(in) - popcount(out) == d (the degree-d part).
  EndOperator degree_component(long d) const;
  std::vector<long> degrees_present() const;
};

// Element of S(V*[-1]) ⊗ S(V[1]): the symbol space. Key is (dual label T,
// V label S). Its |T| = i summand is the space of order-i operator symbols.
struct BiSymbol {
  int m = 0;
  std::map<std::pair<Mask, Mask>, Rational> c;

  static BiSymbol zero(int m) { return BiSymbol{m, {}}; }
  static BiSymbol term(int m, Mask t, Mask s, Rational q = Rational(1)) {
    BiSymbol b{m, {}};
    b.add_term(t, s, q);
    return b;
  }
  void add_term(Mask t, Mask s, const Rational& q) {
    if (q == 0) return;
    auto key = std::make_pair(t, s);
    auto it = c.find(key);
    if (it == c.end()) {
      c.emplace(key, q);
    } else {
      it->second += q;
      if (it->second == 0) c.erase(it);
    }
  }
  bool is_zero() const { return c.empty(); }
  bool operator==(const BiSymbol& o) const { return m == o.m && c == o.c; }
  BiSymbol operator+(const BiSymbol& o) const;
  BiSymbol operator-(const BiSymbol& o) const;
  BiSymbol operator*(const Rational& q) const;

  // Terms with |S| = j (V-side word length j).
  BiSymbol v_component(int j) const;
  // Terms with |T| = i (operator order i).
  BiSymbol order_component(int i) const;
  // The |S| = 0 part as a dual-side element (the "constant term" of the
  // corresponding operator).
  ExtElement pi0() const;
  // True if all terms share one degree |T|-|S|; d receives it.
  bool homogeneous_degree(long* d) const;
};

std::string to_string(const BiSymbol& b);

// Wedge-by-Z operator H -> H ∧ Z.
EndOperator i_op(const ExtElement& z);
// Right-derivation contraction by a dual element (odd derivation from the
// right; products of generators compose contravariantly).
EndOperator j_op(const ExtElement& y);
// Left-derivation contraction of S(V*[-1]) by a V-side element: (Z|Y).
ExtElement k_contract(const ExtElement& z, const ExtElement& y);
// Scalar part p0 of an element.
Rational scalar_part(const ExtElement& e);
// (Z||Y): scalar part of (Z|Y).
Rational k_scalar(const ExtElement& z, const ExtElement& y);

// Right symbol realization Gr(Y⊗Z) = (wedge Z) after (contract Y), and its
// inverse Fr computed by forward substitution along the subset order.
EndOperator Gr(const BiSymbol& s);
BiSymbol Fr(const EndOperator& l);
// Left realization Gl(Y⊗Z) = (-1)^{|Y||Z|} (contract Y) after (wedge Z); its
// inverse Fl is computed by a generic dense linear solve so the left/right
// transpose identity stays a genuine test.
EndOperator Gl(const BiSymbol& s);
BiSymbol Fl(const EndOperator& l);

// Berezinian pairing: coefficient of the top monomial in a ∧ b.
Rational pairing(const ExtElement& a, const ExtElement& b);
// ε(A, complement(A)) = <x_A, x_{Ac}>.
int top_sign(Mask a, int m);
// Adjoint with respect to the pairing: <L(a), b> = (-1)^{|L||b|} <a, L+(b)>,
// solved entrywise from the defining relation.
EndOperator adjoint(const EndOperator& l);

// Sign endomorphisms: I on the dual side ((-1)^{|T|}), J on the V side
// ((-1)^{|S|}).
ExtElement I_endo(const ExtElement& y);
ExtElement J_endo(const ExtElement& z);

// Duality against the top form: gamma(W) = Σ g_T y_T (implicitly ⊗ x_top),
// defined by pairing(x_A, W) = Σ_T g_T (x_A || y_T) and computed by a dense
// solve of that system; zeta is the inverse map.
ExtElement gamma_map(const ExtElement& w);
ExtElement zeta_map(const ExtElement& g);

// Unshuffle coproduct on S(V[1]): x_A -> Σ_{S ⊔ T = A} sign(S,T) x_S ⊗ x_T.
using VVElement = std::map<std::pair<Mask, Mask>, Rational>;
VVElement coproduct_v(const ExtElement& z);

// H -> (-1)^{m|H|} y_m∧..∧y_1 ⊗ H ⊗ x_1∧..∧x_m, stored as the order-m symbol
// (the trailing top V factor is implicit and fixed).
BiSymbol one_m(const ExtElement& h);

// Graded commutator [a,b] = a∘b - (-1)^{|a||b|} b∘a (operators split into
// homogeneous degree components first).
EndOperator bracket(const EndOperator& a, const EndOperator& b);
// The same bracket computed on first-order symbols through Gr/Fr.
BiSymbol bracket_symbols(const BiSymbol& l1, const BiSymbol& l2);

// First-order tuples: a formal sum of m-tuples of homogeneous first-order
// symbols, listed left to right in composition order.
using D1Tuple = std::vector<BiSymbol>;
using TupleSum = std::vector<std::pair<D1Tuple, Rational>>;

// Canonical factor tuple of an order-m symbol y_T ⊗ x_S: the composition
// (y_{t_m}⊗1) ∘ ... ∘ (y_{t_2}⊗1) ∘ (y_{t_1}⊗x_S), whose top-order symbol
// part is exactly y_T ⊗ x_S with coefficient +1.
D1Tuple canonical_factors(Mask t, Mask s, int m);
// Top-order part (|T| = m) of the symbol of the composed tuple.
// Graded-commutative product on symbols: wedge both sides, with the sign for
// moving the first factor's V part past the second factor's dual part.
BiSymbol symbol_product(const BiSymbol& a, const BiSymbol& b);

BiSymbol p_of_tuple(const D1Tuple& ops, int m);
BiSymbol p_of(const TupleSum& w, int m);
// Right-Leibniz extension of bracketing by L (homogeneous first-order) over
// tuple slots: slot k picks up the sign (-1)^{|L| * (sum of degrees of the
// factors to its right)}.
TupleSum adbar(const BiSymbol& l, const D1Tuple& w);
// Adjoint action of L on an order-m symbol, evaluated through the canonical
// factorization of each term.
BiSymbol ad_top(const BiSymbol& l, const BiSymbol& d);

}  // namespace exalg
