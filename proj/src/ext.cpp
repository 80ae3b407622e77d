#include "ext.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace exalg {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

int parity_sign(long p) { return (p % 2 == 0) ? 1 : -1; }

// Sign of contracting the full dual monomial y_T out of x_A from the right
// (labels of T applied ascending); false if T is not contained in A.
bool contract_sign(Mask t, Mask a, int* sign, Mask* rest) {
  if ((a & t) != t) return false;
  int sgn = 1;
  Mask cur = a;
  for (Mask tt = t; tt;) {
    Mask low = tt & (tt - 1);
    int label = __builtin_ctz(tt ^ low) + 1;  // smallest remaining label
    // removing x_label from the right of x_cur passes the labels above it
    sgn *= parity_sign(popcount(cur >> label));
    cur &= ~bit(label);
    tt = low;
  }
  *sign = sgn;
  *rest = cur;
  return true;
}

}  // namespace

ExtElement ExtElement::operator+(const ExtElement& o) const {
  require(side == o.side && m == o.m, "side/dimension mismatch");
  ExtElement out = *this;
  for (auto& [s, q] : o.c) out.add_term(s, q);
  return out;
}

ExtElement ExtElement::operator-(const ExtElement& o) const {
  return *this + (o * Rational(-1));
}

ExtElement ExtElement::operator*(const Rational& q) const {
  ExtElement out{side, m, {}};
  if (q == 0) return out;
  for (auto& [s, v] : c) out.c.emplace(s, v * q);
  return out;
}

bool ExtElement::homogeneous_size(int* k) const {
  if (c.empty()) return true;
  int sz = popcount(c.begin()->first);
  for (auto& [s, q] : c)
    if (popcount(s) != sz) return false;
  *k = sz;
  return true;
}

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
  require(a.side == b.side && a.m == b.m, "side/dimension mismatch");
  ExtElement out{a.side, a.m, {}};
  for (auto& [s, qa] : a.c)
    for (auto& [t, qb] : b.c) {
      Mask u;
      int sgn;
      if (subset_wedge(s, t, &u, &sgn)) out.add_term(u, qa * qb * sgn);
    }
  return out;
}

std::string to_string(const ExtElement& e) {
  if (e.c.empty()) return "0";
  const char* gen = e.side == Side::V ? "x" : "y";
  std::ostringstream os;
  bool first = true;
  for (auto& [s, q] : e.c) {
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    bool unit_label = (s == 0);
    if (mag != 1 || unit_label) {
      os << mag.get_str();
      if (!unit_label) os << "*";
    }
    if (!unit_label) {
      os << gen << "{";
      auto labels = to_list(s);
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) os << ",";
        os << labels[i];
      }
      os << "}";
    }
  }
  return os.str();
}

bool EndOperator::is_zero() const {
  for (auto& row : M)
    for (auto& v : row)
      if (v != 0) return false;
  return true;
}

EndOperator EndOperator::operator+(const EndOperator& o) const {
  require(m == o.m, "dimension mismatch");
  EndOperator out = *this;
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j) out.M[i][j] += o.M[i][j];
  return out;
}

EndOperator EndOperator::operator-(const EndOperator& o) const {
  return *this + (o * Rational(-1));
}

EndOperator EndOperator::operator*(const Rational& q) const {
  EndOperator out = *this;
  for (auto& row : out.M)
    for (auto& v : row) v *= q;
  return out;
}

EndOperator EndOperator::operator*(const EndOperator& o) const {
  require(m == o.m, "dimension mismatch");
  EndOperator out = zero(m);
  std::size_t n = M.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (M[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (o.M[k][j] == 0) continue;
        out.M[i][j] += M[i][k] * o.M[k][j];
      }
    }
  return out;
}

ExtElement EndOperator::apply(const ExtElement& v) const {
  require(v.side == Side::V && v.m == m, "operator expects a V-side element");
  ExtElement out{Side::V, m, {}};
  for (auto& [a, q] : v.c)
    for (std::size_t cmask = 0; cmask < M.size(); ++cmask)
      if (M[cmask][a] != 0) out.add_term(static_cast<Mask>(cmask), M[cmask][a] * q);
  return out;
}

EndOperator EndOperator::degree_component(long d) const {
  EndOperator out = zero(m);
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j)
      if (M[i][j] != 0 &&
          popcount(static_cast<Mask>(j)) - popcount(static_cast<Mask>(i)) == static_cast<int>(d))
        out.M[i][j] = M[i][j];
  return out;
}

std::vector<long> EndOperator::degrees_present() const {
  std::vector<long> ds;
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j)
      if (M[i][j] != 0) {
        long d = popcount(static_cast<Mask>(j)) - popcount(static_cast<Mask>(i));
        bool seen = false;
        for (long e : ds) seen = seen || (e == d);
        if (!seen) ds.push_back(d);
      }
  return ds;
}

BiSymbol BiSymbol::operator+(const BiSymbol& o) const {
  require(m == o.m, "dimension mismatch");
  BiSymbol out = *this;
  for (auto& [k, q] : o.c) out.add_term(k.first, k.second, q);
  return out;
}

BiSymbol BiSymbol::operator-(const BiSymbol& o) const {
  return *this + (o * Rational(-1));
}

BiSymbol BiSymbol::operator*(const Rational& q) const {
  BiSymbol out{m, {}};
  if (q == 0) return out;
  for (auto& [k, v] : c) out.c.emplace(k, v * q);
  return out;
}

BiSymbol BiSymbol::v_component(int j) const {
  BiSymbol out{m, {}};
  for (auto& [k, v] : c)
    if (popcount(k.second) == j) out.c.emplace(k, v);
  return out;
}

BiSymbol BiSymbol::order_component(int i) const {
  BiSymbol out{m, {}};
  for (auto& [k, v] : c)
    if (popcount(k.first) == i) out.c.emplace(k, v);
  return out;
}

ExtElement BiSymbol::pi0() const {
  ExtElement out{Side::Dual, m, {}};
  for (auto& [k, v] : c)
    if (k.second == 0) out.add_term(k.first, v);
  return out;
}

bool BiSymbol::homogeneous_degree(long* d) const {
  if (c.empty()) return true;
  long deg = popcount(c.begin()->first.first) - popcount(c.begin()->first.second);
  for (auto& [k, v] : c)
    if (popcount(k.first) - popcount(k.second) != deg) return false;
  *d = deg;
  return true;
}

std::string to_string(const BiSymbol& b) {
  if (b.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, q] : b.c) {
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << "*";
    auto part = [&os](const char* gen, Mask s) {
      if (s == 0) {
        os << "1";
        return;
      }
      os << gen << "{";
      auto labels = to_list(s);
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) os << ",";
        os << labels[i];
      }
      os << "}";
    };
    part("y", k.first);
    os << "*";
    part("x", k.second);
  }
  return os.str();
}

EndOperator i_op(const ExtElement& z) {
  require(z.side == Side::V, "wedge operator expects a V-side element");
  EndOperator out = EndOperator::zero(z.m);
  Mask all = full_mask(z.m);
  for (auto& [s, q] : z.c)
    for (Mask a = 0; a <= all; ++a) {
      if (a & s) continue;
      out.M[a | s][a] += q * parity_sign(inversions(a, s));
      if (a == all) break;
    }
  return out;
}

EndOperator j_op(const ExtElement& y) {
  require(y.side == Side::Dual, "contraction operator expects a dual element");
  EndOperator out = EndOperator::zero(y.m);
  Mask all = full_mask(y.m);
  for (auto& [t, q] : y.c)
    for (Mask a = 0; a <= all; ++a) {
      int sgn;
      Mask rest;
      if (contract_sign(t, a, &sgn, &rest)) out.M[rest][a] += q * sgn;
      if (a == all) break;
    }
  return out;
}

ExtElement k_contract(const ExtElement& z, const ExtElement& y) {
  require(z.side == Side::V && y.side == Side::Dual, "k expects (V, dual)");
  require(z.m == y.m, "dimension mismatch");
  ExtElement out{Side::Dual, z.m, {}};
  for (auto& [a, qa] : z.c)
    for (auto& [t, qt] : y.c) {
      // left derivation: single contractions applied for labels of A in
      // descending order; each removes its label from the front.
      Mask cur = t;
      int sgn = 1;
      bool dead = false;
      auto labels = to_list(a);
      for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
        if (!(cur & bit(*it))) {
          dead = true;
          break;
        }
        sgn *= parity_sign(popcount(cur & (bit(*it) - 1)));
        cur &= ~bit(*it);
      }
      if (!dead) out.add_term(cur, qa * qt * sgn);
    }
  return out;
}

Rational scalar_part(const ExtElement& e) {
  auto it = e.c.find(0);
  return it == e.c.end() ? Rational(0) : it->second;
}

Rational k_scalar(const ExtElement& z, const ExtElement& y) {
  return scalar_part(k_contract(z, y));
}

namespace {

// Accumulate q * Gr(y_T ⊗ x_S) into R.
void add_gr_action(EndOperator& r, Mask t, Mask s, const Rational& q) {
  Mask comp = full_mask(r.m) & ~t;
  for (Mask rest = comp;; rest = (rest - 1) & comp) {
    Mask a = t | rest;
    int sgn;
    Mask after;
    if (contract_sign(t, a, &sgn, &after) && !(after & s))
      r.M[after | s][a] += q * sgn * parity_sign(inversions(after, s));
    if (rest == 0) break;
  }
}

// Accumulate q * Gl(y_T ⊗ x_S) into R.
void add_gl_action(EndOperator& r, Mask t, Mask s, const Rational& q) {
  int swap_sign = parity_sign(popcount(t) * popcount(s));
  Mask comp = full_mask(r.m) & ~s;
  for (Mask a = comp;; a = (a - 1) & comp) {
    Mask b = a | s;
    int sgn;
    Mask after;
    if (contract_sign(t, b, &sgn, &after))
      r.M[after][a] += q * swap_sign * sgn * parity_sign(inversions(a, s));
    if (a == 0) break;
  }
}

// Plain dense LU with partial pivoting over Q.
struct DenseSolver {
  int n = 0;
  std::vector<std::vector<Rational>> lu;
  std::vector<int> perm;

  void factor(std::vector<std::vector<Rational>> a) {
    n = static_cast<int>(a.size());
    perm.resize(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int k = 0; k < n; ++k) {
      int piv = -1;
      for (int r = k; r < n; ++r)
        if (a[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::logic_error("singular system");
      std::swap(a[k], a[piv]);
      std::swap(perm[k], perm[piv]);
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] == 0) continue;
        Rational f = a[i][k] / a[k][k];
        a[i][k] = f;
        for (int j = k + 1; j < n; ++j)
          if (a[k][j] != 0) a[i][j] -= f * a[k][j];
      }
    }
    lu = std::move(a);
  }

  std::vector<Rational> solve(const std::vector<Rational>& b) const {
    std::vector<Rational> y(n), x(n);
    for (int i = 0; i < n; ++i) {
      y[i] = b[perm[i]];
      for (int j = 0; j < i; ++j)
        if (lu[i][j] != 0) y[i] -= lu[i][j] * y[j];
    }
    for (int i = n - 1; i >= 0; --i) {
      x[i] = y[i];
      for (int j = i + 1; j < n; ++j)
        if (lu[i][j] != 0) x[i] -= lu[i][j] * x[j];
      x[i] /= lu[i][i];
    }
    return x;
  }
};

// Cached factorization of the symbol -> operator-matrix system for Gl.
// Column order: (T, S) in numeric mask order; row order: (out, in) likewise.
const DenseSolver& gl_solver(int m) {
  static std::mutex mu;
  static std::map<int, DenseSolver> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::size_t dim = std::size_t{1} << m;
  std::size_t ncols = dim * dim;
  std::vector<std::vector<Rational>> a(ncols, std::vector<Rational>(ncols, Rational(0)));
  for (Mask t = 0; t < dim; ++t)
    for (Mask s = 0; s < dim; ++s) {
      EndOperator col = EndOperator::zero(m);
      add_gl_action(col, t, s, Rational(1));
      std::size_t cidx = static_cast<std::size_t>(t) * dim + s;
      for (std::size_t out = 0; out < dim; ++out)
        for (std::size_t in = 0; in < dim; ++in)
          if (col.M[out][in] != 0) a[out * dim + in][cidx] = col.M[out][in];
    }
  DenseSolver solver;
  solver.factor(std::move(a));
  return cache.emplace(m, std::move(solver)).first->second;
}

}  // namespace

EndOperator Gr(const BiSymbol& s) {
  EndOperator out = EndOperator::zero(s.m);
  for (auto& [k, q] : s.c) add_gr_action(out, k.first, k.second, q);
  return out;
}

BiSymbol Fr(const EndOperator& l) {
  // Forward substitution along the subset order: the only symbols acting
  // nontrivially on x_T have dual label contained in T, and y_T ⊗ x_S sends
  // x_T to ±x_S. So once all smaller dual labels are peeled off, column T of
  // the remainder reads off every coefficient with dual label T.
  EndOperator r = l;
  BiSymbol out = BiSymbol::zero(l.m);
  std::size_t dim = std::size_t{1} << l.m;
  for (Mask t : masks_in_order(l.m)) {
    int tsz = popcount(t);
    int diag = parity_sign(static_cast<long>(tsz) * (tsz - 1) / 2);
    std::vector<std::pair<Mask, Rational>> found;
    for (std::size_t c = 0; c < dim; ++c)
      if (r.M[c][t] != 0) found.emplace_back(static_cast<Mask>(c), r.M[c][t] * diag);
    for (auto& [s, q] : found) {
      out.add_term(t, s, q);
      add_gr_action(r, t, s, -q);
    }
  }
  if (!r.is_zero()) throw std::logic_error("symbol decomposition failed");
  return out;
}

EndOperator Gl(const BiSymbol& s) {
  EndOperator out = EndOperator::zero(s.m);
  for (auto& [k, q] : s.c) add_gl_action(out, k.first, k.second, q);
  return out;
}

BiSymbol Fl(const EndOperator& l) {
  std::size_t dim = std::size_t{1} << l.m;
  std::vector<Rational> rhs(dim * dim, Rational(0));
  for (std::size_t out = 0; out < dim; ++out)
    for (std::size_t in = 0; in < dim; ++in) rhs[out * dim + in] = l.M[out][in];
  std::vector<Rational> sol = gl_solver(l.m).solve(rhs);
  BiSymbol out = BiSymbol::zero(l.m);
  for (Mask t = 0; t < dim; ++t)
    for (Mask s = 0; s < dim; ++s) {
      const Rational& q = sol[static_cast<std::size_t>(t) * dim + s];
      if (q != 0) out.add_term(t, s, q);
    }
  return out;
}

Rational pairing(const ExtElement& a, const ExtElement& b) {
  require(a.side == Side::V && b.side == Side::V, "pairing expects V-side elements");
  require(a.m == b.m, "dimension mismatch");
  Mask all = full_mask(a.m);
  Rational out(0);
  for (auto& [s, qa] : a.c) {
    Mask t = all & ~s;
    auto it = b.c.find(t);
    if (it != b.c.end()) out += qa * it->second * parity_sign(inversions(s, t));
  }
  return out;
}

int top_sign(Mask a, int m) {
  return parity_sign(inversions(a, full_mask(m) & ~a));
}

EndOperator adjoint(const EndOperator& l) {
  // Componentwise solve of <L(x_A), x_B> = (-1)^{d|B|} <x_A, L+(x_B)> where d
  // is the degree of the entry's homogeneous component. The pairing Gram
  // matrix is a signed permutation, so each unknown entry is determined by
  // exactly one known one.
  EndOperator out = EndOperator::zero(l.m);
  Mask all = full_mask(l.m);
  std::size_t dim = std::size_t{1} << l.m;
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t a = 0; a < dim; ++a) {
      const Rational& v = l.M[c][a];
      if (v == 0) continue;
      Mask cm = static_cast<Mask>(c), am = static_cast<Mask>(a);
      long d = popcount(am) - popcount(cm);
      Mask cbar = all & ~cm, abar = all & ~am;
      int sgn = parity_sign(d * popcount(cbar)) * top_sign(cm, l.m) * top_sign(am, l.m);
      out.M[abar][cbar] += v * sgn;
    }
  return out;
}

ExtElement I_endo(const ExtElement& y) {
  require(y.side == Side::Dual, "I acts on the dual side");
  ExtElement out{Side::Dual, y.m, {}};
  for (auto& [t, q] : y.c) out.c.emplace(t, q * parity_sign(popcount(t)));
  return out;
}

ExtElement J_endo(const ExtElement& z) {
  require(z.side == Side::V, "J acts on the V side");
  ExtElement out{Side::V, z.m, {}};
  for (auto& [s, q] : z.c) out.c.emplace(s, q * parity_sign(popcount(s)));
  return out;
}

ExtElement gamma_map(const ExtElement& w) {
  require(w.side == Side::V, "gamma expects a V-side element");
  int m = w.m;
  std::size_t dim = std::size_t{1} << m;
  // rows indexed by probe monomials x_A, columns by dual labels y_T
  std::vector<std::vector<Rational>> sys(dim, std::vector<Rational>(dim, Rational(0)));
  std::vector<Rational> rhs(dim, Rational(0));
  for (std::size_t a = 0; a < dim; ++a) {
    ExtElement xa = ExtElement::basis(Side::V, m, static_cast<Mask>(a));
    for (std::size_t t = 0; t < dim; ++t)
      sys[a][t] = k_scalar(xa, ExtElement::basis(Side::Dual, m, static_cast<Mask>(t)));
    rhs[a] = pairing(xa, w);
  }
  DenseSolver solver;
  solver.factor(std::move(sys));
  std::vector<Rational> g = solver.solve(rhs);
  ExtElement out{Side::Dual, m, {}};
  for (std::size_t t = 0; t < dim; ++t)
    if (g[t] != 0) out.add_term(static_cast<Mask>(t), g[t]);
  return out;
}

ExtElement zeta_map(const ExtElement& g) {
  require(g.side == Side::Dual, "zeta expects a dual-side element");
  int m = g.m;
  std::size_t dim = std::size_t{1} << m;
  std::vector<std::vector<Rational>> sys(dim, std::vector<Rational>(dim, Rational(0)));
  for (std::size_t b = 0; b < dim; ++b) {
    ExtElement img = gamma_map(ExtElement::basis(Side::V, m, static_cast<Mask>(b)));
    for (auto& [t, q] : img.c) sys[t][b] = q;
  }
  std::vector<Rational> rhs(dim, Rational(0));
  for (auto& [t, q] : g.c) rhs[t] = q;
  DenseSolver solver;
  solver.factor(std::move(sys));
  std::vector<Rational> w = solver.solve(rhs);
  ExtElement out{Side::V, m, {}};
  for (std::size_t s = 0; s < dim; ++s)
    if (w[s] != 0) out.add_term(static_cast<Mask>(s), w[s]);
  return out;
}

VVElement coproduct_v(const ExtElement& z) {
  require(z.side == Side::V, "coproduct acts on the V side");
  VVElement out;
  for (auto& [a, q] : z.c) {
    for (Mask s = a;; s = (s - 1) & a) {
      Mask t = a & ~s;
      Rational v = q * parity_sign(inversions(s, t));
      auto key = std::make_pair(s, t);
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(key, v);
      else {
        it->second += v;
        if (it->second == 0) out.erase(it);
      }
      if (s == 0) break;
    }
  }
  return out;
}

BiSymbol one_m(const ExtElement& h) {
  require(h.side == Side::V, "expects a V-side element");
  int m = h.m;
  // y_m ∧ .. ∧ y_1 written on the ascending basis.
  int rev = parity_sign(static_cast<long>(m) * (m - 1) / 2);
  BiSymbol out = BiSymbol::zero(m);
  for (auto& [s, q] : h.c)
    out.add_term(full_mask(m), s, q * rev * parity_sign(static_cast<long>(m) * popcount(s)));
  return out;
}

EndOperator bracket(const EndOperator& a, const EndOperator& b) {
  EndOperator out = EndOperator::zero(a.m);
  for (long da : a.degrees_present())
    for (long db : b.degrees_present()) {
      EndOperator ah = a.degree_component(da), bh = b.degree_component(db);
      out = out + (ah * bh - (bh * ah) * Rational(parity_sign(da * db)));
    }
  return out;
}

BiSymbol bracket_symbols(const BiSymbol& l1, const BiSymbol& l2) {
  return Fr(bracket(Gr(l1), Gr(l2)));
}

D1Tuple canonical_factors(Mask t, Mask s, int m) {
  auto labels = to_list(t);
  D1Tuple ops;
  for (std::size_t i = labels.size(); i-- > 1;)
    ops.push_back(BiSymbol::term(m, bit(labels[i]), 0));
  ops.push_back(BiSymbol::term(m, bit(labels[0]), s));
  return ops;
}

BiSymbol symbol_product(const BiSymbol& a, const BiSymbol& b) {
  require(a.m == b.m, "dimension mismatch");
  BiSymbol out = BiSymbol::zero(a.m);
  for (auto& [ka, qa] : a.c)
    for (auto& [kb, qb] : b.c) {
      Mask t, s;
      int st, ss;
      if (!subset_wedge(ka.first, kb.first, &t, &st)) continue;
      if (!subset_wedge(ka.second, kb.second, &s, &ss)) continue;
      int swap = parity_sign(popcount(ka.second) * popcount(kb.first));
      out.add_term(t, s, qa * qb * st * ss * swap);
    }
  return out;
}

BiSymbol p_of_tuple(const D1Tuple& ops, int m) {
  // product in the graded-commutative symbol algebra; first-order factors
  // multiply straight into the top order.
  BiSymbol prod = BiSymbol::term(m, 0, 0);
  for (const BiSymbol& b : ops) prod = symbol_product(prod, b);
  return prod;
}

BiSymbol p_of(const TupleSum& w, int m) {
  BiSymbol out = BiSymbol::zero(m);
  for (auto& [tuple, q] : w) out = out + p_of_tuple(tuple, m) * q;
  return out;
}

TupleSum adbar(const BiSymbol& l, const D1Tuple& w) {
  long dl = 0;
  require(l.homogeneous_degree(&dl), "bracketing element must be homogeneous");
  require(l.order_component(1) == l, "bracketing element must be first order");
  std::vector<long> degs(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    require(w[i].homogeneous_degree(&degs[i]), "tuple factors must be homogeneous");
    require(w[i].order_component(1) == w[i], "tuple factors must be first order");
  }
  TupleSum out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    long right = 0;
    for (std::size_t j = k + 1; j < w.size(); ++j) right += degs[j];
    BiSymbol replaced = bracket_symbols(l, w[k]);
    if (replaced.is_zero()) continue;
    D1Tuple tuple = w;
    tuple[k] = replaced;
    out.emplace_back(std::move(tuple), Rational(parity_sign(dl * right)));
  }
  return out;
}

BiSymbol ad_top(const BiSymbol& l, const BiSymbol& d) {
  int m = d.m;
  require(d.order_component(m) == d, "expected a top-order symbol");
  BiSymbol out = BiSymbol::zero(m);
  long dl = 0;
  if (l.homogeneous_degree(&dl)) {
    for (auto& [k, q] : d.c) {
      // lift the symbol through the multiplication map and act on the lift;
      // the lift's image is proportional to the symbol, so rescale.
      D1Tuple lift = canonical_factors(k.first, k.second, m);
      BiSymbol image = p_of_tuple(lift, m);
      auto it = image.c.find(k);
      if (it == image.c.end() || !(image == BiSymbol::term(m, k.first, k.second, it->second)))
        throw std::logic_error("factorization is not proportional to its symbol");
      out = out + p_of(adbar(l, lift), m) * (q / it->second);
    }
    return out;
  }
  // split an inhomogeneous first-order element by degree
  std::map<long, BiSymbol> parts;
  for (auto& [k, q] : l.c) {
    long deg = popcount(k.first) - popcount(k.second);
    auto it = parts.find(deg);
    if (it == parts.end()) it = parts.emplace(deg, BiSymbol::zero(l.m)).first;
    it->second.add_term(k.first, k.second, q);
  }
  for (auto& [deg, part] : parts) out = out + ad_top(part, d);
  return out;
}

}  // namespace exalg
