#pragma once

// Nilpotent matrix Lie algebras over Q: exact exponentials, the differential
// of exp computed two ways (symbolic first-order expansion vs. the ad-operator
// series), basis closure tables, Jacobian determinants, and the
// left-invariant-frame comparison on the polynomial function model in
// exponential coordinates. Everything is a finite exact computation because
// all matrices are nilpotent.

#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace exalg {

struct QMatrix {
  int n = 0;
  std::vector<Rational> e;  // row-major

  static QMatrix zero(int n) {
    return QMatrix{n, std::vector<Rational>(static_cast<std::size_t>(n) * n)};
  }
  static QMatrix identity(int n);
  // elementary matrix E_ij, 1-based
  static QMatrix unit(int n, int i, int j);

  Rational& at(int i, int j) { return e[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }
  const Rational& at(int i, int j) const {
    return e[static_cast<std::size_t>(i - 1) * n + (j - 1)];
  }
  bool is_zero() const;
  bool operator==(const QMatrix& o) const { return n == o.n && e == o.e; }
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const Rational& q) const;

  // Z^n == 0; for matrices this is equivalent to nilpotency.
  bool is_nilpotent() const;
};

// Finite sum Σ Z^k / k!. Throws std::domain_error when Z is not nilpotent.
QMatrix mat_exp(const QMatrix& z);
// Inverse on unipotents: log(I + N) = Σ (-1)^{k+1} N^k / k, N nilpotent.
QMatrix mat_log_unipotent(const QMatrix& g);

// t-linear coefficient of exp(Z + tW), expanded exactly (dual numbers).
QMatrix dexp_direct(const QMatrix& z, const QMatrix& w);
// exp(Z) · [(1 - e^{-ad Z})/ad Z](W); equals dexp_direct.
QMatrix dexp_formula(const QMatrix& z, const QMatrix& w);
// t-linear coefficient of exp(-(Z + tW)).
QMatrix dbarexp_direct(const QMatrix& z, const QMatrix& w);
// exp(-Z) · [-(e^{ad Z} - 1)/ad Z](W); equals dbarexp_direct.
QMatrix dbarexp_formula(const QMatrix& z, const QMatrix& w);

struct LieBasis {
  std::vector<QMatrix> x;  // basis matrices, all nilpotent, same size
  // structure[i][j][k] = coefficient of x[k] in [x[i], x[j]]
  std::vector<std::vector<std::vector<Rational>>> structure;
  int dim() const { return static_cast<int>(x.size()); }
  int mat_size() const { return x.empty() ? 0 : x[0].n; }
};

// Builds the closure table; throws std::invalid_argument when the matrices
// are linearly dependent, some matrix is not nilpotent, or a bracket of two
// basis elements leaves the span.
LieBasis make_basis(const std::vector<QMatrix>& mats);
// Coordinates of m in the basis; throws std::invalid_argument outside span.
std::vector<Rational> span_coords(const LieBasis& b, const QMatrix& m);
// Parse {"matrices": [{"n": 3, "entries": [[...row...], ...]}, ...]} (or a
// bare array); entries are integers or "p/q" strings.
LieBasis basis_from_json(const std::string& text);
// Human-readable bracket table, one line per pair i < j.
std::string closure_table_text(const LieBasis& b);
// The strictly-upper-triangular algebra of size n with basis E_ij, i < j.
LieBasis upper_triangular_basis(int n);

// Matrix of ad(Z) acting on the span, in the given basis.
std::vector<std::vector<Rational>> ad_matrix(const LieBasis& b,
                                             const QMatrix& z);
Rational qdet(std::vector<std::vector<Rational>> m);

// Determinants of the differential of the inverted exponential Z -> exp(-Z),
// translated back to the algebra: (direct symbolic, ad-series formula). For a
// nilpotent algebra both equal (-1)^dim.
std::pair<Rational, Rational> jacobians(const LieBasis& b, const QMatrix& z);
// Same pair for exp itself; both are 1 for a nilpotent algebra.
std::pair<Rational, Rational> exp_jacobians(const LieBasis& b,
                                            const QMatrix& z);
// det(ad Z / (e^{ad Z} - 1)) in the basis; 1 for a nilpotent algebra.
Rational density_det(const LieBasis& b, const QMatrix& z);

// One-forms on the algebra in the polynomial model: component k is the
// coefficient of the dual basis vector Y_k.
using PolyForm = std::vector<Poly>;

// Left-invariant derivative fields in exponential coordinates: entry [i][k]
// is the coefficient polynomial of d/dz_k in the derivative along x[i]
// (the t-linear coefficient of the coordinates of log(exp(Z) exp(t x_i))).
std::vector<std::vector<Poly>> invariant_fields(const LieBasis& b);
// The structure-constant multiplication operator on one-forms:
// (f ⊗ Y_k) -> Σ_{i,j} C_ij^k (z_i f) ⊗ Y_j. Nilpotent for nilpotent algebras.
PolyForm omega_form(const LieBasis& b, const PolyForm& g);
// Checks d f = [(1 - e^{-ω})/ω](Φ f) for every monomial f of total degree
// <= max_degree, where Φ f = Σ_i (left-invariant derivative of f) ⊗ Y_i.
bool left_invariant_comparison(const LieBasis& b, int max_degree);

}  // namespace exalg
