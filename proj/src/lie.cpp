#include "lie.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "series.hpp"

namespace exalg {

QMatrix QMatrix::identity(int n) {
  QMatrix m = zero(n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::unit(int n, int i, int j) {
  QMatrix m = zero(n);
  m.at(i, j) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& q : e)
    if (q != 0) return false;
  return true;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  QMatrix r = *this;
  for (std::size_t t = 0; t < e.size(); ++t) r.e[t] += o.e[t];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  QMatrix r = *this;
  for (std::size_t t = 0; t < e.size(); ++t) r.e[t] -= o.e[t];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  QMatrix r = zero(n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 1; j <= n; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator*(const Rational& q) const {
  QMatrix r = *this;
  for (auto& v : r.e) v *= q;
  return r;
}

bool QMatrix::is_nilpotent() const {
  QMatrix p = *this;
  for (int k = 1; k < n; ++k) {
    if (p.is_zero()) return true;
    p = p * *this;
  }
  return p.is_zero();
}

QMatrix mat_exp(const QMatrix& z) {
  if (!z.is_nilpotent())
    throw std::domain_error("exp needs a nilpotent matrix");
  QMatrix acc = QMatrix::identity(z.n), power = QMatrix::identity(z.n);
  Rational fact(1);
  for (int k = 1; k <= z.n; ++k) {
    power = power * z;
    if (power.is_zero()) break;
    fact *= k;
    acc = acc + power * (1 / fact);
  }
  return acc;
}

QMatrix mat_log_unipotent(const QMatrix& g) {
  QMatrix nil = g - QMatrix::identity(g.n);
  if (!nil.is_nilpotent())
    throw std::domain_error("log needs a unipotent matrix");
  QMatrix acc = QMatrix::zero(g.n), power = QMatrix::identity(g.n);
  for (int k = 1; k <= g.n; ++k) {
    power = power * nil;
    if (power.is_zero()) break;
    acc = acc + power * rat(k % 2 ? 1 : -1, k);
  }
  return acc;
}

namespace {

// a + t b with t^2 = 0; enough to differentiate exp once, exactly.
struct Dual {
  QMatrix a, b;
  Dual operator*(const Dual& o) const { return {a * o.a, a * o.b + b * o.a}; }
  Dual operator*(const Rational& q) const { return {a * q, b * q}; }
  Dual operator+(const Dual& o) const { return {a + o.a, b + o.b}; }
};

QMatrix dexp_dual(const QMatrix& z, const QMatrix& w) {
  const int n = z.n;
  Dual acc{QMatrix::identity(n), QMatrix::zero(n)};
  Dual power = acc;
  const Dual zw{z, w};
  Rational fact(1);
  // the t-linear part of (Z + tW)^k dies only once k > 2n
  for (int k = 1; k <= 2 * n + 1; ++k) {
    power = power * zw;
    if (power.a.is_zero() && power.b.is_zero()) break;
    fact *= k;
    acc = acc + power * (1 / fact);
  }
  return acc.b;
}

QMatrix ad_apply(const QMatrix& z, const QMatrix& w) { return z * w - w * z; }

// [(series in ad Z)](W) for a finite list of coefficients; terminates because
// ad of a nilpotent matrix inside an associative algebra is nilpotent.
QMatrix ad_series_apply(const Series& coeffs, const QMatrix& z,
                        const QMatrix& w) {
  QMatrix acc = w * coeffs[0];
  QMatrix cur = w;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    cur = ad_apply(z, cur);
    if (cur.is_zero()) break;
    if (coeffs[k] != 0) acc = acc + cur * coeffs[k];
  }
  return acc;
}

std::size_t ad_series_len(const QMatrix& z) {
  // ad(Z)^{2n-1} = 0 when Z^n = 0 (left/right multiplications commute)
  return static_cast<std::size_t>(2 * z.n + 1);
}

}  // namespace

QMatrix dexp_direct(const QMatrix& z, const QMatrix& w) {
  if (!z.is_nilpotent() || !w.is_nilpotent() || !(z + w).is_nilpotent())
    throw std::domain_error("differential of exp needs nilpotent inputs");
  return dexp_dual(z, w);
}

QMatrix dexp_formula(const QMatrix& z, const QMatrix& w) {
  if (!z.is_nilpotent() || !w.is_nilpotent() || !(z + w).is_nilpotent())
    throw std::domain_error("differential of exp needs nilpotent inputs");
  return mat_exp(z) * ad_series_apply(inv_todd_series(ad_series_len(z)), z, w);
}

QMatrix dbarexp_direct(const QMatrix& z, const QMatrix& w) {
  return dexp_direct(z * Rational(-1), w * Rational(-1));
}

QMatrix dbarexp_formula(const QMatrix& z, const QMatrix& w) {
  if (!z.is_nilpotent() || !w.is_nilpotent() || !(z + w).is_nilpotent())
    throw std::domain_error("differential of exp needs nilpotent inputs");
  // -(e^{x} - 1)/x = -(1 + x/2 + x^2/6 + ...)
  const std::size_t len = ad_series_len(z);
  Series s = exp_series(len + 1);
  Series shifted(len);
  for (std::size_t k = 0; k < len; ++k) shifted[k] = -s[k + 1];
  return mat_exp(z * Rational(-1)) * ad_series_apply(shifted, z, w);
}

namespace {

// Row-reduce the span matrix once; returns pivot columns of vec(x_i) stacked
// as rows, so coordinates of any span member can be read off exactly.
struct SpanSolver {
  // reduced[r] = row echelon rows over the vec'd matrices; each row carries
  // its expression in terms of the original basis
  std::vector<std::vector<Rational>> rows;    // echelon rows (length n*n)
  std::vector<std::vector<Rational>> combo;   // same, in basis coordinates
  std::vector<std::size_t> pivot;             // pivot position per row

  explicit SpanSolver(const std::vector<QMatrix>& mats) {
    const std::size_t len = mats.empty() ? 0 : mats[0].e.size();
    for (std::size_t i = 0; i < mats.size(); ++i) {
      std::vector<Rational> row = mats[i].e;
      std::vector<Rational> cb(mats.size());
      cb[i] = 1;
      reduce(row, cb);
      auto p = first_nonzero(row);
      if (p == len)
        throw std::invalid_argument("basis matrices are linearly dependent");
      Rational inv = 1 / row[p];
      for (auto& q : row) q *= inv;
      for (auto& q : cb) q *= inv;
      rows.push_back(std::move(row));
      combo.push_back(std::move(cb));
      pivot.push_back(p);
    }
  }

  static std::size_t first_nonzero(const std::vector<Rational>& row) {
    for (std::size_t t = 0; t < row.size(); ++t)
      if (row[t] != 0) return t;
    return row.size();
  }

  void reduce(std::vector<Rational>& row, std::vector<Rational>& cb) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& q = row[pivot[r]];
      if (q == 0) continue;
      Rational f = q;
      for (std::size_t t = 0; t < row.size(); ++t) row[t] -= f * rows[r][t];
      for (std::size_t t = 0; t < cb.size(); ++t) cb[t] -= f * combo[r][t];
    }
  }

  // coordinates of m in the original basis; throws when m is outside span
  std::vector<Rational> coords(const QMatrix& m) const {
    std::vector<Rational> row = m.e, cb(combo.empty() ? 0 : combo[0].size());
    reduce(row, cb);
    if (first_nonzero(row) != row.size())
      throw std::invalid_argument("matrix is outside the basis span");
    for (auto& q : cb) q = -q;
    return cb;
  }
};

}  // namespace

LieBasis make_basis(const std::vector<QMatrix>& mats) {
  if (mats.empty()) throw std::invalid_argument("empty basis");
  const int n = mats[0].n;
  for (const auto& m : mats) {
    if (m.n != n) throw std::invalid_argument("basis matrices differ in size");
    if (!m.is_nilpotent())
      throw std::invalid_argument("basis matrix is not nilpotent");
  }
  SpanSolver solver(mats);
  LieBasis b;
  b.x = mats;
  const int d = static_cast<int>(mats.size());
  b.structure.assign(d, std::vector<std::vector<Rational>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      b.structure[i][j] = solver.coords(ad_apply(mats[i], mats[j]));
  return b;
}

std::vector<Rational> span_coords(const LieBasis& b, const QMatrix& m) {
  return SpanSolver(b.x).coords(m);
}

LieBasis basis_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("basis file is not valid JSON: ") +
                                e.what());
  }
  const nlohmann::json* arr = nullptr;
  if (j.is_array()) {
    arr = &j;
  } else if (j.is_object() && j.contains("matrices") &&
             j["matrices"].is_array()) {
    arr = &j["matrices"];
  } else {
    throw std::invalid_argument(
        "basis file needs an array of matrices (optionally under "
        "\"matrices\")");
  }
  auto parse_entry = [](const nlohmann::json& v) -> Rational {
    if (v.is_number_integer()) return rat(v.get<long>());
    if (v.is_string()) {
      Rational q;
      if (q.set_str(v.get<std::string>(), 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("matrix entry is not a rational \"p/q\"");
      q.canonicalize();
      return q;
    }
    throw std::invalid_argument("matrix entries must be integers or strings");
  };
  std::vector<QMatrix> mats;
  for (const auto& jm : *arr) {
    if (!jm.is_object() || !jm.contains("entries") ||
        !jm["entries"].is_array())
      throw std::invalid_argument("each matrix needs an \"entries\" array");
    const auto& rows = jm["entries"];
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw std::invalid_argument("matrix has no rows");
    QMatrix m = QMatrix::zero(n);
    for (int i = 0; i < n; ++i) {
      if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
        throw std::invalid_argument("matrix rows must be square");
      for (int k = 0; k < n; ++k) m.at(i + 1, k + 1) = parse_entry(rows[i][k]);
    }
    mats.push_back(std::move(m));
  }
  return make_basis(mats);
}

std::string closure_table_text(const LieBasis& b) {
  std::ostringstream out;
  const int d = b.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      out << "[X" << i + 1 << ", X" << j + 1 << "] = ";
      bool first = true;
      for (int k = 0; k < d; ++k) {
        const Rational& q = b.structure[i][j][k];
        if (q == 0) continue;
        if (!first) out << (sgn(q) < 0 ? " - " : " + ");
        else if (sgn(q) < 0) out << "-";
        first = false;
        Rational mag = abs(q);
        if (mag != 1) out << mag.get_str() << "*";
        out << "X" << k + 1;
      }
      if (first) out << "0";
      out << "\n";
    }
  return out.str();
}

LieBasis upper_triangular_basis(int n) {
  std::vector<QMatrix> mats;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) mats.push_back(QMatrix::unit(n, i, j));
  return make_basis(mats);
}

std::vector<std::vector<Rational>> ad_matrix(const LieBasis& b,
                                             const QMatrix& z) {
  const int d = b.dim();
  std::vector<Rational> zc = span_coords(b, z);
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        m[k][j] += zc[i] * b.structure[i][j][k];  // column j: ad(Z) x_j
  return m;
}

Rational qdet(std::vector<std::vector<Rational>> m) {
  const std::size_t d = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv = 1 / m[col][col];
    for (std::size_t r = col + 1; r < d; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] * inv;
      for (std::size_t t = col; t < d; ++t) m[r][t] -= f * m[col][t];
    }
  }
  return det;
}

namespace {

// det of (series applied to ad Z) as an operator on the span.
Rational series_det(const LieBasis& b, const QMatrix& z, const Series& s) {
  const int d = b.dim();
  std::vector<std::vector<Rational>> acc(d, std::vector<Rational>(d)),
      power(d, std::vector<Rational>(d)), ad = ad_matrix(b, z);
  for (int i = 0; i < d; ++i) {
    acc[i][i] = s[0];
    power[i][i] = 1;
  }
  for (std::size_t k = 1; k < s.size(); ++k) {
    std::vector<std::vector<Rational>> next(d, std::vector<Rational>(d));
    bool any = false;
    for (int i = 0; i < d; ++i)
      for (int t = 0; t < d; ++t) {
        if (power[i][t] == 0) continue;
        for (int j = 0; j < d; ++j) {
          next[i][j] += power[i][t] * ad[t][j];
        }
      }
    power = std::move(next);
    for (int i = 0; i < d && !any; ++i)
      for (int j = 0; j < d && !any; ++j) any = power[i][j] != 0;
    if (!any) break;
    if (s[k] != 0)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) acc[i][j] += power[i][j] * s[k];
  }
  return qdet(std::move(acc));
}

Rational direct_det(const LieBasis& b, const QMatrix& z, bool inverted) {
  const int d = b.dim();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  QMatrix translate = mat_exp(inverted ? z : z * Rational(-1));
  for (int i = 0; i < d; ++i) {
    QMatrix der = inverted ? dbarexp_direct(z, b.x[i]) : dexp_direct(z, b.x[i]);
    std::vector<Rational> col = span_coords(b, translate * der);
    for (int k = 0; k < d; ++k) m[k][i] = col[k];
  }
  return qdet(std::move(m));
}

}  // namespace

std::pair<Rational, Rational> jacobians(const LieBasis& b, const QMatrix& z) {
  const std::size_t len = static_cast<std::size_t>(2 * b.dim() + 3);
  Series s = exp_series(len + 1);  // -(e^x - 1)/x
  Series shifted(len);
  for (std::size_t k = 0; k < len; ++k) shifted[k] = -s[k + 1];
  return {direct_det(b, z, true), series_det(b, z, shifted)};
}

std::pair<Rational, Rational> exp_jacobians(const LieBasis& b,
                                            const QMatrix& z) {
  const std::size_t len = static_cast<std::size_t>(2 * b.dim() + 3);
  return {direct_det(b, z, false), series_det(b, z, inv_todd_series(len))};
}

Rational density_det(const LieBasis& b, const QMatrix& z) {
  const std::size_t len = static_cast<std::size_t>(2 * b.dim() + 3);
  return series_det(b, z, duflo_series(len));
}

namespace {

// Matrices with polynomial entries, just enough for symbolic exp/log.
struct PolyMat {
  int n = 0, nvars = 0;
  std::vector<Poly> e;

  static PolyMat zero(int n, int nvars) {
    return PolyMat{n, nvars,
                   std::vector<Poly>(static_cast<std::size_t>(n) * n,
                                     Poly::zero(nvars))};
  }
  static PolyMat identity(int n, int nvars) {
    PolyMat m = zero(n, nvars);
    for (int i = 0; i < n; ++i) m.e[static_cast<std::size_t>(i) * n + i] =
        Poly::one(nvars);
    return m;
  }
  Poly& at(int i, int j) { return e[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }
  const Poly& at(int i, int j) const {
    return e[static_cast<std::size_t>(i - 1) * n + (j - 1)];
  }
  bool is_zero() const {
    for (const auto& p : e)
      if (!p.is_zero()) return false;
    return true;
  }
  PolyMat operator+(const PolyMat& o) const {
    PolyMat r = *this;
    for (std::size_t t = 0; t < e.size(); ++t) r.e[t] = r.e[t] + o.e[t];
    return r;
  }
  PolyMat operator*(const PolyMat& o) const {
    PolyMat r = zero(n, nvars);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        const Poly& a = at(i, k);
        if (a.is_zero()) continue;
        for (int j = 1; j <= n; ++j)
          r.at(i, j) = r.at(i, j) + a * o.at(k, j);
      }
    return r;
  }
  PolyMat operator*(const Rational& q) const {
    PolyMat r = *this;
    for (auto& p : r.e) p = p * q;
    return r;
  }
};

}  // namespace

std::vector<std::vector<Poly>> invariant_fields(const LieBasis& b) {
  const int d = b.dim(), n = b.mat_size();
  // symbolic Z = Σ z_k x_k; extra variable d+1 is the direction parameter t
  const int nv = d + 1;
  PolyMat zsym = PolyMat::zero(n, nv);
  for (int k = 0; k < d; ++k) {
    Poly zk = Poly::var(nv, k + 1);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const Rational& q = b.x[k].at(i, j);
        if (q != 0) zsym.at(i, j) = zsym.at(i, j) + zk * q;
      }
  }
  // exp(Z): nilpotency of index <= n holds for every element of a nilpotent
  // matrix algebra, symbolically included
  PolyMat expz = PolyMat::identity(n, nv), power = expz;
  Rational fact(1);
  for (int k = 1; k <= n; ++k) {
    power = power * zsym;
    if (power.is_zero()) break;
    fact *= k;
    expz = expz + power * (1 / fact);
  }

  SpanSolver solver(b.x);
  std::vector<std::vector<Poly>> fields(
      d, std::vector<Poly>(d, Poly::zero(d)));
  Poly tvar = Poly::var(nv, d + 1);
  for (int i = 0; i < d; ++i) {
    // g = exp(Z)(I + t x_i); log(g), keep t-linear part
    PolyMat g = expz;
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) {
        // add t * (expz * x_i)[r][c]
        Poly acc = Poly::zero(nv);
        for (int k = 1; k <= n; ++k) {
          const Rational& q = b.x[i].at(k, c);
          if (q != 0) acc = acc + expz.at(r, k) * q;
        }
        g.at(r, c) = g.at(r, c) + tvar * acc;
      }
    PolyMat nil = g;
    for (int r = 1; r <= n; ++r) nil.at(r, r) = nil.at(r, r) - Poly::one(nv);
    PolyMat logg = PolyMat::zero(n, nv), pw = PolyMat::identity(n, nv);
    for (int k = 1; k <= 2 * n; ++k) {
      pw = pw * nil;
      // drop powers of t beyond the first as we go to keep sizes small
      for (auto& p : pw.e) {
        Poly trimmed = Poly::zero(nv);
        for (const auto& [mo, q] : p.c)
          if (mo[d] <= 1) trimmed.add_term(mo, q);
        p = trimmed;
      }
      if (pw.is_zero()) break;
      logg = logg + pw * rat(k % 2 ? 1 : -1, k);
    }
    // t-linear coefficient, entrywise, as a matrix of polynomials in z only
    std::vector<Poly> tcoef(static_cast<std::size_t>(n) * n, Poly::zero(d));
    for (std::size_t t = 0; t < logg.e.size(); ++t)
      for (const auto& [mo, q] : logg.e[t].c)
        if (mo[d] == 1) {
          Mono cut(mo.begin(), mo.end() - 1);
          tcoef[t].add_term(cut, q);
        }
    // express in basis coordinates: reduce against the echelon rows
    // (the entries are Q-linear combinations with polynomial coefficients)
    // Solve columnwise: coords_k = Σ over echelon combination applied to
    // the polynomial vector.
    // SpanSolver works over Q; reuse its combo rows against polynomial data.
    std::vector<Poly> rowpoly = tcoef;  // working copy, length n*n
    std::vector<Poly> cb(d, Poly::zero(d));
    for (std::size_t r = 0; r < solver.rows.size(); ++r) {
      Poly f = rowpoly[solver.pivot[r]];
      if (f.is_zero()) continue;
      for (std::size_t t = 0; t < rowpoly.size(); ++t)
        if (solver.rows[r][t] != 0)
          rowpoly[t] = rowpoly[t] - f * solver.rows[r][t];
      for (std::size_t t = 0; t < cb.size(); ++t)
        if (solver.combo[r][t] != 0) cb[t] = cb[t] - f * solver.combo[r][t];
    }
    for (const auto& p : rowpoly)
      if (!p.is_zero())
        throw std::invalid_argument(
            "left-invariant derivative leaves the basis span");
    for (int k = 0; k < d; ++k) fields[i][k] = cb[k] * Rational(-1);
  }
  return fields;
}

PolyForm omega_form(const LieBasis& b, const PolyForm& g) {
  const int d = b.dim();
  PolyForm out(d, Poly::zero(d));
  for (int k = 0; k < d; ++k) {
    if (g[k].is_zero()) continue;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Rational& q = b.structure[i][j][k];
        if (q != 0) out[j] = out[j] + g[k] * Poly::var(d, i + 1) * q;
      }
  }
  return out;
}

bool left_invariant_comparison(const LieBasis& b, int max_degree) {
  const int d = b.dim();
  std::vector<std::vector<Poly>> fields = invariant_fields(b);
  // series (1 - e^{-w})/w applied by iterating omega until it dies
  const Series s = inv_todd_series(static_cast<std::size_t>(2 * d + 4));

  std::vector<Mono> monos;
  Mono cur(d, 0);
  // enumerate all monomials of total degree <= max_degree
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == d) {
      monos.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, max_degree);

  for (const auto& mo : monos) {
    Poly f = Poly::zero(d);
    f.add_term(mo, Rational(1));
    // Phi f = Σ_i (Σ_k fields[i][k] d f/d z_k) ⊗ Y_i
    PolyForm phi(d, Poly::zero(d));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        if (fields[i][k].is_zero()) continue;
        Poly df = f.derivative(k + 1);
        if (!df.is_zero()) phi[i] = phi[i] + fields[i][k] * df;
      }
    // [(1 - e^{-omega})/omega](Phi f)
    PolyForm acc(d, Poly::zero(d)), curform = phi;
    for (int i = 0; i < d; ++i) acc[i] = curform[i] * s[0];
    for (std::size_t k = 1; k < s.size(); ++k) {
      curform = omega_form(b, curform);
      bool any = false;
      for (const auto& p : curform)
        if (!p.is_zero()) any = true;
      if (!any) break;
      if (s[k] != 0)
        for (int i = 0; i < d; ++i) acc[i] = acc[i] + curform[i] * s[k];
    }
    for (int i = 0; i < d; ++i)
      if (!(acc[i] == f.derivative(i + 1))) return false;
  }
  return true;
}

}  // namespace exalg
