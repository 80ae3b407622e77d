#include "atiyah.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace exalg {

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

bool AtiyahTensor::is_zero() const {
  for (const auto& q : c)
    if (q != 0) return false;
  return true;
}

bool AtiyahTensor::is_symmetric() const {
  for (int k = 1; k <= m; ++k)
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        if (at(k, i, j) != at(k, j, i)) return false;
  return true;
}

AtiyahTensor AtiyahTensor::random(Rng& rng, int m, bool symmetric) {
  AtiyahTensor a = zero(m);
  a.symmetric_declared = symmetric;
  for (int k = 1; k <= m; ++k)
    for (int i = 1; i <= m; ++i)
      for (int j = symmetric ? i : 1; j <= m; ++j) {
        Rational q = rng.rational(2, 2);
        a.at(k, i, j) = q;
        if (symmetric) a.at(k, j, i) = q;
      }
  return a;
}

AtiyahTensor atiyah_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("tensor file is not valid JSON: ") +
                                e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer())
    throw std::invalid_argument("tensor file needs an integer field \"m\"");
  int m = j["m"].get<int>();
  if (m < 1 || m > kMaxDim)
    throw std::invalid_argument("tensor dimension out of range");
  AtiyahTensor a = AtiyahTensor::zero(m);
  if (j.contains("c")) {
    if (!j["c"].is_array())
      throw std::invalid_argument("field \"c\" must be an array of entries");
    for (const auto& row : j["c"]) {
      if (!row.is_array() || row.size() != 5)
        throw std::invalid_argument(
            "each entry must be [k, i, j, num, den]");
      for (const auto& v : row)
        if (!v.is_number_integer())
          throw std::invalid_argument("entry fields must be integers");
      int k = row[0].get<int>(), i = row[1].get<int>(), jj = row[2].get<int>();
      long long num = row[3].get<long long>(), den = row[4].get<long long>();
      if (k < 1 || k > m || i < 1 || i > m || jj < 1 || jj > m)
        throw std::invalid_argument("entry label out of range 1..m");
      if (den == 0) throw std::invalid_argument("entry denominator is zero");
      a.at(k, i, jj) = rat(num, den);
    }
  }
  if (j.contains("symmetric")) {
    if (!j["symmetric"].is_boolean())
      throw std::invalid_argument("field \"symmetric\" must be a boolean");
    a.symmetric_declared = j["symmetric"].get<bool>();
    if (a.symmetric_declared && !a.is_symmetric())
      throw std::invalid_argument(
          "tensor declared symmetric but c[k][i][j] != c[k][j][i]");
  }
  return a;
}

std::string atiyah_to_json(const AtiyahTensor& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (int k = 1; k <= a.m; ++k)
    for (int i = 1; i <= a.m; ++i)
      for (int j = 1; j <= a.m; ++j) {
        const Rational& q = a.at(k, i, j);
        if (q == 0) continue;
        if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
          throw std::invalid_argument("tensor entry too large to serialize");
        entries.push_back({k, i, j, q.get_num().get_si(), q.get_den().get_si()});
      }
  nlohmann::json j{{"m", a.m}, {"symmetric", a.symmetric_declared},
                   {"c", entries}};
  return j.dump();
}

void SVElement::add_term(Mask h, int leg, const Rational& q) {
  if (q == 0) return;
  auto key = std::make_pair(h, leg);
  auto it = c.find(key);
  if (it == c.end()) {
    c.emplace(key, q);
  } else {
    it->second += q;
    if (it->second == 0) c.erase(it);
  }
}

SVElement SVElement::operator+(const SVElement& o) const {
  SVElement r = *this;
  for (const auto& [key, q] : o.c) r.add_term(key.first, key.second, q);
  return r;
}

SVElement SVElement::operator-(const SVElement& o) const {
  SVElement r = *this;
  for (const auto& [key, q] : o.c) r.add_term(key.first, key.second, -q);
  return r;
}

SVElement SVElement::operator*(const Rational& q) const {
  SVElement r{m, {}};
  if (q == 0) return r;
  for (const auto& [key, p] : c) r.c.emplace(key, p * q);
  return r;
}

SVElement SVElement::s_component(int k) const {
  SVElement r{m, {}};
  for (const auto& [key, q] : c)
    if (popcount(key.first) == k) r.c.emplace(key, q);
  return r;
}

std::string to_string(const SVElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, q] : e.c) {
    os << (first ? "" : " + ") << "(" << to_string(q) << ")*x{";
    bool f2 = true;
    for (int l : to_list(key.first)) {
      os << (f2 ? "" : ",") << l;
      f2 = false;
    }
    os << "}|x" << key.second;
    first = false;
  }
  return os.str();
}

void SVVElement::add_term(Mask h, int leg1, int leg2, const Rational& q) {
  if (q == 0) return;
  auto key = std::make_tuple(h, leg1, leg2);
  auto it = c.find(key);
  if (it == c.end()) {
    c.emplace(key, q);
  } else {
    it->second += q;
    if (it->second == 0) c.erase(it);
  }
}

SVVElement SVVElement::operator+(const SVVElement& o) const {
  SVVElement r = *this;
  for (const auto& [key, q] : o.c)
    r.add_term(std::get<0>(key), std::get<1>(key), std::get<2>(key), q);
  return r;
}

SVVElement SVVElement::operator-(const SVVElement& o) const {
  SVVElement r = *this;
  for (const auto& [key, q] : o.c)
    r.add_term(std::get<0>(key), std::get<1>(key), std::get<2>(key), -q);
  return r;
}

SVVElement delta_map(const SVElement& e) {
  SVVElement r{e.m, {}};
  for (const auto& [key, q] : e.c) {
    const auto labels = to_list(key.first);
    const int k = static_cast<int>(labels.size());
    for (int pos = 1; pos <= k; ++pos) {
      int a = labels[pos - 1];
      r.add_term(key.first & ~bit(a), a, key.second,
                 q * parity_sign(k - pos));
    }
  }
  return r;
}

SVElement omega_bar(const AtiyahTensor& a, const SVElement& e) {
  SVElement r{e.m, {}};
  for (const auto& [key, q] : e.c) {
    const Mask h = key.first;
    const int k = key.second;
    for (int i = 1; i <= a.m; ++i) {
      if (h & bit(i)) continue;
      Mask out;
      int sign;
      subset_wedge(h, bit(i), &out, &sign);
      for (int j = 1; j <= a.m; ++j) {
        const Rational& cc = a.at(k, i, j);
        if (cc == 0) continue;
        r.add_term(out, j, q * cc * sign);
      }
    }
  }
  return r;
}

SVElement omega_bar_lowering(const AtiyahTensor& a, const SVElement& e) {
  SVElement r{e.m, {}};
  for (const auto& [key, q] : e.c) {
    const auto labels = to_list(key.first);
    const int k = static_cast<int>(labels.size());
    const int b = key.second;
    for (int pos = 1; pos <= k; ++pos) {
      int hp = labels[pos - 1];
      Rational base = q * parity_sign(k - pos);
      for (int l = 1; l <= a.m; ++l) {
        const Rational& cc = a.at(l, hp, b);
        if (cc == 0) continue;
        r.add_term(key.first & ~bit(hp), l, base * cc);
      }
    }
  }
  return r;
}

SVElement at_power_image(const AtiyahTensor& a, int i, int k) {
  SVElement cur = SVElement::term(a.m, 0, k);
  for (int t = 0; t < i && !cur.is_zero(); ++t) cur = omega_bar(a, cur);
  return cur;
}

SVElement series_at_image(const AtiyahTensor& a, const Series& coeffs, int k) {
  SVElement acc = SVElement::zero(a.m);
  SVElement cur = SVElement::term(a.m, 0, k);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) {
      cur = omega_bar(a, cur);
      if (cur.is_zero()) break;
    }
    acc = acc + cur * coeffs[i];
  }
  return acc;
}

SVElement cbar_image(int m, Mask a) {
  SVElement r{m, {}};
  const auto labels = to_list(a);
  const int k = static_cast<int>(labels.size());
  for (int pos = 1; pos <= k; ++pos) {
    int ap = labels[pos - 1];
    r.add_term(a & ~bit(ap), ap, Rational(parity_sign(k - pos)));
  }
  return r;
}

PhiMap PhiMap::zero(int m) {
  PhiMap p;
  p.m = m;
  p.at.assign(std::size_t{1} << m, SVElement::zero(m));
  return p;
}

PhiMap PhiMap::operator*(const Rational& q) const {
  PhiMap p = *this;
  for (auto& e : p.at) e = e * q;
  return p;
}

SVElement PhiMap::apply(const ExtElement& h) const {
  SVElement acc = SVElement::zero(m);
  for (const auto& [mask, q] : h.c) acc = acc + at[mask] * q;
  return acc;
}

EndOperator PhiMap::leg_operator(int leg) const {
  EndOperator o = EndOperator::zero(m);
  for (std::size_t a = 0; a < at.size(); ++a)
    for (const auto& [key, q] : at[a].c)
      if (key.second == leg) o.M[key.first][a] += q;
  return o;
}

PhiMap phi_map(const AtiyahTensor& a, const Series& coeffs) {
  PhiMap p = PhiMap::zero(a.m);
  for (std::size_t mask = 0; mask < p.at.size(); ++mask) {
    SVElement base = cbar_image(a.m, static_cast<Mask>(mask));
    SVElement acc = SVElement::zero(a.m);
    SVElement cur = base;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i > 0) {
        cur = omega_bar(a, cur);
        if (cur.is_zero()) break;
      }
      acc = acc + cur * coeffs[i];
    }
    p.at[mask] = acc;
  }
  return p;
}

PhiMap phi_R(const AtiyahTensor& a) {
  return phi_map(a, todd_series(static_cast<std::size_t>(a.m) + 2));
}

PhiMap phi_L(const AtiyahTensor& a) {
  return phi_map(a, duflo_series(static_cast<std::size_t>(a.m) + 2));
}

EndOperator element_leg_operator(const AtiyahTensor& a, const Series& coeffs,
                                 int leg) {
  BiSymbol b = BiSymbol::zero(a.m);
  for (int j = 1; j <= a.m; ++j) {
    SVElement img = series_at_image(a, coeffs, j);
    for (const auto& [key, q] : img.c)
      if (key.second == leg) b.add_term(bit(j), key.first, q);
  }
  return Gr(b);
}

std::vector<std::vector<ExtElement>> series_matrix(const AtiyahTensor& a,
                                                   const Series& coeffs) {
  Series tail = coeffs;
  if (!tail.empty()) tail[0] = 0;
  std::vector<std::vector<ExtElement>> n(
      a.m, std::vector<ExtElement>(a.m, ExtElement::zero(Side::V, a.m)));
  for (int k = 1; k <= a.m; ++k) {
    SVElement img = series_at_image(a, tail, k);
    for (const auto& [key, q] : img.c)
      n[k - 1][key.second - 1].add_term(key.first, q);
  }
  return n;
}

namespace {

std::vector<std::vector<ExtElement>> ext_mat_mul(
    const std::vector<std::vector<ExtElement>>& a,
    const std::vector<std::vector<ExtElement>>& b) {
  const std::size_t n = a.size();
  int m = n == 0 ? 0 : a[0][0].m;
  std::vector<std::vector<ExtElement>> r(
      n, std::vector<ExtElement>(n, ExtElement::zero(Side::V, m)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        r[i][j] = r[i][j] + wedge(a[i][k], b[k][j]);
  return r;
}

bool ext_mat_zero(const std::vector<std::vector<ExtElement>>& a) {
  for (const auto& row : a)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

// exp of an element with no constant term (finite in the nilpotent ideal).
ExtElement ext_exp(const ExtElement& u) {
  ExtElement acc = ExtElement::unit(Side::V, u.m);
  ExtElement term = ExtElement::unit(Side::V, u.m);
  for (int p = 1; p <= u.m; ++p) {
    term = wedge(term, u) * rat(1, p);
    if (term.is_zero()) break;
    acc = acc + term;
  }
  return acc;
}

}  // namespace

ExtElement det_composite(const std::vector<std::vector<ExtElement>>& n) {
  const int size = static_cast<int>(n.size());
  if (size == 0) return ExtElement::unit(Side::V, 0);
  const int m = n[0][0].m;
  // For each row order σ, feed the generators x_{σ(1)},..,x_{σ(m)} through
  // (1+N) one slot at a time, keeping (accumulated S word, accumulated leg
  // word). The slotwise application signs cancel against the signs for
  // moving the S parts out front, so only the two wedge chains remain.
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  using State = std::map<std::pair<Mask, Mask>, Rational>;
  ExtElement acc = ExtElement::zero(Side::V, m);
  do {
    State cur;
    cur[{Mask{0}, Mask{0}}] = Rational(1);
    for (int t = 0; t < size && !cur.empty(); ++t) {
      const int row = perm[t];
      State next;
      for (const auto& [key, q] : cur) {
        const Mask hmask = key.first, zmask = key.second;
        for (int l = 0; l < size; ++l) {
          if (zmask & bit(l + 1)) continue;
          Mask z2;
          int zsign;
          subset_wedge(zmask, bit(l + 1), &z2, &zsign);
          if (l == row) next[{hmask, z2}] += q * zsign;
          for (const auto& [w, cw] : n[row][l].c) {
            Mask h2;
            int hsign;
            if (!subset_wedge(hmask, w, &h2, &hsign)) continue;
            next[{h2, z2}] += q * cw * Rational(hsign * zsign);
          }
        }
      }
      for (auto it = next.begin(); it != next.end();)
        it = (it->second == 0) ? next.erase(it) : std::next(it);
      cur = std::move(next);
    }
    const Rational ps(perm_sign(perm));
    for (const auto& [key, q] : cur)
      if (key.second == full_mask(size)) acc.add_term(key.first, q * ps);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc * (1 / Rational(factorial(size)));
}

ExtElement det_one_plus(const std::vector<std::vector<ExtElement>>& n) {
  const int size = static_cast<int>(n.size());
  int m = size == 0 ? 0 : n[0][0].m;
  ExtElement tr = ExtElement::zero(Side::V, m);
  std::vector<std::vector<ExtElement>> power = n;
  for (int p = 1; p <= m; ++p) {
    if (ext_mat_zero(power)) break;
    Rational coef = rat(p % 2 == 1 ? 1 : -1, p);
    for (int k = 0; k < size; ++k) tr = tr + power[k][k] * coef;
    if (p < m) power = ext_mat_mul(power, n);
  }
  return ext_exp(tr);
}

ExtElement det_leibniz(const std::vector<std::vector<ExtElement>>& n) {
  const int size = static_cast<int>(n.size());
  int m = size == 0 ? 0 : n[0][0].m;
  std::vector<std::vector<ExtElement>> full = n;
  for (int k = 0; k < size; ++k)
    full[k][k] = full[k][k] + ExtElement::unit(Side::V, m);
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  ExtElement acc = ExtElement::zero(Side::V, m);
  do {
    ExtElement prod = ExtElement::unit(Side::V, m);
    for (int r = 0; r < size && !prod.is_zero(); ++r)
      prod = wedge(prod, full[r][perm[r]]);
    acc = acc + prod * Rational(perm_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

ExtElement duflo_det(const AtiyahTensor& a) {
  return det_composite(
      series_matrix(a, duflo_series(static_cast<std::size_t>(a.m) + 2)));
}

ExtElement ext_inverse(const ExtElement& f) {
  Rational s = scalar_part(f);
  if (s == 0)
    throw std::invalid_argument("element has zero constant term, no inverse");
  ExtElement u = f * (1 / s) - ExtElement::unit(Side::V, f.m);
  ExtElement acc = ExtElement::unit(Side::V, f.m);
  ExtElement term = ExtElement::unit(Side::V, f.m);
  for (int p = 1; p <= f.m; ++p) {
    term = wedge(term, u) * Rational(-1);
    if (term.is_zero()) break;
    acc = acc + term;
  }
  return acc * (1 / s);
}

void TriSymbol::add_term(Mask y, Mask h, Mask z, const Rational& q) {
  if (q == 0) return;
  auto key = std::make_tuple(y, h, z);
  auto it = c.find(key);
  if (it == c.end()) {
    c.emplace(key, q);
  } else {
    it->second += q;
    if (it->second == 0) c.erase(it);
  }
}

TriSymbol TriSymbol::operator+(const TriSymbol& o) const {
  TriSymbol r = *this;
  for (const auto& [key, q] : o.c)
    r.add_term(std::get<0>(key), std::get<1>(key), std::get<2>(key), q);
  return r;
}

TriSymbol TriSymbol::operator-(const TriSymbol& o) const {
  TriSymbol r = *this;
  for (const auto& [key, q] : o.c)
    r.add_term(std::get<0>(key), std::get<1>(key), std::get<2>(key), -q);
  return r;
}

TriSymbol TriSymbol::operator*(const Rational& q) const {
  TriSymbol r{m, {}};
  if (q == 0) return r;
  for (const auto& [key, p] : c) r.c.emplace(key, p * q);
  return r;
}

std::string to_string(const TriSymbol& t) {
  if (t.is_zero()) return "0";
  auto word = [](Mask s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int l : to_list(s)) {
      os << (first ? "" : ",") << l;
      first = false;
    }
    os << "}";
    return os.str();
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, q] : t.c) {
    os << (first ? "" : " + ") << "(" << to_string(q) << ")*y"
       << word(std::get<0>(key)) << "|x" << word(std::get<1>(key)) << "|x"
       << word(std::get<2>(key));
    first = false;
  }
  return os.str();
}

TriSymbol tri_product(const TriSymbol& a, const TriSymbol& b) {
  TriSymbol r{a.m, {}};
  for (const auto& [k1, q1] : a.c)
    for (const auto& [k2, q2] : b.c) {
      const Mask y1 = std::get<0>(k1), h1 = std::get<1>(k1), z1 = std::get<2>(k1);
      const Mask y2 = std::get<0>(k2), h2 = std::get<1>(k2), z2 = std::get<2>(k2);
      Mask y, h, z;
      int sy, sh, sz;
      if (!subset_wedge(y1, y2, &y, &sy)) continue;
      if (!subset_wedge(h1, h2, &h, &sh)) continue;
      if (!subset_wedge(z1, z2, &z, &sz)) continue;
      const long par =
          static_cast<long>(popcount(y2)) * (popcount(h1) + popcount(z1)) +
          static_cast<long>(popcount(h2)) * popcount(z1);
      r.add_term(y, h, z, q1 * q2 * (sy * sh * sz * parity_sign(par)));
    }
  return r;
}

TriSymbol tri_power(const TriSymbol& a, int n) {
  if (n == 0) return TriSymbol::unit(a.m);
  TriSymbol acc = a;
  for (int k = 2; k <= n; ++k) acc = tri_product(acc, a);
  return acc;
}

TriSymbol phi_tri(const AtiyahTensor& a, const Series& coeffs) {
  TriSymbol t{a.m, {}};
  for (int j = 1; j <= a.m; ++j) {
    SVElement img = series_at_image(a, coeffs, j);
    for (const auto& [key, q] : img.c)
      t.add_term(bit(j), key.first, bit(key.second),
                 q * parity_sign(popcount(key.first)));
  }
  return t;
}

TriSymbol one_m_tri(const ExtElement& f) {
  const int m = f.m;
  const Mask full = full_mask(m);
  const int rho = parity_sign(static_cast<long>(m) * (m - 1) / 2);
  TriSymbol t{m, {}};
  for (const auto& [s, q] : f.c)
    t.add_term(full, s, full,
               q * (rho * parity_sign(static_cast<long>(m) * popcount(s))));
  return t;
}

void FormOperator::add_term(Mask in, Mask out, Mask legs, const Rational& q) {
  if (q == 0) return;
  auto key = std::make_tuple(in, out, legs);
  auto it = c.find(key);
  if (it == c.end()) {
    c.emplace(key, q);
  } else {
    it->second += q;
    if (it->second == 0) c.erase(it);
  }
}

FormOperator FormOperator::operator+(const FormOperator& o) const {
  FormOperator r = *this;
  for (const auto& [key, q] : o.c)
    r.add_term(std::get<0>(key), std::get<1>(key), std::get<2>(key), q);
  return r;
}

FormOperator FormOperator::operator-(const FormOperator& o) const {
  FormOperator r = *this;
  for (const auto& [key, q] : o.c)
    r.add_term(std::get<0>(key), std::get<1>(key), std::get<2>(key), -q);
  return r;
}

FormOperator exp_phi(const PhiMap& phi) {
  const int m = phi.m;
  const std::size_t n = std::size_t{1} << m;
  FormOperator acc = FormOperator::zero(m);
  for (Mask a = 0; a < static_cast<Mask>(n); ++a)
    acc.add_term(a, a, 0, Rational(1));
  // Per input x_a: terms (current S word, leg word) of the i-fold iterate;
  // each application prepends its new leg to the left of the older ones.
  using Level = std::map<std::pair<Mask, Mask>, Rational>;
  std::vector<Level> cur(n);
  for (Mask a = 0; a < static_cast<Mask>(n); ++a)
    cur[a][{a, Mask{0}}] = Rational(1);
  Rational fact(1);
  for (int i = 1; i <= m; ++i) {
    fact *= i;
    std::vector<Level> next(n);
    bool any = false;
    for (std::size_t a = 0; a < n; ++a) {
      for (const auto& [key, q] : cur[a]) {
        for (const auto& [hk, q2] : phi.at[key.first].c) {
          Mask z2;
          int s;
          if (!subset_wedge(bit(hk.second), key.second, &z2, &s)) continue;
          next[a][{hk.first, z2}] += q * q2 * s;
        }
      }
      for (auto it = next[a].begin(); it != next[a].end();)
        it = (it->second == 0) ? next[a].erase(it) : std::next(it);
      for (const auto& [key, q] : next[a])
        acc.add_term(static_cast<Mask>(a), key.first, key.second, q / fact);
      if (!next[a].empty()) any = true;
    }
    if (!any) break;
    cur = std::move(next);
  }
  return acc;
}

FormOperator coproduct_form(int m) {
  FormOperator r = FormOperator::zero(m);
  for (Mask a = 0; a < (Mask{1} << m); ++a) {
    VVElement vv = coproduct_v(ExtElement::basis(Side::V, m, a));
    for (const auto& [key, q] : vv) r.add_term(a, key.first, key.second, q);
  }
  return r;
}

EndOperator contract_form(const FormOperator& e, const ExtElement& y) {
  EndOperator acc = EndOperator::zero(e.m);
  for (const auto& [key, q] : e.c) {
    Rational s =
        k_scalar(ExtElement::basis(Side::V, e.m, std::get<2>(key)), y);
    if (s != 0) acc.M[std::get<1>(key)][std::get<0>(key)] += q * s;
  }
  return acc;
}

namespace {

// (Phi_a ⊗ V) ∘ Phi_b on x_A, as a sum of (H, new leg, old leg) terms.
SVVElement compose_phis(const PhiMap& pa, const PhiMap& pb, Mask a) {
  SVVElement r{pa.m, {}};
  for (const auto& [k1, q1] : pb.at[a].c)
    for (const auto& [k2, q2] : pa.at[k1.first].c)
      r.add_term(k2.first, k2.second, k1.second, q1 * q2);
  return r;
}

// Project the two legs onto their wedge: x_w ⊗ x_u -> x_{w,u} with the merge
// sign; terms with w = u die.
std::map<std::pair<Mask, Mask>, Rational> wedge_legs(const SVVElement& e) {
  std::map<std::pair<Mask, Mask>, Rational> r;
  for (const auto& [key, q] : e.c) {
    int w = std::get<1>(key), u = std::get<2>(key);
    if (w == u) continue;
    Rational signed_q = w < u ? q : -q;
    auto k = std::make_pair(std::get<0>(key), bit(w) | bit(u));
    auto it = r.find(k);
    if (it == r.end()) {
      r.emplace(k, signed_q);
    } else {
      it->second += signed_q;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

// Leg-swapped copy with the sign for exchanging two generator legs.
SVVElement swap_legs(const SVVElement& e) {
  SVVElement r{e.m, {}};
  for (const auto& [key, q] : e.c)
    r.add_term(std::get<0>(key), std::get<2>(key), std::get<1>(key), -q);
  return r;
}

}  // namespace

bool commutation_predicate(const AtiyahTensor& a) {
  PhiMap pr = phi_R(a), pl = phi_L(a);
  for (Mask mask = 0; mask < (Mask{1} << a.m); ++mask) {
    if (!(compose_phis(pr, pl, mask) - swap_legs(compose_phis(pl, pr, mask)))
             .is_zero())
      return false;
  }
  return true;
}

bool wedge_commutation(const AtiyahTensor& a) {
  PhiMap pr = phi_R(a), pl = phi_L(a);
  for (Mask mask = 0; mask < (Mask{1} << a.m); ++mask) {
    if (wedge_legs(compose_phis(pr, pl, mask)) !=
        wedge_legs(compose_phis(pl, pr, mask)))
      return false;
  }
  return true;
}

TopPowerReport verify_top_power(const AtiyahTensor& a) {
  const int m = a.m;
  TopPowerReport rep;
  TriSymbol phi =
      phi_tri(a, duflo_series(static_cast<std::size_t>(m) + 2));
  rep.lhs = tri_power(phi, m) * (1 / Rational(factorial(m)));
  rep.rhs = one_m_tri(duflo_det(a));
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

ChainReport verify_adjoint_chain(const AtiyahTensor& a) {
  const int m = a.m;
  ChainReport rep;
  rep.commutes = commutation_predicate(a);
  rep.commutes_wedge = wedge_commutation(a);
  if (!rep.commutes) return rep;

  PhiMap pr = phi_R(a);
  ExtElement f = duflo_det(a);
  ExtElement finv = ext_inverse(f);

  bool ok = true;
  std::vector<EndOperator> adj;
  for (int l = 1; l <= m; ++l) {
    adj.push_back(adjoint(pr.leg_operator(l)));
    if (!adj.back().apply(f).is_zero()) ok = false;
  }
  rep.vanishing = ok ? CheckState::Passed : CheckState::Failed;

  ok = true;
  EndOperator wf = i_op(f), wfinv = i_op(finv);
  for (int l = 1; l <= m; ++l)
    if (!(adj[l - 1] == (wf * pr.leg_operator(l) * wfinv) * Rational(-1)))
      ok = false;
  rep.conjugation = ok ? CheckState::Passed : CheckState::Failed;

  FormOperator ex = exp_phi(pr);
  ExtElement td_inv = J_endo(finv);
  bool ok_right = true, ok_left = true;
  for (Mask t = 0; t < (Mask{1} << m); ++t) {
    ExtElement yt = ExtElement::basis(Side::Dual, m, t);
    EndOperator op = contract_form(ex, yt);
    if (!(Fr(op).pi0() == yt)) ok_right = false;
    if (!(Fl(op).pi0() == k_contract(td_inv, yt))) ok_left = false;
  }
  rep.right_unit = ok_right ? CheckState::Passed : CheckState::Failed;
  rep.left_td = ok_left ? CheckState::Passed : CheckState::Failed;
  return rep;
}

}  // namespace exalg
