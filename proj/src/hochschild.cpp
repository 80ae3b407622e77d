#include "hochschild.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace exalg {

namespace {

int parity_sign(long p) { return (p % 2 == 0) ? 1 : -1; }

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// derivative of a monomial in variable i (1-based): exponent factor and the
// reduced monomial; false when the variable is absent
bool mono_derivative(const Mono& mo, int i, Rational* coeff, Mono* out) {
  if (mo[i - 1] == 0) return false;
  *out = mo;
  (*out)[i - 1] -= 1;
  *coeff = Rational(mo[i - 1]);
  return true;
}

int sort_parity(std::vector<int>& v) {
  long inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  std::sort(v.begin(), v.end());
  return parity_sign(inv);
}

}  // namespace

Chain Chain::from_polys(const std::vector<Poly>& slots) {
  if (slots.empty()) throw std::invalid_argument("a word needs at least one slot");
  int nv = slots[0].nvars;
  Chain out = Chain::zero(nv);
  std::vector<std::pair<Word, Rational>> partial{{Word{}, Rational(1)}};
  for (const Poly& p : slots) {
    if (p.nvars != nv) throw std::invalid_argument("variable count mismatch");
    std::vector<std::pair<Word, Rational>> next;
    for (auto& [w, q] : partial)
      for (auto& [mo, v] : p.c) {
        Word nw = w;
        nw.push_back(mo);
        next.emplace_back(std::move(nw), q * v);
      }
    partial = std::move(next);
  }
  for (auto& [w, q] : partial) out.add_term(w, q);
  return out;
}

Chain Chain::operator+(const Chain& o) const {
  Chain out = *this;
  for (auto& [w, q] : o.c) out.add_term(w, q);
  return out;
}
Chain Chain::operator-(const Chain& o) const { return *this + (o * Rational(-1)); }
Chain Chain::operator*(const Rational& q) const {
  Chain out{nvars, {}};
  if (q == 0) return out;
  for (auto& [w, v] : c) out.c.emplace(w, v * q);
  return out;
}

bool Chain::pure_degree(int* n) const {
  if (c.empty()) return true;
  std::size_t len = c.begin()->first.size();
  for (auto& [w, q] : c)
    if (w.size() != len) return false;
  *n = static_cast<int>(len) - 1;
  return true;
}

std::string to_string(const Chain& ch) {
  if (ch.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, q] : ch.c) {
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "w[";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << "; ";
      Poly p = Poly::zero(ch.nvars);
      p.add_term(w[i], Rational(1));
      os << to_string(p);
    }
    os << "]";
  }
  return os.str();
}

ChainForms ChainForms::operator+(const ChainForms& o) const {
  ChainForms out = *this;
  for (auto& [k, q] : o.c) out.add_term(k.first, k.second, q);
  return out;
}
ChainForms ChainForms::operator-(const ChainForms& o) const {
  return *this + (o * Rational(-1));
}
ChainForms ChainForms::operator*(const Rational& q) const {
  ChainForms out{nvars, {}};
  if (q == 0) return out;
  for (auto& [k, v] : c) out.c.emplace(k, v * q);
  return out;
}

FormElement FormElement::operator+(const FormElement& o) const {
  FormElement out = *this;
  for (auto& [k, q] : o.c) out.add_term(k.first, k.second, q);
  return out;
}
FormElement FormElement::operator-(const FormElement& o) const {
  return *this + (o * Rational(-1));
}
FormElement FormElement::operator*(const Rational& q) const {
  FormElement out{nvars, {}};
  if (q == 0) return out;
  for (auto& [k, v] : c) out.c.emplace(k, v * q);
  return out;
}

std::string to_string(const FormElement& f) {
  if (f.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, q] : f.c) {
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << "*";
    Poly p = Poly::zero(f.nvars);
    p.add_term(k.first, Rational(1));
    os << "(" << to_string(p) << ")";
    for (int lab : to_list(k.second)) os << "*dx" << lab;
  }
  return os.str();
}

Chain d_cyclic(const Chain& ch) {
  Chain out = Chain::zero(ch.nvars);
  for (auto& [w, q] : ch.c) {
    int n = static_cast<int>(w.size()) - 1;
    for (int i = 0; i < n; ++i) {
      Word m;
      m.reserve(w.size() - 1);
      for (int j = 0; j <= n; ++j) {
        if (j == i) {
          m.push_back(mono_mul(w[i], w[i + 1]));
          ++j;
        } else {
          m.push_back(w[j]);
        }
      }
      out.add_term(m, q * parity_sign(i));
    }
    if (n >= 1) {
      Word m(w.begin(), w.end() - 1);
      m[0] = mono_mul(w[n], w[0]);
      out.add_term(m, q * parity_sign(n));
    }
  }
  return out;
}

Chain d_bar(const Chain& ch) {
  Chain out = Chain::zero(ch.nvars);
  for (auto& [w, q] : ch.c) {
    int n = static_cast<int>(w.size()) - 1;
    for (int i = 0; i < n; ++i) {
      Word m;
      m.reserve(w.size() - 1);
      for (int j = 0; j <= n; ++j) {
        if (j == i) {
          m.push_back(mono_mul(w[i], w[i + 1]));
          ++j;
        } else {
          m.push_back(w[j]);
        }
      }
      out.add_term(m, q * parity_sign(i));
    }
  }
  return out;
}

Chain shuffle(const Chain& a, const Chain& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("variable count mismatch");
  Chain out = Chain::zero(a.nvars);
  for (auto& [wa, qa] : a.c)
    for (auto& [wb, qb] : b.c) {
      int p = static_cast<int>(wa.size()) - 1;
      int q = static_cast<int>(wb.size()) - 1;
      Mono head = mono_mul(wa[0], wb[0]);
      // choose the positions (as a bitmask over p+q slots) taken by the
      // first word's letters, in order
      for (Mask pick = 0; pick < (Mask{1} << (p + q)); ++pick) {
        if (popcount(pick) != p) continue;
        long inv = 0;
        Word w(p + q + 1);
        w[0] = head;
        int ia = 1, ib = 1;
        for (int pos = 1; pos <= p + q; ++pos) {
          if (pick & bit(pos)) {
            w[pos] = wa[ia];
            inv += pos - ia;
            ++ia;
          } else {
            w[pos] = wb[ib];
            ++ib;
          }
        }
        out.add_term(w, qa * qb * parity_sign(inv));
        if (p + q == 0) break;
      }
    }
  return out;
}

CutChain cut(const Chain& ch) {
  CutChain out = CutChain::zero(ch.nvars);
  Mono unit(ch.nvars, 0);
  for (auto& [w, q] : ch.c) {
    int n = static_cast<int>(w.size()) - 1;
    for (int p = 0; p <= n; ++p) {
      Word first(w.begin(), w.begin() + p + 1);
      Word second;
      second.push_back(unit);
      second.insert(second.end(), w.begin() + p + 1, w.end());
      out.add_term(first, second, q);
    }
  }
  return out;
}

Chain antipode(const Chain& ch) {
  Chain out = Chain::zero(ch.nvars);
  for (auto& [w, q] : ch.c) {
    long n = static_cast<long>(w.size()) - 1;
    Word m;
    m.reserve(w.size());
    m.push_back(w[0]);
    for (std::size_t j = w.size() - 1; j >= 1; --j) m.push_back(w[j]);
    out.add_term(m, q * parity_sign(n * (n + 1) / 2));
  }
  return out;
}

Poly counit(const Chain& ch) {
  Poly out = Poly::zero(ch.nvars);
  for (auto& [w, q] : ch.c)
    if (w.size() == 1) out.add_term(w[0], q);
  return out;
}

Chain unit_chain(const Poly& p) {
  Chain out = Chain::zero(p.nvars);
  for (auto& [mo, q] : p.c) out.add_term(Word{mo}, q);
  return out;
}

FormElement hkr(const Chain& ch) {
  FormElement out = FormElement::zero(ch.nvars);
  for (auto& [w, q] : ch.c) {
    int n = static_cast<int>(w.size()) - 1;
    Rational scale = q / Rational(factorial(n));
    // pick one variable per differential slot; repeats die in the wedge
    std::vector<int> idx(n, 1);
    while (true) {
      Rational coeff = scale;
      Mono mo = w[0];
      std::vector<int> vars = idx;
      bool alive = true;
      for (int j = 0; j < n && alive; ++j) {
        Rational dc;
        Mono dm;
        if (!mono_derivative(w[j + 1], idx[j], &dc, &dm)) {
          alive = false;
          break;
        }
        coeff *= dc;
        mo = mono_mul(mo, dm);
      }
      if (alive) {
        Mask mask = 0;
        bool dup = false;
        for (int v : vars)
          if (mask & bit(v)) {
            dup = true;
            break;
          } else {
            mask |= bit(v);
          }
        if (!dup) {
          int sign = sort_parity(vars);
          out.add_term(mo, mask, coeff * sign);
        }
      }
      int j = n - 1;
      while (j >= 0 && idx[j] == ch.nvars) {
        idx[j] = 1;
        --j;
      }
      if (j < 0) break;
      ++idx[j];
    }
    if (n == 0) continue;
  }
  return out;
}

Chain antisym(const FormElement& f) {
  Chain out = Chain::zero(f.nvars);
  for (auto& [k, q] : f.c) {
    std::vector<int> labels = to_list(k.second);
    std::vector<int> perm = labels;
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<int> copy = perm;
      int sign = sort_parity(copy);
      Word w;
      w.push_back(k.first);
      for (int lab : perm) {
        Mono mo(f.nvars, 0);
        mo[lab - 1] = 1;
        w.push_back(mo);
      }
      out.add_term(w, q * sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

FormElement form_J(const FormElement& f) {
  FormElement out{f.nvars, {}};
  for (auto& [k, q] : f.c) out.c.emplace(k, q * parity_sign(popcount(k.second)));
  return out;
}

namespace {

// peel the last slot into a leg placed adjacent to the chain
void alpha_r_word(int nvars, const Word& w, const std::vector<int>& legs, const Rational& q,
                  ChainForms* out) {
  if (w.size() < 2) return;
  const Mono& last = w.back();
  for (int i = 1; i <= nvars; ++i) {
    Rational dc;
    Mono dm;
    if (!mono_derivative(last, i, &dc, &dm)) continue;
    Word m(w.begin(), w.end() - 1);
    m[0] = mono_mul(m[0], dm);
    std::vector<int> nl;
    nl.reserve(legs.size() + 1);
    nl.push_back(i);
    nl.insert(nl.end(), legs.begin(), legs.end());
    out->add_term(m, nl, q * dc);
  }
}

// peel slot 1 into a leg, with the alternating prefactor
void alpha_l_word(int nvars, const Word& w, const std::vector<int>& legs, const Rational& q,
                  ChainForms* out) {
  if (w.size() < 2) return;
  long n = static_cast<long>(w.size()) - 1;
  int pre = parity_sign(n - 1);
  const Mono& first = w[1];
  for (int i = 1; i <= nvars; ++i) {
    Rational dc;
    Mono dm;
    if (!mono_derivative(first, i, &dc, &dm)) continue;
    Word m;
    m.reserve(w.size() - 1);
    m.push_back(mono_mul(w[0], dm));
    m.insert(m.end(), w.begin() + 2, w.end());
    std::vector<int> nl;
    nl.reserve(legs.size() + 1);
    nl.push_back(i);
    nl.insert(nl.end(), legs.begin(), legs.end());
    out->add_term(m, nl, q * dc * pre);
  }
}

}  // namespace

ChainForms alpha_R(const Chain& ch) {
  ChainForms out = ChainForms::zero(ch.nvars);
  for (auto& [w, q] : ch.c) alpha_r_word(ch.nvars, w, {}, q, &out);
  return out;
}

ChainForms alpha_L(const Chain& ch) {
  ChainForms out = ChainForms::zero(ch.nvars);
  for (auto& [w, q] : ch.c) alpha_l_word(ch.nvars, w, {}, q, &out);
  return out;
}

ChainForms alpha_R_tensor(const ChainForms& cf) {
  ChainForms out = ChainForms::zero(cf.nvars);
  for (auto& [k, q] : cf.c) alpha_r_word(cf.nvars, k.first, k.second, q, &out);
  return out;
}

ChainForms alpha_L_tensor(const ChainForms& cf) {
  ChainForms out = ChainForms::zero(cf.nvars);
  for (auto& [k, q] : cf.c) alpha_l_word(cf.nvars, k.first, k.second, q, &out);
  return out;
}

ChainForms swap_two_legs(const ChainForms& cf) {
  ChainForms out = ChainForms::zero(cf.nvars);
  for (auto& [k, q] : cf.c) {
    if (k.second.size() != 2) throw std::invalid_argument("expected exactly two legs");
    out.add_term(k.first, {k.second[1], k.second[0]}, q * -1);
  }
  return out;
}

ChainForms exp_alpha_R(const Chain& ch) {
  ChainForms acc = ChainForms::zero(ch.nvars);
  for (auto& [w, q] : ch.c) acc.add_term(w, {}, q);
  ChainForms cur = acc;
  long i = 1;
  while (true) {
    cur = alpha_R_tensor(cur);
    if (cur.is_zero()) break;
    acc = acc + cur * (Rational(1) / Rational(factorial(i)));
    ++i;
  }
  return acc;
}

WedgeChain wedge_legs(const ChainForms& cf) {
  WedgeChain out = WedgeChain::zero(cf.nvars);
  for (auto& [k, q] : cf.c) {
    std::vector<int> legs = k.second;
    Mask mask = 0;
    bool dup = false;
    for (int v : legs)
      if (mask & bit(v)) {
        dup = true;
        break;
      } else {
        mask |= bit(v);
      }
    if (dup) continue;
    int sign = sort_parity(legs);
    out.add_term(k.first, mask, q * sign);
  }
  return out;
}

WedgeChain cut_then_forms(const Chain& ch) {
  WedgeChain out = WedgeChain::zero(ch.nvars);
  CutChain pieces = cut(ch);
  for (auto& [k, q] : pieces.c) {
    Chain second = Chain::zero(ch.nvars);
    second.add_term(k.second, Rational(1));
    FormElement f = hkr(second);
    for (auto& [fk, fq] : f.c) {
      Word first = k.first;
      first[0] = mono_mul(first[0], fk.first);
      out.add_term(first, fk.second, q * fq);
    }
  }
  return out;
}

}  // namespace exalg
