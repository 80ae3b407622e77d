#include "expr.hpp"

#include <cctype>
#include <stdexcept>

namespace exalg {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at position " +
                                std::to_string(pos + 1) + " in \"" + s + "\"");
  }

  long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits) fail("expected an integer");
    return std::stol(s.substr(start, pos - start));
  }

  Rational rational() {
    long num = integer();
    if (eat('/')) {
      long den = integer();
      if (den == 0) fail("zero denominator");
      return rat(num, den);
    }
    return rat(num);
  }
};

bool starts_number(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

ExtElement parse_ext_element(const std::string& text, int m) {
  Cursor cur{text};
  std::vector<std::pair<Mask, Rational>> terms;
  Side side = Side::V;
  bool side_known = false;
  bool first = true;
  while (!cur.done()) {
    Rational sign(1);
    if (cur.eat('-')) {
      sign = -1;
    } else if (cur.eat('+')) {
      // explicit plus
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    first = false;

    Rational coef = sign;
    char c = cur.peek();
    if (starts_number(c)) {
      coef = sign * cur.rational();
      if (!cur.eat('*')) {
        // bare scalar term
        terms.emplace_back(Mask{0}, coef);
        continue;
      }
      c = cur.peek();
    }
    if (c != 'x' && c != 'y') cur.fail("expected a generator 'x{..}' or 'y{..}'");
    ++cur.pos;
    Side here = c == 'x' ? Side::V : Side::Dual;
    if (!side_known) {
      side = here;
      side_known = true;
    } else if (here != side) {
      cur.fail("an element must use one generator letter throughout");
    }
    cur.expect('{');
    Mask word = 0;
    if (!cur.eat('}')) {
      while (true) {
        long label = cur.integer();
        if (label < 1 || label > m)
          cur.fail("generator label out of range 1..m");
        if (word & bit(static_cast<int>(label)))
          cur.fail("repeated generator label");
        word |= bit(static_cast<int>(label));
        if (cur.eat('}')) break;
        cur.expect(',');
      }
    }
    terms.emplace_back(word, coef);
  }
  if (first) cur.fail("empty element");
  ExtElement acc = ExtElement::zero(side, m);
  for (auto& [word, q] : terms) acc.add_term(word, q);
  return acc;
}

Poly parse_poly(const std::string& text, int nvars) {
  Cursor cur{text};
  // parses a sum of products; stops at ';' or ']' for reuse in chain syntax
  auto factor = [&](bool& ok) -> Poly {
    char c = cur.peek();
    if (starts_number(c)) {
      ok = true;
      return Poly::constant(nvars, cur.rational());
    }
    if (c == 'x') {
      ++cur.pos;
      long idx = cur.integer();
      if (idx < 1 || idx > nvars) cur.fail("variable index out of range");
      int e = 1;
      if (cur.eat('^')) {
        long raised = cur.integer();
        if (raised < 0) cur.fail("negative exponent");
        e = static_cast<int>(raised);
      }
      Poly p = Poly::one(nvars);
      for (int t = 0; t < e; ++t) p = p * Poly::var(nvars, static_cast<int>(idx));
      ok = true;
      return p;
    }
    ok = false;
    return Poly::zero(nvars);
  };

  Poly acc = Poly::zero(nvars);
  bool first = true;
  while (!cur.done()) {
    char c = cur.peek();
    if (c == ';' || c == ']') break;
    Rational sign(1);
    if (cur.eat('-')) {
      sign = -1;
    } else if (cur.eat('+')) {
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    first = false;
    bool ok = false;
    Poly term = factor(ok);
    if (!ok) cur.fail("expected a number or a variable");
    while (cur.eat('*')) {
      Poly f = factor(ok);
      if (!ok) cur.fail("expected a factor after '*'");
      term = term * f;
    }
    acc = acc + term * sign;
  }
  if (first) cur.fail("empty polynomial");
  return acc;
}

namespace {

// parse_poly over a slice of the original text
Poly parse_poly_slice(Cursor& cur, int nvars) {
  std::size_t start = cur.pos;
  int depth = 0;
  while (cur.pos < cur.s.size()) {
    char c = cur.s[cur.pos];
    if (depth == 0 && (c == ';' || c == ']')) break;
    if (c == '[') ++depth;
    if (c == ']') --depth;
    ++cur.pos;
  }
  Poly p = parse_poly(cur.s.substr(start, cur.pos - start), nvars);
  return p;
}

}  // namespace

Chain parse_chain(const std::string& text, int nvars) {
  Cursor cur{text};
  Chain acc = Chain::zero(nvars);
  bool first = true;
  while (!cur.done()) {
    Rational sign(1);
    if (cur.eat('-')) {
      sign = -1;
    } else if (cur.eat('+')) {
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    first = false;
    Rational coef = sign;
    if (starts_number(cur.peek())) {
      coef = sign * cur.rational();
      cur.expect('*');
    }
    if (!cur.eat('w')) cur.fail("expected a word 'w[..]'");
    cur.expect('[');
    std::vector<Poly> slots;
    slots.push_back(parse_poly_slice(cur, nvars));
    while (cur.eat(';')) slots.push_back(parse_poly_slice(cur, nvars));
    cur.expect(']');
    acc = acc + Chain::from_polys(slots) * coef;
  }
  if (first) cur.fail("empty chain");
  return acc;
}

std::string to_string(const ExtElement& e) {
  if (e.c.empty()) return "0";
  const char letter = e.side == Side::V ? 'x' : 'y';
  std::string out;
  bool first = true;
  for (const auto& [word, q] : e.c) {
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) out += "-";
      first = false;
    } else {
      out += sgn(q) < 0 ? " - " : " + ";
    }
    if (word == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += letter;
      out += '{';
      bool firstlab = true;
      for (int label : to_list(word)) {
        if (!firstlab) out += ',';
        firstlab = false;
        out += std::to_string(label);
      }
      out += '}';
    }
  }
  return out;
}

}  // namespace exalg
