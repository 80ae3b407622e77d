#include "demo.hpp"

#include <sstream>
#include <stdexcept>

#include "atiyah.hpp"
#include "expr.hpp"
#include "json.hpp"
#include "lie.hpp"
#include "rr.hpp"
#include "series.hpp"

namespace exalg {
namespace {

long parse_long(const std::string& s, const char* what, long lo, long hi) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + " must be an integer, got \"" +
                                s + "\"");
  }
  if (pos != s.size())
    throw std::invalid_argument(std::string(what) + " must be an integer, got \"" +
                                s + "\"");
  if (v < lo || v > hi)
    throw std::invalid_argument(std::string(what) + " must be in " +
                                std::to_string(lo) + ".." + std::to_string(hi));
  return v;
}

void need_params(const std::vector<std::string>& params, std::size_t lo,
                 std::size_t hi, const char* usage) {
  if (params.size() < lo || params.size() > hi)
    throw std::invalid_argument(std::string("usage: ") + usage);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string matrix_text(const QMatrix& m, const std::string& indent) {
  // column-aligned bracketed rows
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.n));
  std::vector<std::size_t> width(static_cast<std::size_t>(m.n), 0);
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j) {
      std::string s = to_string(m.at(i, j));
      width[static_cast<std::size_t>(j - 1)] =
          std::max(width[static_cast<std::size_t>(j - 1)], s.size());
      cells[static_cast<std::size_t>(i - 1)].push_back(std::move(s));
    }
  std::ostringstream out;
  for (int i = 0; i < m.n; ++i) {
    out << indent << "[";
    for (int j = 0; j < m.n; ++j) {
      const std::string& s =
          cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      out << " " << std::string(width[static_cast<std::size_t>(j)] - s.size(),
                                ' ')
          << s;
    }
    out << " ]\n";
  }
  return out.str();
}

nlohmann::json matrix_json(const QMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= m.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= m.n; ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* state_text(CheckState s) {
  switch (s) {
    case CheckState::Passed:
      return "passed";
    case CheckState::Failed:
      return "failed";
    default:
      return "skipped";
  }
}

DemoResult demo_todd_table(const std::vector<std::string>& params) {
  need_params(params, 0, 1, "demo todd-table [order]");
  long n = params.empty() ? 6 : parse_long(params[0], "order", 0, 64);
  Series s = todd_series(static_cast<std::size_t>(n) + 1);
  std::ostringstream text;
  text << "coefficients of the Todd-type series z/(1 - e^{-z}) through order "
       << n << "\n\n  order  coefficient\n";
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::size_t k = 0; k < s.size(); ++k) {
    std::string c = to_string(s[k]);
    text << "  " << std::string(5 - std::to_string(k).size(), ' ') << k << "  "
         << c << "\n";
    coeffs.push_back(c);
  }
  nlohmann::json j{{"topic", "todd-table"},
                   {"order", n},
                   {"coefficients", coeffs}};
  return {text.str(), dump(j)};
}

DemoResult demo_hrr_table(const std::vector<std::string>& params) {
  need_params(params, 0, 2, "demo hrr-table [n] [kmax]");
  long n = params.empty() ? 1 : parse_long(params[0], "n", 0, 8);
  long kmax = params.size() < 2 ? 6 : parse_long(params[1], "kmax", 0, 24);
  std::ostringstream text;
  text << "Euler characteristics of the twisting sheaves on projective "
       << n << "-space\n\n    n     k    integral    binomial  match\n";
  nlohmann::json rows = nlohmann::json::array();
  CohClass td = todd_tangent(static_cast<int>(n));
  bool all = true;
  for (long k = -kmax; k <= kmax; ++k) {
    Rational chi_int = integrate(ch_line(k, static_cast<int>(n)) * td);
    Rational chi_bin = euler_characteristic(static_cast<int>(n), k);
    bool match = chi_int == chi_bin;
    all = all && match;
    char line[96];
    std::snprintf(line, sizeof(line), "  %3ld  %4ld  %10s  %10s  %s\n", n, k,
                  to_string(chi_int).c_str(), to_string(chi_bin).c_str(),
                  match ? "yes" : "NO");
    text << line;
    rows.push_back({{"n", n},
                    {"k", k},
                    {"chi_integral", to_string(chi_int)},
                    {"chi_binomial", to_string(chi_bin)},
                    {"match", match}});
  }
  text << "\n" << (all ? "all rows match" : "SOME ROWS DO NOT MATCH") << "\n";
  nlohmann::json j{{"topic", "hrr-table"},
                   {"n", n},
                   {"kmax", kmax},
                   {"rows", rows},
                   {"all_match", all}};
  return {text.str(), dump(j)};
}

DemoResult demo_dexp(const std::vector<std::string>& params) {
  need_params(params, 0, 0, "demo dexp");
  QMatrix z = QMatrix::unit(3, 1, 2);
  QMatrix w = QMatrix::unit(3, 2, 3);
  QMatrix direct = dexp_direct(z, w);
  QMatrix formula = dexp_formula(z, w);
  bool match = direct == formula;
  std::ostringstream text;
  text << "derivative of the matrix exponential on the 3x3 strictly upper "
          "triangular algebra\n\nZ =\n"
       << matrix_text(z, "  ") << "W =\n" << matrix_text(w, "  ")
       << "t-linear coefficient of exp(Z + tW):\n" << matrix_text(direct, "  ")
       << "series formula exp(Z) [(1 - e^{-ad Z})/ad Z](W):\n"
       << matrix_text(formula, "  ")
       << (match ? "direct computation and series formula agree"
                 : "DIRECT COMPUTATION AND SERIES FORMULA DISAGREE")
       << "\n";
  nlohmann::json j{{"topic", "dexp"},
                   {"z", matrix_json(z)},
                   {"w", matrix_json(w)},
                   {"direct", matrix_json(direct)},
                   {"formula", matrix_json(formula)},
                   {"match", match}};
  return {text.str(), dump(j)};
}

DemoResult demo_element(const std::vector<std::string>& params) {
  need_params(params, 2, 3, "demo element <m> <expr> [expr2]");
  int m = static_cast<int>(parse_long(params[0], "m", 1, 10));
  ExtElement a = parse_ext_element(params[1], m);
  std::ostringstream text;
  text << "generators: " << m << "\nfirst:  " << to_string(a) << "\n";
  nlohmann::json j{{"topic", "element"},
                   {"m", m},
                   {"first", to_string(a)}};
  if (params.size() == 3) {
    ExtElement b = parse_ext_element(params[2], m);
    if (b.side != a.side)
      throw std::invalid_argument(
          "both expressions must use the same generator letter");
    text << "second: " << to_string(b) << "\n";
    ExtElement prod = wedge(a, b);
    text << "product: " << to_string(prod) << "\n";
    j["second"] = to_string(b);
    j["product"] = to_string(prod);
    if (a.side == Side::V) {
      Rational p = pairing(a, b);
      text << "top-coefficient pairing: " << to_string(p) << "\n";
      j["pairing"] = to_string(p);
    }
  }
  return {text.str(), dump(j)};
}

DemoResult demo_chain(const std::vector<std::string>& params) {
  need_params(params, 2, 2, "demo chain <nvars> <expr>");
  int nvars = static_cast<int>(parse_long(params[0], "nvars", 1, 8));
  Chain c = parse_chain(params[1], nvars);
  std::ostringstream text;
  text << "variables: " << nvars << "\nchain:                 " << to_string(c)
       << "\ncyclic differential:   " << to_string(d_cyclic(c))
       << "\nbar differential:      " << to_string(d_bar(c))
       << "\ndifferential forms:    " << to_string(hkr(c)) << "\n";
  nlohmann::json j{{"topic", "chain"},
                   {"nvars", nvars},
                   {"chain", to_string(c)},
                   {"d_cyclic", to_string(d_cyclic(c))},
                   {"d_bar", to_string(d_bar(c))},
                   {"forms", to_string(hkr(c))}};
  return {text.str(), dump(j)};
}

DemoResult demo_atiyah(const std::vector<std::string>& params) {
  need_params(params, 1, 1, "demo atiyah <json>");
  AtiyahTensor a = atiyah_from_json(params[0]);
  ExtElement det = duflo_det(a);
  bool gate = commutation_predicate(a);
  TopPowerReport top = verify_top_power(a);
  std::ostringstream text;
  text << "connection tensor on " << a.m << " generators ("
       << (a.is_symmetric() ? "symmetric" : "not symmetric") << ")\n"
       << "series determinant: " << to_string(det) << "\n"
       << "top-power identity: " << (top.equal ? "passed" : "FAILED") << "\n"
       << "coproduct commutation hypothesis: "
       << (gate ? "holds" : "does not hold") << "\n";
  nlohmann::json j{{"topic", "atiyah"},
                   {"m", a.m},
                   {"symmetric", a.is_symmetric()},
                   {"determinant", to_string(det)},
                   {"top_power", top.equal},
                   {"commutation", gate}};
  if (gate) {
    ChainReport r = verify_adjoint_chain(a);
    text << "adjoint chain:\n"
         << "  determinant annihilation:  " << state_text(r.vanishing) << "\n"
         << "  conjugation identity:      " << state_text(r.conjugation)
         << "\n"
         << "  right constant term:       " << state_text(r.right_unit) << "\n"
         << "  left constant term:        " << state_text(r.left_td) << "\n";
    j["chain"] = {{"vanishing", state_text(r.vanishing)},
                  {"conjugation", state_text(r.conjugation)},
                  {"right_unit", state_text(r.right_unit)},
                  {"left_td", state_text(r.left_td)}};
  }
  return {text.str(), dump(j)};
}

DemoResult demo_lie_basis(const std::vector<std::string>& params) {
  need_params(params, 1, 1, "demo lie-basis <json>");
  LieBasis b = basis_from_json(params[0]);
  std::ostringstream text;
  text << "nilpotent matrix Lie algebra: dimension " << b.dim()
       << ", matrices " << b.mat_size() << "x" << b.mat_size() << "\n\n"
       << closure_table_text(b) << "\n";
  // deterministic sample point: the sum of the basis matrices
  QMatrix z = QMatrix::zero(b.mat_size());
  for (const QMatrix& x : b.x) z = z + x;
  auto [jd, jf] = jacobians(b, z);
  auto [ed, ef] = exp_jacobians(b, z);
  Rational dens = density_det(b, z);
  bool series_ok = left_invariant_comparison(b, 3);
  text << "verification at the sum of the basis matrices:\n"
       << "  inverted-exponential Jacobian (direct):  " << to_string(jd)
       << "\n"
       << "  inverted-exponential Jacobian (series):  " << to_string(jf)
       << "\n"
       << "  exponential Jacobians:                   " << to_string(ed)
       << ", " << to_string(ef) << "\n"
       << "  density determinant:                     " << to_string(dens)
       << "\n"
       << "  invariant-derivative series comparison:  "
       << (series_ok ? "passed" : "FAILED") << "\n";
  nlohmann::json j{{"topic", "lie-basis"},
                   {"dim", b.dim()},
                   {"mat_size", b.mat_size()},
                   {"closure_table", closure_table_text(b)},
                   {"jacobian_direct", to_string(jd)},
                   {"jacobian_series", to_string(jf)},
                   {"exp_jacobian_direct", to_string(ed)},
                   {"exp_jacobian_series", to_string(ef)},
                   {"density_det", to_string(dens)},
                   {"derivative_series_ok", series_ok}};
  return {text.str(), dump(j)};
}

}  // namespace

const std::vector<std::string>& known_demo_topics() {
  static const std::vector<std::string> names{
      "todd-table", "hrr-table", "dexp",     "element",
      "chain",      "atiyah",    "lie-basis"};
  return names;
}

DemoResult run_demo(const std::string& topic,
                    const std::vector<std::string>& params) {
  if (topic == "todd-table") return demo_todd_table(params);
  if (topic == "hrr-table") return demo_hrr_table(params);
  if (topic == "dexp") return demo_dexp(params);
  if (topic == "element") return demo_element(params);
  if (topic == "chain") return demo_chain(params);
  if (topic == "atiyah") return demo_atiyah(params);
  if (topic == "lie-basis") return demo_lie_basis(params);
  throw std::invalid_argument("unknown demo topic: " + topic);
}

}  // namespace exalg
