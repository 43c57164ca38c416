#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and LaTeX renderings of tables, expressions and reports.
 *
 * Exact values are always "num/den" strings (or "num" for integers); decimal
 * values are strings in scientific notation so no precision is lost to
 * binary floating point.
 */

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypereuler/coeff_engine.hpp"
#include "hypereuler/conjecture_lab.hpp"
#include "hypereuler/eulersum_algebra.hpp"
#include "hypereuler/numerics.hpp"
#include "hypereuler/rational.hpp"

namespace hypereuler {

using json = nlohmann::json;

// ---- Bernoulli numbers ----------------------------------------------------

inline json bernoulli_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (std::size_t n = 0; n < values.size(); ++n) out.push_back({{"n", n}, {"value", to_string(values[n])}});
  return out;
}

// ---- coefficient tables ---------------------------------------------------

inline json to_json(const CoeffTable& table) {
  json entries = json::array();
  for (int m = 0; m < table.r(); ++m)
    for (int j = 0; j <= table.r() - 1 - m; ++j)
      entries.push_back({{"m", m}, {"j", j}, {"value", to_string(table.a(m, j))}});
  return {{"r", table.r()}, {"entries", entries}};
}

/// Inverse of to_json(CoeffTable). Every triangle entry must be present exactly once.
inline CoeffTable coeff_table_from_json(const json& j, Route route = Route::a_recurrence) {
  CoeffTable table(j.at("r").get<int>(), route);
  std::vector<bool> seen(table.size(), false);
  std::size_t count = 0;
  for (const auto& entry : j.at("entries")) {
    const int m = entry.at("m").get<int>();
    const int col = entry.at("j").get<int>();
    table.a(m, col) = parse_rational(entry.at("value").get<std::string>());
    ++count;
  }
  if (count != table.size())
    throw std::invalid_argument("coefficient table JSON has " + std::to_string(count) + " entries, expected " +
                                std::to_string(table.size()));
  return table;
}

namespace detail {
inline std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return to_string(q);
  const std::string body = "\\frac{" + to_string(Integer(abs(q.get_num()))) + "}{" + to_string(q.get_den()) + "}";
  return q < 0 ? "-" + body : body;
}
}  // namespace detail

/// One line per m, from m = r-1 down to 0, in an align* block.
inline std::string to_latex(const CoeffTable& table) {
  const int r = table.r();
  std::string out = "{\\bf Case} $r=" + std::to_string(r) + "$:\n\\begin{align*}\n";
  for (int m = r - 1; m >= 0; --m) {
    out += "&";
    for (int j = 0; j <= r - 1 - m; ++j) {
      if (j > 0) out += ", \\quad ";
      out += "a(" + std::to_string(r) + "," + std::to_string(m) + "," + std::to_string(j) +
             ")=" + detail::latex_rational(table.a(m, j));
    }
    out += m > 0 ? ",\\\\\n" : ".\n";
  }
  out += "\\end{align*}\n";
  return out;
}

/// Plain text triangle in the same layout as to_latex.
inline std::string to_text(const CoeffTable& table) {
  const int r = table.r();
  std::string out;
  for (int m = r - 1; m >= 0; --m) {
    for (int j = 0; j <= r - 1 - m; ++j) {
      if (j > 0) out += "  ";
      out += "a(" + std::to_string(r) + "," + std::to_string(m) + "," + std::to_string(j) + ") = " +
             to_string(table.a(m, j));
    }
    out += "\n";
  }
  return out;
}

// ---- expressions ----------------------------------------------------------

inline json to_json(const EulerSumExpr& e) {
  json euler = json::array();
  for (const auto& [idx, coef] : e.euler_terms())
    euler.push_back({{"p", idx.p}, {"q", idx.q}, {"coef", to_string(coef)}});
  json zeta = json::array();
  for (const auto& [args, coef] : e.zeta().terms()) zeta.push_back({{"args", args}, {"coef", to_string(coef)}});
  return {{"euler_terms", euler}, {"zeta_terms", zeta}, {"constant", to_string(e.zeta().constant())}};
}

inline EulerSumExpr euler_sum_expr_from_json(const json& j) {
  EulerSumExpr e;
  for (const auto& t : j.at("euler_terms"))
    e.add_euler(t.at("p").get<int>(), t.at("q").get<int>(), parse_rational(t.at("coef").get<std::string>()));
  for (const auto& t : j.at("zeta_terms"))
    e.zeta().add(t.at("args").get<std::vector<int>>(), parse_rational(t.at("coef").get<std::string>()));
  e.zeta().add_constant(parse_rational(j.at("constant").get<std::string>()));
  return e;
}

// ---- numeric reports ------------------------------------------------------

inline json to_json(const ApproxValue& v, int sig) {
  return {{"value", v.value_string(sig)}, {"bound", v.bound_string()}};
}

inline json to_json(const VerifyReport& rep) {
  const int sig = rep.digits + 6;
  return {{"p", rep.p},
          {"r", rep.r},
          {"m", rep.m},
          {"direct", to_json(rep.direct, sig)},
          {"decomposed", to_json(rep.decomposed, sig)},
          {"difference", rep.difference.to_string(4, MPFR_RNDU)},
          {"pass", rep.pass}};
}

inline json to_json(const ConjectureReport& rep) {
  json violations = json::array();
  for (const auto& v : rep.violations)
    violations.push_back(
        {{"r", v.r}, {"m", v.m}, {"l", v.l}, {"lhs", to_string(v.lhs)}, {"rhs", to_string(v.rhs)}});
  json out = {{"conjecture", rep.conjecture},
              {"r_checked", rep.r_checked},
              {"all_pass", rep.all_pass},
              {"violations", violations}};
  if (!rep.min_abs_entry.empty()) {
    json mins = json::array();
    for (const auto& q : rep.min_abs_entry) mins.push_back(to_string(q));
    out["min_abs_entry"] = mins;
  }
  return out;
}

}  // namespace hypereuler
