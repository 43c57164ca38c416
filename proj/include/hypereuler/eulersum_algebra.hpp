#pragma once

/**
 * @file eulersum_algebra.hpp
 * @brief Formal rational combinations of Euler sums S_{p,q} and zeta monomials.
 *
 * S_{p,q} = sum_{n>=1} H_n^{(p)} / n^q. Orders p <= 0 are allowed in an
 * expression (they come straight out of the decomposition) and are removed
 * by normalize_nonpositive, which rewrites them through Faulhaber's formula
 * as plain zeta values.
 *
 * Both expression types are kept in canonical sparse form: no zero
 * coefficients are stored, so two expressions are equal iff their maps are.
 */

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hypereuler/errors.hpp"
#include "hypereuler/exact_arith.hpp"
#include "hypereuler/rational.hpp"

namespace hypereuler {

/// Arguments of a zeta monomial: {s} for zeta(s), {a, b} (sorted) for zeta(a)zeta(b).
using ZetaArgs = std::vector<int>;

class ZetaExpr {
 public:
  ZetaExpr() = default;

  static ZetaExpr single(int s, const Rational& coef = 1) {
    ZetaExpr e;
    e.add({s}, coef);
    return e;
  }

  /// Adds coef * prod zeta(args). Degree is capped at 2 and every argument must be >= 2.
  void add(ZetaArgs args, const Rational& coef) {
    if (args.empty() || args.size() > 2)
      throw StructuralError("zeta monomials must have degree 1 or 2, got " + std::to_string(args.size()));
    for (int s : args)
      if (s < 2) throw DivergenceError("zeta(" + std::to_string(s) + ") diverges");
    std::sort(args.begin(), args.end());
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(args), coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_constant(const Rational& c) { constant_ += c; }

  const std::map<ZetaArgs, Rational>& terms() const { return terms_; }
  const Rational& constant() const { return constant_; }
  bool is_zero() const { return terms_.empty() && constant_ == 0; }

  ZetaExpr& add_scaled(const Rational& c, const ZetaExpr& other) {
    if (c == 0) return *this;
    for (const auto& [args, coef] : other.terms_) add(args, c * coef);
    constant_ += c * other.constant_;
    return *this;
  }

  ZetaExpr& operator+=(const ZetaExpr& other) { return add_scaled(1, other); }

  friend bool operator==(const ZetaExpr&, const ZetaExpr&) = default;

 private:
  std::map<ZetaArgs, Rational> terms_;
  Rational constant_ = 0;
};

struct EulerIndex {
  int p;
  int q;
  friend auto operator<=>(const EulerIndex&, const EulerIndex&) = default;
};

class EulerSumExpr {
 public:
  EulerSumExpr() = default;

  static EulerSumExpr single(int p, int q, const Rational& coef = 1) {
    EulerSumExpr e;
    e.add_euler(p, q, coef);
    return e;
  }

  /// Adds coef * S_{p,q}; q >= 2 is required for every term.
  void add_euler(int p, int q, const Rational& coef) {
    if (q < 2) throw StructuralError("Euler sum S(" + std::to_string(p) + "," + std::to_string(q) + ") needs q >= 2");
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(EulerIndex{p, q}, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ZetaExpr& zeta() { return zeta_; }
  const ZetaExpr& zeta() const { return zeta_; }
  const std::map<EulerIndex, Rational>& euler_terms() const { return terms_; }
  bool is_zero() const { return terms_.empty() && zeta_.is_zero(); }

  friend bool operator==(const EulerSumExpr&, const EulerSumExpr&) = default;

 private:
  std::map<EulerIndex, Rational> terms_;
  ZetaExpr zeta_;
};

/// e1 + c * e2.
inline EulerSumExpr expr_combine(const EulerSumExpr& e1, const Rational& c, const EulerSumExpr& e2) {
  EulerSumExpr out = e1;
  if (c == 0) return out;
  for (const auto& [idx, coef] : e2.euler_terms()) out.add_euler(idx.p, idx.q, c * coef);
  out.zeta().add_scaled(c, e2.zeta());
  return out;
}

/**
 * S_{-k,q} for k >= 0 as zeta values:
 *   sum_n (sum_{x<=n} x^k) / n^q = sum_j c_j zeta(q - (k+1-j)),  c_j Faulhaber coefficients.
 */
inline ZetaExpr nonpositive_euler_sum(int p, int q) {
  if (p > 0) throw DomainError("nonpositive_euler_sum: p must be <= 0");
  const int k = -p;
  if (q + p < 3)
    throw DivergenceError("S(" + std::to_string(p) + "," + std::to_string(q) + ") diverges: needs q + p >= 3");
  const auto coeffs = faulhaber_coeffs(k);
  ZetaExpr out;
  for (int j = 0; j <= k; ++j) out.add({q - (k + 1 - j)}, coeffs[static_cast<std::size_t>(j)]);
  return out;
}

/// Replaces every S_{p,q} with p <= 0 by its zeta expansion; p >= 1 terms are untouched.
inline EulerSumExpr normalize_nonpositive(const EulerSumExpr& e) {
  EulerSumExpr out;
  out.zeta() = e.zeta();
  for (const auto& [idx, coef] : e.euler_terms()) {
    if (idx.p >= 1)
      out.add_euler(idx.p, idx.q, coef);
    else
      out.zeta().add_scaled(coef, nonpositive_euler_sum(idx.p, idx.q));
  }
  return out;
}

/// S_{1,m} = (m+2)/2 zeta(m+1) - 1/2 sum_{n=1}^{m-2} zeta(m-n) zeta(n+1),  m >= 2.
inline ZetaExpr euler_reduce_s1(int m) {
  if (m < 2) throw DomainError("euler_reduce_s1: m must be >= 2");
  ZetaExpr out;
  out.add({m + 1}, make_rational(m + 2, 2));
  for (int n = 1; n <= m - 2; ++n) out.add({m - n, n + 1}, make_rational(-1, 2));
  return out;
}

/// Replaces every S_{1,q} by its zeta-value form.
inline EulerSumExpr reduce_s1_terms(const EulerSumExpr& e) {
  EulerSumExpr out;
  out.zeta() = e.zeta();
  for (const auto& [idx, coef] : e.euler_terms()) {
    if (idx.p == 1)
      out.zeta().add_scaled(coef, euler_reduce_s1(idx.q));
    else
      out.add_euler(idx.p, idx.q, coef);
  }
  return out;
}

// ---- rendering ----------------------------------------------------------

namespace detail {

/// Appends "+ c*sym" / "- c*sym" with unit coefficients elided.
inline void append_term(std::string& out, const Rational& coef, const std::string& symbol, bool latex) {
  const bool negative = coef < 0;
  const Rational mag = abs(coef);
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (symbol.empty()) {
    out += latex && mag.get_den() != 1 ? "\\frac{" + to_string(mag.get_num()) + "}{" + to_string(mag.get_den()) + "}"
                                       : to_string(mag);
    return;
  }
  if (mag != 1) {
    if (latex)
      out += mag.get_den() == 1 ? to_string(mag.get_num())
                                : "\\frac{" + to_string(mag.get_num()) + "}{" + to_string(mag.get_den()) + "}";
    else
      out += to_string(mag) + "*";
  }
  out += symbol;
}

inline std::string zeta_symbol(const ZetaArgs& args, bool latex) {
  const std::string z = latex ? "\\zeta" : "zeta";
  if (args.size() == 2 && args[0] == args[1])
    return z + "(" + std::to_string(args[0]) + ")" + (latex ? "^{2}" : "^2");
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0 && !latex) out += "*";
    out += z + "(" + std::to_string(args[i]) + ")";
  }
  return out;
}

inline void append_zeta(std::string& out, const ZetaExpr& e, bool latex) {
  // Single values first (largest argument first), then products.
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
    if (it->first.size() == 1) append_term(out, it->second, zeta_symbol(it->first, latex), latex);
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
    if (it->first.size() == 2) append_term(out, it->second, zeta_symbol(it->first, latex), latex);
  if (e.constant() != 0) append_term(out, e.constant(), "", latex);
}

inline std::string render(const EulerSumExpr& e, bool latex) {
  std::string out;
  for (auto it = e.euler_terms().rbegin(); it != e.euler_terms().rend(); ++it) {
    const auto [p, q] = it->first;
    const std::string symbol = latex ? "S^{+,+}_{" + std::to_string(p) + "," + std::to_string(q) + "}"
                                     : "S(" + std::to_string(p) + "," + std::to_string(q) + ")";
    append_term(out, it->second, symbol, latex);
  }
  append_zeta(out, e.zeta(), latex);
  return out.empty() ? "0" : out;
}

}  // namespace detail

/// Plain-text form, e.g. "S(2,4) + S(2,3) - S(1,4)" or "3*zeta(5) - zeta(2)*zeta(3)".
inline std::string to_text(const EulerSumExpr& e) { return detail::render(e, false); }
inline std::string to_latex(const EulerSumExpr& e) { return detail::render(e, true); }

inline std::string to_text(const ZetaExpr& z) {
  std::string out;
  detail::append_zeta(out, z, false);
  return out.empty() ? "0" : out;
}

inline std::string to_latex(const ZetaExpr& z) {
  std::string out;
  detail::append_zeta(out, z, true);
  return out.empty() ? "0" : out;
}

}  // namespace hypereuler
