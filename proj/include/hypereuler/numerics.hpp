#pragma once

/**
 * @file numerics.hpp
 * @brief Certified numeric values of zeta(s), S_{p,q} and zeta_{H^{(p,r)}}(m).
 *
 * Every result is an ApproxValue: a working-precision value and an absolute
 * error bound that covers series truncation and all floating-point rounding.
 *
 * Two tail strategies are available.
 *
 * TailMethod::elementary sums N terms and bounds the rest by integral
 * comparison, e.g.  sum_{n>N} n^{-s} <= N^{1-s}/(s-1). It is simple but for
 * weight-2 series the tail decays like log(N)/N, so 1e-8 is out of reach
 * within any sensible term cap.
 *
 * TailMethod::euler_maclaurin (the default) sums N terms of
 * sum_n H_n^{(p,r)} n^{-s} and evaluates the tail exactly in terms of
 * Hurwitz tails zeta(s, N+1). Summation by parts gives
 *
 *   sum_{n>N} H_n^{(p,k)} n^{-s}
 *     = H_N^{(p,k)} zeta(s,N+1) + sum_{n>N} H_n^{(p,k-1)} zeta(s,n),
 *
 * with H_n^{(p,0)} = n^{-p}. Each zeta(s,n) is expanded by Euler-Maclaurin,
 *
 *   zeta(s,n) = n^{1-s}/(s-1) + n^{-s}/2
 *             + sum_{i=1}^{K} B_{2i}/(2i)! (s)_{2i-1} n^{-s-2i+1} + R_K(n),
 *
 * where |R_K(n)| is at most the first omitted term (all even derivatives of
 * x^{-s} are positive and decreasing). That turns the level-k tail into
 * level-(k-1) tails with larger exponents, down to level 0, which is a
 * Hurwitz tail again. The R_K remainders are bounded with the crude estimate
 *
 *   H_n^{(p,j)} <= C(n+j-1, j-1) H_n <= 2^j n^{j-1/2} / (j-1)!     (n >= j).
 *
 * Rounding is accounted for with a-priori bounds: for a sum of c positive
 * terms each carrying relative error e*u, the accumulated error is at most
 * 1.02 (c + e) u times the sum, u = 2^{1-prec}.
 */

#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypereuler/bigfloat.hpp"
#include "hypereuler/decomposer.hpp"
#include "hypereuler/errors.hpp"
#include "hypereuler/eulersum_algebra.hpp"
#include "hypereuler/exact_arith.hpp"
#include "hypereuler/rational.hpp"

namespace hypereuler {

enum class TailMethod { euler_maclaurin, elementary };

struct NumericConfig {
  int guard_digits = 10;
  long max_terms = 10'000'000;
  TailMethod tail = TailMethod::euler_maclaurin;
};

inline mpfr_prec_t working_precision(int digits, const NumericConfig& cfg = {}) {
  return static_cast<mpfr_prec_t>(std::ceil((digits + cfg.guard_digits) * 3.321928094887362)) + 16;
}

/// The true quantity lies in [value - error_bound, value + error_bound].
struct ApproxValue {
  BigFloat value;
  BigFloat error_bound;

  static ApproxValue zero(mpfr_prec_t prec) { return {BigFloat(prec), BigFloat(prec)}; }

  /// |x - value| <= error_bound, with the difference rounded up.
  bool contains(const BigFloat& x) const {
    const BigFloat diff = x >= value ? bf::sub(x, value, MPFR_RNDU) : bf::sub(value, x, MPFR_RNDU);
    return diff <= error_bound;
  }

  std::string value_string(int sig) const { return value.to_string(sig); }
  std::string bound_string() const { return error_bound.to_string(4, MPFR_RNDU); }
};

namespace detail {

inline BigFloat unit_roundoff(mpfr_prec_t prec) { return bf::pow2(1 - static_cast<long>(prec), 64); }

/// 1.02 * count * u * magnitude, rounded up.
inline BigFloat rounding_slack(double count, const BigFloat& magnitude, mpfr_prec_t prec) {
  return bf::mul_d(bf::mul(bf::abs(magnitude), unit_roundoff(prec), MPFR_RNDU), 1.02 * count, MPFR_RNDU);
}

inline ApproxValue approx_add(const ApproxValue& a, const ApproxValue& b) {
  BigFloat v = bf::add(a.value, b.value);
  BigFloat bound = bf::add(bf::add(a.error_bound, b.error_bound, MPFR_RNDU),
                           rounding_slack(1, v, v.precision()), MPFR_RNDU);
  return {std::move(v), std::move(bound)};
}

inline ApproxValue approx_scale(const Rational& c, const ApproxValue& a) {
  const mpfr_prec_t prec = a.value.precision();
  const BigFloat cf(c, prec);
  BigFloat v = bf::mul(cf, a.value);
  BigFloat bound = bf::mul(bf::abs(cf), a.error_bound, MPFR_RNDU);
  bound = bf::add(bound, rounding_slack(2, bound, prec), MPFR_RNDU);
  bound = bf::add(bound, rounding_slack(3, v, prec), MPFR_RNDU);
  return {std::move(v), std::move(bound)};
}

inline ApproxValue approx_mul(const ApproxValue& a, const ApproxValue& b) {
  BigFloat v = bf::mul(a.value, b.value);
  const mpfr_prec_t prec = v.precision();
  BigFloat bound = bf::mul(bf::abs(a.value), b.error_bound, MPFR_RNDU);
  bound = bf::add(bound, bf::mul(bf::abs(b.value), a.error_bound, MPFR_RNDU), MPFR_RNDU);
  bound = bf::add(bound, bf::mul(a.error_bound, b.error_bound, MPFR_RNDU), MPFR_RNDU);
  bound = bf::add(bound, rounding_slack(4, bound, prec), MPFR_RNDU);
  bound = bf::add(bound, rounding_slack(2, v, prec), MPFR_RNDU);
  return {std::move(v), std::move(bound)};
}

inline ApproxValue approx_exact(const Rational& c, mpfr_prec_t prec) {
  BigFloat v(c, prec);
  BigFloat bound = rounding_slack(1, v, prec);
  return {std::move(v), std::move(bound)};
}

/// B_{2i}/(2i)! (s)_{2i-1}, exact.
inline Rational em_coefficient(long s, int i) {
  Integer rising = 1;
  for (long t = 0; t < 2L * i - 1; ++t) rising *= s + t;
  Integer factorial = 1;
  for (long t = 2; t <= 2L * i; ++t) factorial *= t;
  Rational c = bernoulli_plus(2L * i) * Rational(rising) / Rational(factorial);
  c.canonicalize();
  return c;
}

/// |c| * n^{-e}, rounded up.
inline BigFloat upper_term(const Rational& c, unsigned long n, unsigned long e, mpfr_prec_t prec) {
  const BigFloat cf(abs(c), prec, MPFR_RNDU);
  return bf::mul(cf, bf::inv_pow(n, e, prec, MPFR_RNDU), MPFR_RNDU);
}

inline constexpr int kMaxEulerMaclaurinTerms = 120;

}  // namespace detail

/**
 * Hurwitz tail zeta(s, a) = sum_{n>=a} n^{-s} for integers s >= 2, a >= 1 by
 * Euler-Maclaurin at a. Correction terms are added until one drops below
 * `tol`; the bound is that last correction (which dominates the true
 * remainder once the next term is no larger) plus rounding. If the
 * corrections start growing first, the bound is the first omitted term.
 */
inline ApproxValue hurwitz_tail(long s, unsigned long a, const BigFloat& tol, mpfr_prec_t prec) {
  if (s < 2) throw DomainError("hurwitz_tail: s must be >= 2");
  if (a < 1) throw DomainError("hurwitz_tail: a must be >= 1");
  const BigFloat a_f(static_cast<long>(a), prec);
  const BigFloat a_pow = bf::inv_pow(a, static_cast<unsigned long>(s), prec);  // a^{-s}
  BigFloat sum = bf::div(bf::mul(a_pow, a_f), BigFloat(s - 1, prec));
  sum = bf::add(sum, bf::mul_d(a_pow, 0.5));
  BigFloat abs_sum = bf::abs(sum);

  // With |T_{i+1}| <= |T_i|, the remainder after T_i is at most |T_i|, so the
  // reported bound is the last correction actually added.
  auto magnitude = [&](int i) {
    return detail::upper_term(detail::em_coefficient(s, i), a, static_cast<unsigned long>(s + 2L * i - 1), prec);
  };
  BigFloat remainder(prec);
  BigFloat prev(prec);
  int used = 0;
  for (int i = 1;; ++i) {
    BigFloat mag = magnitude(i);
    if ((i > 1 && mag > prev) || i > detail::kMaxEulerMaclaurinTerms) {
      remainder = std::move(mag);  // first omitted term
      break;
    }
    const Rational coef = detail::em_coefficient(s, i);
    BigFloat term = bf::mul(BigFloat(coef, prec), bf::inv_pow(a, static_cast<unsigned long>(s + 2L * i - 1), prec));
    sum = bf::add(sum, term);
    abs_sum = bf::add(abs_sum, bf::abs(term));
    used = i;
    if (mag <= tol) {
      BigFloat next = magnitude(i + 1);
      remainder = next <= mag ? std::move(mag) : std::move(next);
      break;
    }
    prev = std::move(mag);
  }
  remainder = bf::mul_d(remainder, 1.0 + 1e-12, MPFR_RNDU);
  BigFloat bound = bf::add(remainder, detail::rounding_slack(8.0 * used + 24, abs_sum, prec), MPFR_RNDU);
  return {std::move(sum), std::move(bound)};
}

/// sum_{n>N} n^{-s} <= N^{1-s}/(s-1).
inline BigFloat elementary_zeta_tail_bound(long s, long N, mpfr_prec_t prec) {
  return bf::div(bf::inv_pow(static_cast<unsigned long>(N), static_cast<unsigned long>(s - 1), prec, MPFR_RNDU),
                 BigFloat(s - 1, prec), MPFR_RNDU);
}

/**
 * Upper bound on sum_{n>N} H_n^{(p,r)} n^{-m}, from H_n^{(p,r)} <= C(n+r-1,r-1) Z_p(n)
 * with Z_p = p/(p-1) >= zeta(p) for p >= 2 and Z_1(n) = 1 + ln n. With e = m-r+1 >= 2:
 *   p = 1:  g N^{1-e} ((1+ln N)/(e-1) + 1/(e-1)^2)
 *   p >= 2: g Z_p N^{1-e}/(e-1)
 * where g = (1+(r-1)/N)^{r-1}/(r-1)! covers C(n+r-1,r-1) <= g n^{r-1} for n > N.
 */
inline BigFloat elementary_hyper_tail_bound(long p, int r, long m, long N, mpfr_prec_t prec) {
  const long e = m - r + 1;
  Rational growth = 1;
  for (int i = 1; i < r; ++i) growth *= Rational(N + r - 1, N) / i;
  growth.canonicalize();
  const BigFloat g(growth, prec, MPFR_RNDU);
  const BigFloat lead = bf::inv_pow(static_cast<unsigned long>(N), static_cast<unsigned long>(e - 1), prec, MPFR_RNDU);
  const BigFloat em1(e - 1, prec);
  BigFloat factor(prec);
  if (p == 1) {
    BigFloat log_n = bf::log(BigFloat(N, prec), MPFR_RNDU);
    factor = bf::div(bf::add(log_n, BigFloat(1, prec), MPFR_RNDU), em1, MPFR_RNDU);
    factor = bf::add(factor, bf::div(BigFloat(1, prec), bf::mul(em1, em1), MPFR_RNDU), MPFR_RNDU);
  } else {
    factor = bf::div(BigFloat(Rational(p, p - 1), prec, MPFR_RNDU), em1, MPFR_RNDU);
  }
  return bf::mul(bf::mul(g, lead, MPFR_RNDU), factor, MPFR_RNDU);
}

namespace detail {

struct HeadSums {
  ApproxValue total;                 // sum_{n<=N} H_n^{(p,r)} n^{-s}
  std::vector<ApproxValue> partial;  // H_N^{(p,k)}, k = 0..r
};

/// Running prefix sums: level k holds H_n^{(p,k)}, level 0 holds n^{-p}.
inline HeadSums head_sums(long p, int r, long s, long N, mpfr_prec_t prec) {
  std::vector<BigFloat> level(static_cast<std::size_t>(r + 1), BigFloat(prec));
  BigFloat total(prec);
  for (long n = 1; n <= N; ++n) {
    const auto un = static_cast<unsigned long>(n);
    level[0] = bf::inv_pow(un, static_cast<unsigned long>(p), prec);
    for (std::size_t k = 1; k < level.size(); ++k) level[k] = bf::add(level[k], level[k - 1]);
    total = bf::add(total, bf::mul(level.back(), bf::inv_pow(un, static_cast<unsigned long>(s), prec)));
  }
  const double Nd = static_cast<double>(N);
  HeadSums out{ApproxValue::zero(prec), {}};
  for (int k = 0; k <= r; ++k) {
    const BigFloat& v = level[static_cast<std::size_t>(k)];
    out.partial.push_back({v, rounding_slack(k * Nd + 4, v, prec)});
  }
  BigFloat bound = rounding_slack((r + 1) * Nd + 16, total, prec);
  out.total = {std::move(total), std::move(bound)};
  return out;
}

/**
 * sum_n H_n^{(p,r)} n^{-s} with N head terms and the exact Hurwitz-tail
 * expansion described at the top of this file.
 */
class HyperDirichletSum {
 public:
  HyperDirichletSum(long p, int r, long s, long N, mpfr_prec_t prec, BigFloat node_tol)
      : p_(p), r_(r), s_(s), N_(N), prec_(prec), tol_(std::move(node_tol)) {}

  ApproxValue evaluate() {
    sum_head();
    return approx_add(head_, tail(r_, s_));
  }

  const ApproxValue& head() const { return head_; }

 private:
  void sum_head() {
    HeadSums sums = head_sums(p_, r_, s_, N_, prec_);
    head_ = std::move(sums.total);
    partial_ = std::move(sums.partial);
  }

  /// Upper bound on sum_{n>N} H_n^{(p,j)} n^{-sigma}; see the file comment.
  BigFloat crude_upper(int j, long sigma) const {
    const auto uN = static_cast<unsigned long>(N_);
    if (j == 0) {
      const long e = p_ + sigma - 1;
      return bf::div(bf::inv_pow(uN, static_cast<unsigned long>(e), prec_, MPFR_RNDU), BigFloat(e, prec_), MPFR_RNDU);
    }
    if (sigma <= j) throw ConsistencyError("crude_upper: divergent tail requested");
    Integer factorial = 1;
    for (int t = 2; t < j; ++t) factorial *= t;
    const BigFloat coef(Rational(ipow(Integer(2), static_cast<unsigned long>(j)), factorial), prec_, MPFR_RNDU);
    BigFloat root(prec_);
    mpfr_sqrt_ui(root.get(), uN, MPFR_RNDU);
    BigFloat v = bf::mul(coef, bf::mul(root, bf::inv_pow(uN, static_cast<unsigned long>(sigma - j), prec_, MPFR_RNDU), MPFR_RNDU), MPFR_RNDU);
    BigFloat denom(prec_);
    mpfr_set_d(denom.get(), static_cast<double>(sigma - j) - 0.5, MPFR_RNDN);  // exact
    return bf::div(v, denom, MPFR_RNDU);
  }

  /// sum_{n>N} H_n^{(p,k)} n^{-sigma}.
  const ApproxValue& tail(int k, long sigma) {
    const auto key = std::make_pair(k, sigma);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto a = static_cast<unsigned long>(N_ + 1);
    ApproxValue result = ApproxValue::zero(prec_);
    if (k == 0) {
      result = hurwitz_tail(p_ + sigma, a, tol_, prec_);
    } else {
      if (sigma < k + 1) throw ConsistencyError("tail: divergent level requested");
      // The Hurwitz tail is multiplied by H_N^{(p,k)}, so certify it relative to that factor.
      const ApproxValue& prefix = partial_[static_cast<std::size_t>(k)];
      const BigFloat scaled_tol = prefix.value > BigFloat(1, prec_) ? bf::div(tol_, prefix.value, MPFR_RNDD) : tol_;
      result = approx_mul(prefix, hurwitz_tail(sigma, a, scaled_tol, prec_));
      result = approx_add(result, approx_scale(Rational(1, sigma - 1), tail(k - 1, sigma - 1)));
      result = approx_add(result, approx_scale(Rational(1, 2), tail(k - 1, sigma)));

      // Add Euler-Maclaurin corrections i = 1, 2, ... The remainder after the
      // first i-1 of them is at most rem_i = |c_i| U(k-1, sigma+2i-1). Once
      // rem_i <= tol, correction i is added as well and rem_i still bounds the
      // remainder, provided |c_{i+1}| n^{-2} <= |c_i| for every n > N.
      const Integer a_squared = Integer(N_ + 1) * Integer(N_ + 1);
      BigFloat remainder(prec_);
      BigFloat prev(prec_);
      for (int i = 1;; ++i) {
        const Rational coef = em_coefficient(sigma, i);
        const long exponent = sigma + 2L * i - 1;
        BigFloat rem = bf::mul(BigFloat(abs(coef), prec_, MPFR_RNDU), crude_upper(k - 1, exponent), MPFR_RNDU);
        if ((i > 1 && rem > prev) || i > kMaxEulerMaclaurinTerms) {
          remainder = std::move(rem);
          break;
        }
        result = approx_add(result, approx_scale(coef, tail(k - 1, exponent)));
        if (rem <= tol_) {
          const Rational next = em_coefficient(sigma, i + 1);
          if (abs(next) <= abs(coef) * Rational(a_squared))
            remainder = std::move(rem);
          else
            remainder = bf::mul(BigFloat(abs(next), prec_, MPFR_RNDU), crude_upper(k - 1, exponent + 2), MPFR_RNDU);
          break;
        }
        prev = std::move(rem);
      }
      result.error_bound = bf::add(result.error_bound, remainder, MPFR_RNDU);
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

  long p_;
  int r_;
  long s_;
  long N_;
  mpfr_prec_t prec_;
  BigFloat tol_;
  ApproxValue head_ = ApproxValue::zero(64);
  std::vector<ApproxValue> partial_;  // H_N^{(p,k)}, k = 0..r
  std::map<std::pair<int, long>, ApproxValue> memo_;
};

/// sum_{n<=N} H_n^{(p,r)} n^{-m} plus the elementary tail bound.
inline ApproxValue elementary_hyper_sum(long p, int r, long m, int digits, const NumericConfig& cfg) {
  const mpfr_prec_t prec = working_precision(digits, cfg);
  const BigFloat target = bf::mul_d(bf::pow10(-digits, prec), 0.5);
  long N = 1024;
  while (elementary_hyper_tail_bound(p, r, m, N, prec) > target) {
    if (N >= cfg.max_terms)
      throw IterationCapError("elementary tail bound cannot reach 1e-" + std::to_string(digits) + " within " +
                              std::to_string(cfg.max_terms) + " terms");
    N = std::min(N * 2, cfg.max_terms);
  }
  ApproxValue out = head_sums(p, r, m, N, prec).total;
  out.error_bound = bf::add(out.error_bound, elementary_hyper_tail_bound(p, r, m, N, prec), MPFR_RNDU);
  return out;
}

/// sum_n H_n^{(p,r)} n^{-s}, certified to 10^{-digits}.
inline ApproxValue hyper_dirichlet(long p, int r, long s, int digits, const NumericConfig& cfg) {
  if (p < 1 || r < 1) throw DomainError("p and r must be >= 1");
  if (s < r + 1) throw HypothesisError("sum of H_n^{(p,r)}/n^s diverges unless s >= r+1");
  if (digits < 1) throw DomainError("digits must be >= 1");
  if (cfg.tail == TailMethod::elementary) return elementary_hyper_sum(p, r, s, digits, cfg);

  const mpfr_prec_t prec = working_precision(digits, cfg);
  const BigFloat target = bf::pow10(-digits, prec);
  const BigFloat node_tol = bf::pow10(-(digits + 4), prec);
  long N = std::max<long>(2L * r + 2, 16 + 4L * digits);
  for (;;) {
    if (N > cfg.max_terms)
      throw IterationCapError("cannot certify 1e-" + std::to_string(digits) + " within " +
                              std::to_string(cfg.max_terms) + " terms");
    HyperDirichletSum engine(p, r, s, N, prec, node_tol);
    ApproxValue result = engine.evaluate();
    if (result.error_bound <= target) return result;
    N *= 2;
  }
}

}  // namespace detail

/// zeta(s) = sum_{n>=1} n^{-s}, certified to 10^{-digits}.
inline ApproxValue zeta_value(long s, int digits, const NumericConfig& cfg = {}) {
  if (s < 2) throw DomainError("zeta_value: s must be >= 2 (got " + std::to_string(s) + ")");
  if (digits < 1) throw DomainError("digits must be >= 1");
  const mpfr_prec_t prec = working_precision(digits, cfg);
  const BigFloat target = bf::pow10(-digits, prec);

  auto head_sum = [&](long count) {
    BigFloat total(prec);
    for (long n = count; n >= 1; --n) total = bf::add(total, bf::inv_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(s), prec));
    BigFloat bound = detail::rounding_slack(static_cast<double>(count) + 4, total, prec);
    return ApproxValue{std::move(total), std::move(bound)};
  };

  if (cfg.tail == TailMethod::elementary) {
    long N = 16;
    const BigFloat half = bf::mul_d(target, 0.5);
    while (elementary_zeta_tail_bound(s, N, prec) > half) {
      if (N >= cfg.max_terms)
        throw IterationCapError("zeta_value: elementary bound cannot reach 1e-" + std::to_string(digits) +
                                " within " + std::to_string(cfg.max_terms) + " terms");
      N = std::min(N * 2, cfg.max_terms);
    }
    ApproxValue out = head_sum(N);
    out.error_bound = bf::add(out.error_bound, elementary_zeta_tail_bound(s, N, prec), MPFR_RNDU);
    return out;
  }

  const BigFloat tol = bf::pow10(-(digits + 4), prec);
  for (long N = 16 + digits;; N *= 2) {
    if (N > cfg.max_terms)
      throw IterationCapError("zeta_value: cannot certify within " + std::to_string(cfg.max_terms) + " terms");
    ApproxValue out =
        detail::approx_add(head_sum(N - 1), hurwitz_tail(s, static_cast<unsigned long>(N), tol, prec));
    if (out.error_bound <= target) return out;
  }
}

/// S_{p,q} = sum_n H_n^{(p)} / n^q for p >= 1, q >= 2.
inline ApproxValue euler_sum_value(long p, long q, int digits, const NumericConfig& cfg = {}) {
  if (p < 1) throw DomainError("euler_sum_value: p must be >= 1");
  if (q < 2) throw DomainError("euler_sum_value: q must be >= 2");
  return detail::hyper_dirichlet(p, 1, q, digits, cfg);
}

/// zeta_{H^{(p,r)}}(m) = sum_n H_n^{(p,r)} / n^m, summed from the definition.
inline ApproxValue zeta_H_direct(long p, int r, long m, int digits, const NumericConfig& cfg = {}) {
  if (p < 1 || r < 1) throw DomainError("zeta_H_direct: p and r must be >= 1");
  if (m < r + 1)
    throw HypothesisError("zeta_H_direct requires m >= r+1 (got r=" + std::to_string(r) + ", m=" +
                          std::to_string(m) + ")");
  return detail::hyper_dirichlet(p, r, m, digits, cfg);
}

/// Numeric value of a normalized expression: every S term needs p >= 1.
inline ApproxValue evaluate_expr(const EulerSumExpr& e, int digits, const NumericConfig& cfg = {}) {
  for (const auto& [idx, coef] : e.euler_terms())
    if (idx.p < 1)
      throw StructuralError("evaluate_expr: S(" + std::to_string(idx.p) + "," + std::to_string(idx.q) +
                            ") must be normalized first");

  // Spread the error budget: each component is certified to 10^{-(digits+extra)}.
  double weight = 1;
  for (const auto& [idx, coef] : e.euler_terms()) weight += std::abs(coef.get_d());
  for (const auto& [args, coef] : e.zeta().terms()) weight += 4 * std::abs(coef.get_d());
  const int extra = static_cast<int>(std::ceil(std::log10(weight))) + 1;
  const int comp_digits = digits + extra;
  const mpfr_prec_t prec = working_precision(comp_digits, cfg);

  std::map<int, ApproxValue> zetas;
  auto zeta_of = [&](int s) -> const ApproxValue& {
    auto it = zetas.find(s);
    if (it == zetas.end()) it = zetas.emplace(s, zeta_value(s, comp_digits, cfg)).first;
    return it->second;
  };

  ApproxValue total = ApproxValue::zero(prec);
  for (const auto& [idx, coef] : e.euler_terms())
    total = detail::approx_add(total, detail::approx_scale(coef, euler_sum_value(idx.p, idx.q, comp_digits, cfg)));
  for (const auto& [args, coef] : e.zeta().terms()) {
    ApproxValue monomial = zeta_of(args[0]);
    if (args.size() == 2) monomial = detail::approx_mul(monomial, zeta_of(args[1]));
    total = detail::approx_add(total, detail::approx_scale(coef, monomial));
  }
  if (e.zeta().constant() != 0) total = detail::approx_add(total, detail::approx_exact(e.zeta().constant(), prec));
  return total;
}

struct VerifyReport {
  int p;
  int r;
  int m;
  int digits;
  EulerSumExpr expression;  // normalized decomposition that was evaluated
  ApproxValue direct;
  ApproxValue decomposed;
  BigFloat difference;  // |direct - decomposed|, rounded up
  bool pass;
};

/// Sums zeta_{H^{(p,r)}}(m) from the definition and from its decomposition; PASS iff the intervals overlap.
inline VerifyReport verify(int p, int r, int m, int digits, const NumericConfig& cfg = {}) {
  require_decomposable(p, r, m);
  EulerSumExpr expr = decompose_normalized(p, r, m, false);
  ApproxValue direct = zeta_H_direct(p, r, m, digits, cfg);
  ApproxValue decomposed = evaluate_expr(expr, digits, cfg);
  BigFloat diff = direct.value >= decomposed.value ? bf::sub(direct.value, decomposed.value, MPFR_RNDU)
                                                   : bf::sub(decomposed.value, direct.value, MPFR_RNDU);
  const BigFloat allowed = bf::add(direct.error_bound, decomposed.error_bound, MPFR_RNDD);
  const bool pass = diff <= allowed;
  return {p, r, m, digits, std::move(expr), std::move(direct), std::move(decomposed), std::move(diff), pass};
}

}  // namespace hypereuler
