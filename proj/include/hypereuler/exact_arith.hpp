#pragma once

/**
 * @file exact_arith.hpp
 * @brief Binomials, Bernoulli numbers and Faulhaber power sums, all exact.
 *
 * Bernoulli numbers use the "plus" convention B_1^+ = +1/2, i.e. the
 * coefficients of t/(1 - e^{-t}). They are generated by the recurrence
 *
 *     sum_{j=0}^{k} C(k+1, j) B_j^+ = k + 1        (k >= 0)
 *
 * which gives B_0^+ = 1, B_1^+ = 1/2, B_2^+ = 1/6, B_3^+ = 0, B_4^+ = -1/30.
 * Most other software uses B_1 = -1/2; the two conventions differ only at
 * index 1.
 */

#include <cstddef>
#include <mutex>
#include <vector>

#include "hypereuler/errors.hpp"
#include "hypereuler/rational.hpp"

namespace hypereuler {

/// C(n, k); zero when k < 0 or k > n.
inline Integer binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/**
 * Append-only memo of B_n^+. Entries are written once, in index order, and
 * never modified; readers copy values out under the lock.
 */
class BernoulliTable {
 public:
  Rational get(std::size_t n) {
    std::lock_guard lock(mutex_);
    extend_to(n);
    return values_[n];
  }

  std::vector<Rational> prefix(std::size_t n_max) {
    std::lock_guard lock(mutex_);
    extend_to(n_max);
    return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n_max + 1)};
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return values_.size();
  }

 private:
  void extend_to(std::size_t n) {
    while (values_.size() <= n) {
      const long k = static_cast<long>(values_.size());
      Rational acc = k + 1;
      for (long j = 0; j < k; ++j) acc -= Rational(binomial(k + 1, j)) * values_[static_cast<std::size_t>(j)];
      acc /= k + 1;  // C(k+1, k) = k+1
      acc.canonicalize();
      values_.push_back(std::move(acc));
    }
  }

  mutable std::mutex mutex_;
  std::vector<Rational> values_;
};

inline BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

inline Rational bernoulli_plus(long n) {
  if (n < 0) throw DomainError("bernoulli_plus: n must be non-negative");
  return bernoulli_table().get(static_cast<std::size_t>(n));
}

/// B_0^+ .. B_{n_max}^+.
inline std::vector<Rational> bernoulli_sequence(long n_max) {
  if (n_max < 0) throw DomainError("bernoulli_sequence: n_max must be non-negative");
  return bernoulli_table().prefix(static_cast<std::size_t>(n_max));
}

/**
 * Coefficients c_0..c_k with  sum_{l=1}^{n} l^k = sum_j c_j n^{k+1-j},
 * where c_j = C(k+1, j) B_j^+ / (k+1).
 */
inline std::vector<Rational> faulhaber_coeffs(long k) {
  if (k < 0) throw DomainError("faulhaber_coeffs: k must be non-negative");
  const auto bern = bernoulli_sequence(k);
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(k + 1));
  for (long j = 0; j <= k; ++j) {
    Rational c = Rational(binomial(k + 1, j)) * bern[static_cast<std::size_t>(j)] / (k + 1);
    c.canonicalize();
    coeffs.push_back(std::move(c));
  }
  return coeffs;
}

/// sum_{l=1}^{n} l^k through Faulhaber's formula; exact integer.
inline Integer power_sum(long n, long k) {
  if (n < 0 || k < 0) throw DomainError("power_sum: n and k must be non-negative");
  const auto coeffs = faulhaber_coeffs(k);
  Rational total = 0;
  for (long j = 0; j <= k; ++j)
    total += coeffs[static_cast<std::size_t>(j)] * Rational(ipow(Integer(n), static_cast<unsigned long>(k + 1 - j)));
  total.canonicalize();
  if (total.get_den() != 1)
    throw ConsistencyError("power_sum: Faulhaber evaluation is not an integer: " + to_string(total));
  return total.get_num();
}

}  // namespace hypereuler
