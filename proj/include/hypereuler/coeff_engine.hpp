#pragma once

/**
 * @file coeff_engine.hpp
 * @brief The coefficient triangles a(r,m,j) = b(r,j,m) and the chain count T(r,n,t).
 *
 * T(r,n,t) counts chains t <= k_{r-1} <= ... <= k_1 <= n and is a polynomial
 *
 *     T(r,n,t) = sum_{m=0}^{r-1} sum_{j=0}^{r-1-m} a(r,m,j) n^j t^m.
 *
 * b(r,m,j) is the same family with the roles of n and t swapped: it is the
 * coefficient of t^j in B(r,t,m), the coefficient of n^m in T.
 *
 * Two independent recurrences build level r+1 from level r:
 *   - Route::b_recurrence works on b, splitting off the (t-1)^{1+j} terms of
 *     Faulhaber's formula coefficient by coefficient;
 *   - Route::a_recurrence works on a directly, with the D(r,m,j,y) kernel.
 * Both start from a(1,0,0) = 1 and must agree entry by entry.
 */

#include <algorithm>
#include <cstddef>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypereuler/errors.hpp"
#include "hypereuler/exact_arith.hpp"
#include "hypereuler/rational.hpp"

namespace hypereuler {

enum class Route { a_recurrence, b_recurrence };

inline const char* to_string(Route route) {
  return route == Route::a_recurrence ? "a" : "b";
}

/**
 * Triangle of exact coefficients for one r. Entry (m, j) exists iff
 * 0 <= m <= r-1 and 0 <= j <= r-1-m; anything else is absent, and asking for
 * it throws std::out_of_range.
 */
class CoeffTable {
 public:
  CoeffTable(int r, Route route) : r_(r), route_(route) {
    if (r < 1) throw DomainError("CoeffTable: r must be >= 1");
    rows_.resize(static_cast<std::size_t>(r));
    for (int m = 0; m < r; ++m) rows_[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(r - m), Rational(0));
  }

  int r() const { return r_; }
  Route route() const { return route_; }

  /// Number of stored entries, r(r+1)/2.
  std::size_t size() const { return static_cast<std::size_t>(r_) * static_cast<std::size_t>(r_ + 1) / 2; }

  bool contains(int m, int j) const { return m >= 0 && m < r_ && j >= 0 && j <= r_ - 1 - m; }

  /// a(r,m,j): coefficient of n^j t^m.
  const Rational& a(int m, int j) const { return rows_[index_check(m, j)][static_cast<std::size_t>(j)]; }
  Rational& a(int m, int j) { return rows_[index_check(m, j)][static_cast<std::size_t>(j)]; }

  /// b(r,m,j) = a(r,j,m): coefficient of n^m t^j.
  const Rational& b(int m, int j) const { return a(j, m); }
  Rational& b(int m, int j) { return a(j, m); }

  /// Row m of the a-orientation: a(r,m,0..r-1-m).
  const std::vector<Rational>& row(int m) const { return rows_.at(static_cast<std::size_t>(m)); }

  /// Entry-wise equality, ignoring which route produced the tables.
  bool same_entries(const CoeffTable& other) const { return r_ == other.r_ && rows_ == other.rows_; }

 private:
  std::size_t index_check(int m, int j) const {
    if (!contains(m, j))
      throw std::out_of_range("coefficient (" + std::to_string(m) + "," + std::to_string(j) +
                              ") is outside the r=" + std::to_string(r_) + " triangle");
    return static_cast<std::size_t>(m);
  }

  int r_;
  Route route_;
  std::vector<std::vector<Rational>> rows_;
};

namespace detail {

/// C(n,k) B_{k'}^+ style products show up everywhere; keep them as Rationals.
inline Rational binom_q(long n, long k) { return Rational(binomial(n, k)); }

/// Level r+1 from level r using the recurrence on a(r,m,l) directly.
inline CoeffTable next_level_a(const CoeffTable& prev) {
  const int r = prev.r();
  const auto bern = bernoulli_sequence(r + 1);
  auto B = [&](long i) -> const Rational& { return bern[static_cast<std::size_t>(i)]; };
  CoeffTable next(r + 1, Route::a_recurrence);

  {
    Rational acc = 0;
    for (int m = 0; m <= r - 1; ++m) acc -= prev.a(m, r - m - 1) / Rational(r - m);
    next.a(r, 0) = acc;
  }

  for (int m = 0; m <= r - 1; ++m) {
    for (int l = 1; l <= r - m; ++l) {
      Rational acc = 0;
      for (int j = l - 1; j <= r - 1 - m; ++j)
        acc += prev.a(m, j) / Rational(j + 1) * binom_q(j + 1, j - l + 1) * B(j - l + 1);
      next.a(m, l) = acc;
    }
  }

  // D(r,m,j,y) = sum_{l=max(0,m-y-1)}^{j} C(j+1,j-l) B_{j-l} C(l+1,m-y) (-1)^{1+l-m+y} / (j+1)
  auto kernel = [&](int m, int j, int y) {
    Rational acc = 0;
    for (int l = std::max(0, m - y - 1); l <= j; ++l) {
      Rational term = binom_q(j + 1, j - l) * B(j - l) * binom_q(l + 1, m - y);
      if (sign_power(1 + l - m + y) < 0) term = -term;
      acc += term;
    }
    return Rational(acc / (j + 1));
  };

  for (int m = 0; m <= r - 1; ++m) {
    Rational acc = 0;
    for (int y = 0; y <= m; ++y)
      for (int j = std::max(0, m - y - 1); j <= r - 1 - y; ++j) acc += prev.a(y, j) * kernel(m, j, y);
    next.a(m, 0) = -acc;
  }
  return next;
}

/// Level r+1 from level r using the recurrence on b(r,m,j).
inline CoeffTable next_level_b(const CoeffTable& prev) {
  const int r = prev.r();
  const auto bern = bernoulli_sequence(r + 1);
  auto B = [&](long i) -> const Rational& { return bern[static_cast<std::size_t>(i)]; };
  CoeffTable next(r + 1, Route::b_recurrence);

  for (int l = 1; l <= r; ++l) {
    for (int j = 0; j <= r - l; ++j) {
      Rational acc = 0;
      for (int m = l - 1; m <= r - 1 - j; ++m)
        acc += prev.b(m, j) / Rational(m + 1) * binom_q(m + 1, m - l + 1) * B(m - l + 1);
      next.b(l, j) = acc;
    }
  }

  // C(r,p,j,l) = C(1+j,l) (-1)^{1+j-l} sum_{m=j}^{r-1-p+l} b(r,m,p-l) C(m+1,m-j) B_{m-j} / (m+1)
  auto inner = [&](int p, int j, int l) {
    Rational acc = 0;
    for (int m = j; m <= r - 1 - p + l; ++m)
      acc += prev.b(m, p - l) / Rational(m + 1) * binom_q(m + 1, m - j) * B(m - j);
    acc *= binom_q(1 + j, l);
    if (sign_power(1 + j - l) < 0) acc = -acc;
    return acc;
  };

  for (int p = 0; p <= r; ++p) {
    Rational acc = 0;
    for (int j = 0; j <= r - 1; ++j)
      for (int l = std::max(0, p + 1 + j - r); l <= std::min(1 + j, p); ++l) acc += inner(p, j, l);
    next.b(0, p) = -acc;
  }
  return next;
}

/// Tables for r = 1, 2, ... built in order and kept forever.
class TableCache {
 public:
  explicit TableCache(Route route) : route_(route) {}

  const CoeffTable& get(int r) {
    if (r < 1) throw DomainError("coefficient table: r must be >= 1");
    std::lock_guard lock(mutex_);
    if (levels_.empty()) {
      CoeffTable base(1, route_);
      base.a(0, 0) = 1;
      levels_.push_back(std::move(base));
    }
    while (static_cast<int>(levels_.size()) < r) {
      const CoeffTable& top = levels_.back();
      levels_.push_back(route_ == Route::a_recurrence ? next_level_a(top) : next_level_b(top));
    }
    // deque::push_back never moves existing elements, so this reference stays valid.
    return levels_[static_cast<std::size_t>(r - 1)];
  }

 private:
  Route route_;
  std::mutex mutex_;
  std::deque<CoeffTable> levels_;
};

inline TableCache& table_cache(Route route) {
  static TableCache a_cache(Route::a_recurrence);
  static TableCache b_cache(Route::b_recurrence);
  return route == Route::a_recurrence ? a_cache : b_cache;
}

}  // namespace detail

/// a(r,.,.) from the direct a-recurrence.
inline const CoeffTable& a_table(int r) { return detail::table_cache(Route::a_recurrence).get(r); }

/// a(r,.,.) built through the b-recurrence (stored in a-orientation; read b via CoeffTable::b).
inline const CoeffTable& b_table(int r) { return detail::table_cache(Route::b_recurrence).get(r); }

inline const CoeffTable& coeff_table(int r, Route route) { return detail::table_cache(route).get(r); }

/// Coefficients of B(r,t,m) = sum_j b(r,m,j) t^j, in increasing powers of t.
inline std::vector<Rational> b_poly(int r, int m) {
  const CoeffTable& table = a_table(r);
  if (m < 0 || m >= r) throw std::out_of_range("b_poly: m outside 0..r-1");
  std::vector<Rational> poly;
  for (int j = 0; j <= r - 1 - m; ++j) poly.push_back(table.b(m, j));
  return poly;
}

/// Highest power of t with a non-zero coefficient in B(r,t,m), or -1 if B is zero.
inline int t_degree(const CoeffTable& table, int m) {
  for (int j = table.r() - 1 - m; j >= 0; --j)
    if (table.b(m, j) != 0) return j;
  return -1;
}

/// T(r,n,t) from the polynomial form. Also defined for t > n, where it is only a polynomial value.
inline Rational eval_T(int r, long n, long t) {
  if (r < 1 || n < 1 || t < 1) throw DomainError("eval_T: r, n, t must be >= 1");
  const CoeffTable& table = a_table(r);
  Rational total = 0;
  const Integer N(n), Tt(t);
  for (int m = 0; m < r; ++m)
    for (int j = 0; j <= r - 1 - m; ++j)
      total += table.a(m, j) * Rational(ipow(N, static_cast<unsigned long>(j)) * ipow(Tt, static_cast<unsigned long>(m)));
  return total;
}

inline constexpr long kDefaultOracleCap = 128;

/// Literal nested-loop count of chains t <= k_{r-1} <= ... <= k_1 <= n. Small instances only.
inline Integer t_oracle(int r, long n, long t, long cap = kDefaultOracleCap) {
  if (r < 1 || n < 1 || t < 1) throw DomainError("t_oracle: r, n, t must be >= 1");
  if (static_cast<long>(r) * n > cap)
    throw ResourceGuardError("t_oracle: r*n = " + std::to_string(static_cast<long>(r) * n) + " exceeds cap " +
                             std::to_string(cap));
  // count(depth, upper): chains of `depth` more indices, each in [t, previous].
  auto count = [t](auto&& self, int depth, long upper) -> Integer {
    if (depth == 0) return 1;
    Integer total = 0;
    for (long k = t; k <= upper; ++k) total += self(self, depth - 1, k);
    return total;
  };
  return count(count, r - 1, n);
}

}  // namespace hypereuler
