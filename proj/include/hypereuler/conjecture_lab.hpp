#pragma once

/**
 * @file conjecture_lab.hpp
 * @brief Exact checks of four observed patterns in the a(r,m,l) triangles.
 *
 *   1. a(r,m,l) = (-1)^{m+l} a(r,l,m)              (signed symmetry)
 *   2. sum_{l=0}^{n} a(r,n-l,l) = [n == 0]            (anti-diagonal sums)
 *   3. sum_l a(r,0,l) = r  and, for r >= 2, sum_l a(r,l,0) = 0
 *   4. sgn a(r,m,l) = (-1)^m, in particular a(r,m,l) != 0
 *
 * A violation is a finding about the coefficients, not a library error, so
 * the checks report rather than throw.
 */

#include <optional>
#include <string>
#include <vector>

#include "hypereuler/coeff_engine.hpp"
#include "hypereuler/errors.hpp"
#include "hypereuler/rational.hpp"

namespace hypereuler {

/// One failed comparison. For pattern 2, m is the diagonal index n and l = -1;
/// for pattern 3, m = 0 marks the row-0 sum and m = -1 the column-0 sum (l = -1).
struct Violation {
  int r;
  int m;
  int l;
  Rational lhs;
  Rational rhs;
};

struct ConjectureReport {
  int conjecture;
  std::vector<int> r_checked;
  std::vector<bool> r_pass;  // parallel to r_checked
  bool all_pass = true;
  std::vector<Violation> violations;
  /// Pattern 4 only: smallest |a(r,m,l)| for each checked r.
  std::vector<Rational> min_abs_entry;
};

namespace detail {

inline void require_r_max(int r_max) {
  if (r_max < 1) throw DomainError("r_max must be >= 1");
}

template <typename CheckOne>
ConjectureReport run_check(int conjecture, int r_min, int r_max, CheckOne&& check_one) {
  require_r_max(r_max);
  ConjectureReport report{conjecture, {}, {}, true, {}, {}};
  for (int r = r_min; r <= r_max; ++r) {
    const std::size_t before = report.violations.size();
    check_one(a_table(r), report);
    const bool ok = report.violations.size() == before;
    report.r_checked.push_back(r);
    report.r_pass.push_back(ok);
    report.all_pass = report.all_pass && ok;
  }
  return report;
}

}  // namespace detail

inline ConjectureReport check_symmetry(int r_max) {
  return detail::run_check(1, 1, r_max, [](const CoeffTable& t, ConjectureReport& rep) {
    const int r = t.r();
    for (int m = 0; m < r; ++m)
      for (int l = 0; l <= r - 1 - m; ++l) {
        if (!t.contains(l, m)) continue;
        const Rational rhs = sign_power(m + l) * t.a(l, m);
        if (t.a(m, l) != rhs) rep.violations.push_back({r, m, l, t.a(m, l), rhs});
      }
  });
}

inline ConjectureReport check_antidiagonal(int r_max) {
  return detail::run_check(2, 1, r_max, [](const CoeffTable& t, ConjectureReport& rep) {
    const int r = t.r();
    for (int n = 0; n < r; ++n) {
      Rational sum = 0;
      for (int l = 0; l <= n; ++l) sum += t.a(n - l, l);
      const Rational expected = n == 0 ? 1 : 0;
      if (sum != expected) rep.violations.push_back({r, n, -1, sum, expected});
    }
  });
}

inline ConjectureReport check_row_sums(int r_max) {
  return detail::run_check(3, 1, r_max, [](const CoeffTable& t, ConjectureReport& rep) {
    const int r = t.r();
    Rational row = 0;
    for (int l = 0; l < r; ++l) row += t.a(0, l);
    if (row != r) rep.violations.push_back({r, 0, -1, row, Rational(r)});
    if (r >= 2) {
      Rational column = 0;
      for (int l = 0; l < r; ++l) column += t.a(l, 0);
      if (column != 0) rep.violations.push_back({r, -1, -1, column, Rational(0)});
    }
  });
}

inline ConjectureReport check_signs(int r_max) {
  return detail::run_check(4, 1, r_max, [](const CoeffTable& t, ConjectureReport& rep) {
    const int r = t.r();
    std::optional<Rational> smallest;
    for (int m = 0; m < r; ++m)
      for (int l = 0; l <= r - 1 - m; ++l) {
        const Rational& v = t.a(m, l);
        const Rational mag = abs(v);
        if (!smallest || mag < *smallest) smallest = mag;
        if (sgn(v) != sign_power(m)) rep.violations.push_back({r, m, l, Rational(sgn(v)), Rational(sign_power(m))});
      }
    rep.min_abs_entry.push_back(*smallest);
  });
}

inline std::vector<ConjectureReport> check_all_conjectures(int r_max) {
  return {check_symmetry(r_max), check_antidiagonal(r_max), check_row_sums(r_max), check_signs(r_max)};
}

}  // namespace hypereuler
