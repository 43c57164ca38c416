#pragma once

/**
 * @file hyperharmonic.hpp
 * @brief Generalized harmonic and hyperharmonic numbers, exact.
 *
 * H_n^{(p)}   = sum_{x=1}^{n} x^{-p}; for p <= 0 this is the power sum sum x^{-p}.
 * H_n^{(p,1)} = H_n^{(p)},  H_n^{(p,r)} = sum_{j=1}^{n} H_j^{(p,r-1)}.
 *
 * h_def iterates the definition; h_closed uses the a(r,m,j) expansion
 *
 *     H_n^{(p,r)} = sum_{m=0}^{r-1} sum_{j=0}^{r-1-m} a(r,m,j) n^j H_n^{(p-m)}.
 *
 * Index n = 0 is the empty sum and gives 0.
 */

#include <string>
#include <vector>

#include "hypereuler/coeff_engine.hpp"
#include "hypereuler/errors.hpp"
#include "hypereuler/exact_arith.hpp"
#include "hypereuler/rational.hpp"

namespace hypereuler {

inline Rational gen_harmonic(long p, long n) {
  if (n < 0) throw DomainError("gen_harmonic: n must be non-negative");
  if (p <= 0) return Rational(power_sum(n, -p));
  Rational total = 0;
  for (long x = 1; x <= n; ++x) total += Rational(1, ipow(Integer(x), static_cast<unsigned long>(p)));
  return total;
}

inline constexpr long kDefaultHyperharmonicCap = 100000;

/// H_n^{(p,r)} by iterated prefix sums of x^{-p}. O(r*n) exact additions.
inline Rational h_def(long p, int r, long n, long cap = kDefaultHyperharmonicCap) {
  if (p < 1 || r < 1 || n < 0) throw DomainError("h_def: requires p >= 1, r >= 1, n >= 0");
  if (static_cast<long>(r) * n > cap)
    throw ResourceGuardError("h_def: r*n = " + std::to_string(static_cast<long>(r) * n) + " exceeds cap " +
                             std::to_string(cap));
  std::vector<Rational> level(static_cast<std::size_t>(n + 1), Rational(0));
  for (long x = 1; x <= n; ++x)
    level[static_cast<std::size_t>(x)] = Rational(1, ipow(Integer(x), static_cast<unsigned long>(p)));
  for (int k = 1; k <= r; ++k)
    for (long x = 1; x <= n; ++x) level[static_cast<std::size_t>(x)] += level[static_cast<std::size_t>(x - 1)];
  return level[static_cast<std::size_t>(n)];
}

inline Rational h_closed(long p, int r, long n) {
  if (p < 1 || r < 1 || n < 0) throw DomainError("h_closed: requires p >= 1, r >= 1, n >= 0");
  const CoeffTable& table = a_table(r);
  const Integer N(n);
  Rational total = 0;
  for (int m = 0; m < r; ++m) {
    const Rational harmonic = gen_harmonic(p - m, n);
    for (int j = 0; j <= r - 1 - m; ++j)
      total += table.a(m, j) * Rational(ipow(N, static_cast<unsigned long>(j))) * harmonic;
  }
  return total;
}

/// h_n^{(r)} = C(n+r-1, r-1) (H_{n+r-1} - H_{r-1}).
inline Rational conway_guy(int r, long n) {
  if (r < 1 || n < 1) throw DomainError("conway_guy: requires r >= 1, n >= 1");
  return Rational(binomial(n + r - 1, r - 1)) * (gen_harmonic(1, n + r - 1) - gen_harmonic(1, r - 1));
}

}  // namespace hypereuler
