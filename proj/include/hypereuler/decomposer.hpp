#pragma once

/**
 * @file decomposer.hpp
 * @brief Euler sums of generalized hyperharmonic numbers as combinations of S_{p,q}.
 *
 * For p, r >= 1 and m >= r+1,
 *
 *     zeta_{H^{(p,r)}}(m) = sum_{l=0}^{r-1} sum_{j=0}^{r-1-l} a(r,l,j) S_{p-l, m-j}.
 *
 * decompose() returns this double sum verbatim. decompose_normalized()
 * additionally rewrites the p-l <= 0 terms as zeta values and, on request,
 * the S_{1,q} terms through Euler's formula.
 */

#include <string>
#include <vector>

#include "hypereuler/coeff_engine.hpp"
#include "hypereuler/errors.hpp"
#include "hypereuler/eulersum_algebra.hpp"

namespace hypereuler {

struct EulerTerm {
  Rational coef;
  int p;
  int q;
};

inline void require_decomposable(long p, int r, long m) {
  if (p < 1 || r < 1 || m < 1) throw DomainError("p, r, m must all be >= 1");
  if (m < r + 1)
    throw HypothesisError("the decomposition requires m >= r+1 (got r=" + std::to_string(r) + ", m=" +
                          std::to_string(m) + ")");
}

/// The r(r+1)/2 raw terms a(r,l,j) S_{p-l,m-j}, in (l, j) order, before any merging.
inline std::vector<EulerTerm> decompose_terms(int p, int r, int m) {
  require_decomposable(p, r, m);
  const CoeffTable& table = a_table(r);
  std::vector<EulerTerm> terms;
  terms.reserve(table.size());
  for (int l = 0; l < r; ++l) {
    for (int j = 0; j <= r - 1 - l; ++j) {
      const int order = p - l;
      const int weight = m - j;
      // Every S term converges (weight >= l+2), and every non-positive order
      // expands into zeta values with arguments >= p+1.
      if (order >= 1 && weight < l + 2)
        throw ConsistencyError("decompose: emitted S(" + std::to_string(order) + "," + std::to_string(weight) +
                               ") violates weight >= l+2");
      if (order <= 0 && weight + order - 1 < p + 1)
        throw ConsistencyError("decompose: S(" + std::to_string(order) + "," + std::to_string(weight) +
                               ") would expand below zeta(p+1)");
      terms.push_back({table.a(l, j), order, weight});
    }
  }
  return terms;
}

inline EulerSumExpr decompose(int p, int r, int m) {
  EulerSumExpr out;
  for (const auto& term : decompose_terms(p, r, m)) out.add_euler(term.p, term.q, term.coef);
  return out;
}

inline EulerSumExpr decompose_normalized(int p, int r, int m, bool reduce_s1 = false) {
  EulerSumExpr out = normalize_nonpositive(decompose(p, r, m));
  return reduce_s1 ? reduce_s1_terms(out) : out;
}

}  // namespace hypereuler
