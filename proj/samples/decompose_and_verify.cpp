// Decompose sum_n H_n^(p,r)/n^m into Euler sums and check it numerically.
#include <iostream>

#include "hypereuler/hypereuler.hpp"

int main() {
  using namespace hypereuler;
  std::cout << to_text(a_table(3));
  for (int m = 3; m <= 5; ++m) {
    const EulerSumExpr e = decompose_normalized(1, 2, m);
    const VerifyReport rep = verify(1, 2, m, 10);
    std::cout << "sum H_n^(1,2)/n^" << m << " = " << to_text(e) << "\n  " << rep.direct.value_string(14) << " +/- "
              << rep.direct.bound_string() << (rep.pass ? "  PASS" : "  FAIL") << "\n";
  }
}
