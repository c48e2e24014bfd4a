#pragma once

// Cauchy-Binet check, exact backend only: for A (m x n) and B (n x m) with
// m <= n,  det(AB) = sum over all m-subsets S of the columns of A of
// det(A_{[m],S}) * det(B_{S,[m]}). Both sides are expanded independently, so
// a zero residual certifies the determinant and enumeration machinery against
// an external identity rather than against itself.

#include <cstddef>
#include <vector>

#include "subdet/det.hpp"
#include "subdet/matrix.hpp"
#include "subdet/neighborhood.hpp"

namespace subdet {

struct CauchyBinetReport {
  Rational lhs;  // det(AB)
  Rational rhs;  // expansion over column subsets
  Rational residual;
  bool holds = false;
  unsigned long long subsets = 0;
};

inline CauchyBinetReport cauchy_binet_check(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw std::invalid_argument("cauchy_binet_check: need A m x n and B n x m");
  if (a.rows() > a.cols())
    throw std::invalid_argument("cauchy_binet_check: requires m <= n");
  const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());

  CauchyBinetReport rep;
  rep.lhs = det(multiply(a, b)).value();
  rep.rhs = Rational(0);
  std::vector<int> all_rows(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) all_rows[static_cast<std::size_t>(i)] = i;
  detail::for_each_combination(n, m, [&](const std::vector<int>& cols) {
    rep.rhs += det(submatrix(a, all_rows, cols)).value() *
               det(submatrix(b, cols, all_rows)).value();
    ++rep.subsets;
  });
  rep.residual = rep.lhs - rep.rhs;
  rep.holds = rep.residual == 0;
  return rep;
}

}  // namespace subdet
