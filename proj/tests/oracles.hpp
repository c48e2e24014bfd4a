#pragma once

// Slow reference implementations the tests trust instead of the library:
// cofactor-expansion determinants, a distance-filter neighborhood, and a
// subset-filter enumeration of the exchange families. None of them share
// code with the elimination/iterator machinery under test.

#include <vector>

#include <subdet/subdet.hpp>

namespace subdet::testing {

// Laplace expansion along the first row. Exponential, fine for order <= 7.
template <Backend T>
T laplace_det(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("laplace_det: square only");
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  T acc(0);
  std::vector<int> sub_rows;
  for (std::size_t i = 1; i < n; ++i) sub_rows.push_back(static_cast<int>(i));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> sub_cols;
    for (std::size_t l = 0; l < n; ++l)
      if (l != j) sub_cols.push_back(static_cast<int>(l));
    const T minor = laplace_det(submatrix(a, sub_rows, sub_cols));
    const T term = a(0, j) * minor;
    if (j % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

template <Backend T>
T laplace_det_sub(const Matrix<T>& a, const IndexPair& s) {
  if (s.k() == 0) return T(1);
  return laplace_det(submatrix(a, s.rows, s.cols));
}

// All pairs within the exchange distance, found by filtering the full grid.
inline std::vector<IndexPair> brute_neighborhood(const IndexPair& s, int radius, int m, int n) {
  const int k = static_cast<int>(s.k());
  std::vector<IndexPair> out;
  detail::for_each_combination(m, k, [&](const std::vector<int>& rows) {
    detail::for_each_combination(n, k, [&](const std::vector<int>& cols) {
      const IndexPair t{rows, cols};
      if (distance(s, t) <= radius) out.push_back(t);
    });
  });
  return out;
}

// Exchange sets from the definition: a subset of the row symmetric difference
// balanced between the two sides, ditto for columns, whose size signature
// (|U_r ∩ S_r \ T_r|, |U_c ∩ S_c \ T_c|) is one of (1,1), (1,0), (0,1),
// (2,0), (0,2).
inline std::vector<Exchange> brute_exchanges(const IndexPair& s, const IndexPair& t) {
  const std::vector<int> rs = detail::set_minus(s.rows, t.rows);
  const std::vector<int> rt = detail::set_minus(t.rows, s.rows);
  const std::vector<int> cs = detail::set_minus(s.cols, t.cols);
  const std::vector<int> ct = detail::set_minus(t.cols, s.cols);

  const auto balanced_subsets = [](const std::vector<int>& side_s, const std::vector<int>& side_t,
                                   int per_side) {
    std::vector<std::vector<int>> out;
    detail::for_each_combination(static_cast<int>(side_s.size()), per_side,
                                 [&](const std::vector<int>& is) {
      detail::for_each_combination(static_cast<int>(side_t.size()), per_side,
                                   [&](const std::vector<int>& it) {
        std::vector<int> u;
        for (int i : is) u.push_back(side_s[static_cast<std::size_t>(i)]);
        for (int i : it) u.push_back(side_t[static_cast<std::size_t>(i)]);
        std::sort(u.begin(), u.end());
        out.push_back(std::move(u));
      });
    });
    return out;
  };

  std::vector<Exchange> out;
  const auto add = [&](int rows_per_side, int cols_per_side) {
    for (const auto& ur : balanced_subsets(rs, rt, rows_per_side))
      for (const auto& uc : balanced_subsets(cs, ct, cols_per_side))
        out.push_back(Exchange{ur, uc});
  };
  add(1, 1);  // one row and one column from each side
  add(1, 0);  // rows only
  add(0, 1);  // columns only
  add(2, 0);  // two rows from each side
  add(0, 2);  // two columns from each side
  return out;
}

}  // namespace subdet::testing
