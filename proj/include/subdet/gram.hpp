#pragma once

// Crude starting pair: two greedy volume-sampling passes over Gram matrices.
// Rows first: on B = A Aᵀ repeatedly take the index whose Schur-complement
// pivot (the conditional squared volume gain) is largest; then columns, the
// same greedy on D = CᵀC for C = A restricted to the chosen rows.
//
// The zero certificate rides on positive semidefiniteness: when every
// remaining pivot of a PSD Schur complement is zero the complement itself is
// zero, so no further index can add volume and the selection is padded with
// the smallest unused indices. Consequently det(A_{S0}) = 0 iff rank(A) < k,
// which upgrades a zero starting determinant into a proof that maxdet_k = 0.

#include <vector>

#include "subdet/det.hpp"
#include "subdet/index_pair.hpp"
#include "subdet/matrix.hpp"

namespace subdet {

namespace detail {

template <Backend T>
bool pivot_positive(const T& v) {
  // Gram pivots are >= 0 in exact arithmetic; under float rounding a tiny
  // negative residue means the same thing as zero.
  return v > T(0);
}

// Greedy pivoted selection of k indices from the PSD matrix g (n x n).
// Ties break to the smallest index; exhausted pivots pad with smallest unused.
template <Backend T>
std::vector<int> greedy_psd_select(const Matrix<T>& g, int k) {
  const int n = static_cast<int>(g.rows());
  std::vector<T> w = g.entries();
  const auto at = [&](int i, int j) -> T& {
    return w[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  };
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> picked;
  for (int step = 0; step < k; ++step) {
    int best = -1;
    for (int j = 0; j < n; ++j)
      if (!used[static_cast<std::size_t>(j)] && (best < 0 || at(j, j) > at(best, best))) best = j;
    if (best < 0 || !pivot_positive(at(best, best))) break;  // rank exhausted
    used[static_cast<std::size_t>(best)] = true;
    picked.push_back(best);
    const T piv = at(best, best);
    for (int p = 0; p < n; ++p) {
      if (used[static_cast<std::size_t>(p)]) continue;
      const T fp = at(p, best) / piv;
      if (fp == T(0)) continue;
      for (int q = 0; q < n; ++q)
        if (!used[static_cast<std::size_t>(q)]) at(p, q) -= fp * at(best, q);
    }
  }
  for (int j = 0; j < n && static_cast<int>(picked.size()) < k; ++j)
    if (!used[static_cast<std::size_t>(j)]) {
      used[static_cast<std::size_t>(j)] = true;
      picked.push_back(j);
    }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace detail

// k = 0 yields the empty pair (determinant one by convention).
template <Backend T>
IndexPair crude_init(const Matrix<T>& a, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > std::min(a.rows(), a.cols()))
    throw std::invalid_argument("crude_init: k must satisfy 0 <= k <= min(m,n)");
  if (k == 0) return IndexPair{};
  const auto rows = detail::greedy_psd_select(multiply(a, transpose(a)), k);
  const auto c = submatrix(a, rows, [&] {
    std::vector<int> all(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) all[j] = static_cast<int>(j);
    return all;
  }());
  const auto cols = detail::greedy_psd_select(multiply(transpose(c), c), k);
  return IndexPair{rows, cols};
}

}  // namespace subdet
