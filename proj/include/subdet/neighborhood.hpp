#pragma once

// Enumeration of the r-neighborhood N_r(S): all index pairs T of the same
// order with d(S,T) <= radius, S itself included. Candidates are generated by
// choosing dr row indices to drop and dr to add (likewise dc for columns),
// over every split dr + dc <= radius, then sorted lexicographically so scan
// order, and therefore tie-breaking in the search, is deterministic.

#include <cstdint>
#include <functional>
#include <vector>

#include "subdet/index_pair.hpp"

namespace subdet {

namespace detail {

// Lexicographic enumeration of size-k subsets of {0,..,n-1} (as index lists
// into nothing in particular; the callback receives the combination).
inline void for_each_combination(int n, int k,
                                 const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// All ways to remove `d` elements of `base` and add `d` from its complement
// within {0,..,limit-1}; results are sorted index lists.
inline std::vector<std::vector<int>> swapped_sets(const std::vector<int>& base, int d, int limit) {
  std::vector<int> complement;
  for (int x = 0; x < limit; ++x)
    if (!contains(base, x)) complement.push_back(x);
  std::vector<std::vector<int>> out;
  for_each_combination(static_cast<int>(base.size()), d, [&](const std::vector<int>& drop) {
    for_each_combination(static_cast<int>(complement.size()), d, [&](const std::vector<int>& add) {
      std::vector<int> kept;
      kept.reserve(base.size());
      std::size_t di = 0;
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (di < drop.size() && static_cast<int>(i) == drop[di])
          ++di;
        else
          kept.push_back(base[i]);
      }
      for (int a : add) kept.push_back(complement[static_cast<std::size_t>(a)]);
      std::sort(kept.begin(), kept.end());
      out.push_back(std::move(kept));
    });
  });
  return out;
}

inline unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  return r;
}

}  // namespace detail

inline std::vector<IndexPair> neighborhood(const IndexPair& s, int radius, int m, int n) {
  if (radius < 0) throw std::invalid_argument("neighborhood: radius must be nonnegative");
  validate_index_pair(s, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  const int k = static_cast<int>(s.k());
  std::vector<IndexPair> out;
  for (int dr = 0; dr <= radius && dr <= k; ++dr) {
    const auto row_sets = detail::swapped_sets(s.rows, dr, m);
    if (row_sets.empty()) continue;
    for (int dc = 0; dc + dr <= radius && dc <= k; ++dc) {
      const auto col_sets = detail::swapped_sets(s.cols, dc, n);
      for (const auto& r : row_sets)
        for (const auto& c : col_sets) out.push_back(IndexPair{r, c});
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Closed-form |N_radius(S)| = sum over dr+dc<=radius of
// C(k,dr) C(m-k,dr) C(k,dc) C(n-k,dc).
inline unsigned long long neighborhood_size(int k, int radius, int m, int n) {
  unsigned long long total = 0;
  for (int dr = 0; dr <= radius; ++dr)
    for (int dc = 0; dr + dc <= radius; ++dc)
      total += detail::binomial(k, dr) * detail::binomial(m - k, dr) * detail::binomial(k, dc) *
               detail::binomial(n - k, dc);
  return total;
}

}  // namespace subdet
