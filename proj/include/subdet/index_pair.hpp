#pragma once

// An index pair S = (S_r, S_c) selects a k x k submatrix: k rows and k
// columns, each stored as a strictly increasing list. Indices are 0-based
// everywhere inside the library; serialization (files, JSON, CLI) shifts to
// 1-based at the boundary.
//
// The distance d(S,T) = |S_r Δ T_r|/2 + |S_c Δ T_c|/2 counts how many row and
// column indices must be exchanged to turn S into T; it is a metric on the
// set of index pairs of a common order k.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace subdet {

struct IndexPair {
  std::vector<int> rows;
  std::vector<int> cols;

  std::size_t k() const { return rows.size(); }

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

namespace detail {

inline bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

// Symmetric difference of two sorted sets.
inline std::vector<int> symdiff(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> set_and(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace detail

// Sorts the lists and validates that each is duplicate-free and of equal size.
inline IndexPair make_index_pair(std::vector<int> rows, std::vector<int> cols) {
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  if (rows.size() != cols.size())
    throw std::invalid_argument("index pair must select equally many rows and columns");
  if (!detail::strictly_increasing(rows) || !detail::strictly_increasing(cols))
    throw std::invalid_argument("index pair contains duplicate indices");
  if ((!rows.empty() && rows.front() < 0) || (!cols.empty() && cols.front() < 0))
    throw std::invalid_argument("index pair contains negative indices");
  return IndexPair{std::move(rows), std::move(cols)};
}

inline void validate_index_pair(const IndexPair& s, std::size_t m, std::size_t n) {
  if (s.rows.size() != s.cols.size())
    throw std::invalid_argument("index pair must select equally many rows and columns");
  if (!detail::strictly_increasing(s.rows) || !detail::strictly_increasing(s.cols))
    throw std::invalid_argument("index pair lists must be strictly increasing");
  if (!s.rows.empty() && (s.rows.front() < 0 || static_cast<std::size_t>(s.rows.back()) >= m))
    throw std::invalid_argument("row index out of range");
  if (!s.cols.empty() && (s.cols.front() < 0 || static_cast<std::size_t>(s.cols.back()) >= n))
    throw std::invalid_argument("column index out of range");
}

inline bool lex_less(const IndexPair& a, const IndexPair& b) {
  if (a.rows != b.rows) return a.rows < b.rows;
  return a.cols < b.cols;
}

inline int distance(const IndexPair& s, const IndexPair& t) {
  if (s.k() != t.k()) throw std::invalid_argument("distance requires index pairs of equal order");
  return static_cast<int>(detail::symdiff(s.rows, t.rows).size() +
                          detail::symdiff(s.cols, t.cols).size()) /
         2;
}

}  // namespace subdet
