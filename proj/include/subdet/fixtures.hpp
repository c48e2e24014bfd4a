#pragma once

// Test fixtures with known optima.
//
// hadamard_fixture(k, c) = [ I_k | c^(-1/2) H_k ] for the Sylvester matrix
// H_k (k a power of two). The identity block has determinant 1 and is a
// (c,1)-local maximum, yet the best k x k block, the scaled H_k itself,
// reaches (k/c)^(k/2), so for c < k local search over N_c cannot leave the
// identity block even though it sits a polynomial factor below the optimum.
// The exact backend can only represent the fixture when c is a perfect
// square; ask for the float backend otherwise.
//
// diagonal_matrix(d) is the classic 1-exchange trap: from a small principal
// block, improving the determinant requires moving a row and a column
// together, which is exactly what the 2-exchange neighborhood provides.

#include <cmath>
#include <vector>

#include "subdet/matrix.hpp"

namespace subdet {

namespace detail {

inline bool is_power_of_two(int k) { return k >= 1 && (k & (k - 1)) == 0; }

// Exact square root of c if c is a perfect square, else 0.
inline int perfect_sqrt(int c) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(c))));
  while (r * r > c) --r;
  while ((r + 1) * (r + 1) <= c) ++r;
  return r * r == c ? r : 0;
}

}  // namespace detail

// Sylvester Hadamard matrix H_k, entries +-1, k a power of two.
inline std::vector<std::vector<int>> sylvester_hadamard(int k) {
  if (!detail::is_power_of_two(k))
    throw std::invalid_argument("sylvester_hadamard: k must be a power of two");
  std::vector<std::vector<int>> h(static_cast<std::size_t>(k),
                                  std::vector<int>(static_cast<std::size_t>(k), 1));
  for (int block = 1; block < k; block *= 2)
    for (int i = 0; i < block; ++i)
      for (int j = 0; j < block; ++j) {
        h[static_cast<std::size_t>(i + block)][static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + block)] = h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        h[static_cast<std::size_t>(i + block)][static_cast<std::size_t>(j + block)] =
            -h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
  return h;
}

template <Backend T>
Matrix<T> hadamard_fixture(int k, int c) {
  if (!detail::is_power_of_two(k))
    throw std::invalid_argument("hadamard_fixture: k must be a power of two");
  if (c < 1) throw std::invalid_argument("hadamard_fixture: c must be a positive integer");
  const auto h = sylvester_hadamard(k);
  const auto kk = static_cast<std::size_t>(k);
  std::vector<T> e(kk * 2 * kk, T(0));
  T scale(0);
  if constexpr (std::same_as<T, double>) {
    scale = 1.0 / std::sqrt(static_cast<double>(c));
  } else {
    const int root = detail::perfect_sqrt(c);
    if (root == 0)
      throw std::invalid_argument(
          "hadamard_fixture: exact backend requires c to be a perfect square "
          "(c^(-1/2) is irrational otherwise); use the float backend");
    scale = Rational(1, root);
  }
  for (std::size_t i = 0; i < kk; ++i) {
    e[i * 2 * kk + i] = T(1);
    for (std::size_t j = 0; j < kk; ++j) e[i * 2 * kk + kk + j] = T(h[i][j]) * scale;
  }
  return Matrix<T>(kk, 2 * kk, std::move(e));
}

template <Backend T>
Matrix<T> diagonal_matrix(const std::vector<T>& d) {
  return Matrix<T>::diagonal(d);
}

}  // namespace subdet
