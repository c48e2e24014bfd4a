#pragma once

// Seeded instance generation for tests and the verify subcommand. mt19937_64
// has a standard-specified sequence and the bounded draw below avoids
// std::uniform_int_distribution (whose output is implementation-defined), so
// a seed reproduces the same instances on any platform, a prerequisite for
// the byte-identical-output contract.

#include <cstdint>
#include <random>
#include <vector>

#include "subdet/index_pair.hpp"
#include "subdet/matrix.hpp"

namespace subdet {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [lo, hi]; modulo bias is irrelevant for test-instance ranges.
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

  // Random size-k subset of {0,..,n-1}, sorted (partial Fisher-Yates).
  std::vector<int> sample(int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i)
      std::swap(pool[static_cast<std::size_t>(i)],
                pool[static_cast<std::size_t>(uniform_int(i, n - 1))]);
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

template <Backend T>
Matrix<T> random_int_matrix(Rng& rng, int m, int n, int lo, int hi) {
  std::vector<T> e;
  e.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int i = 0; i < m * n; ++i) e.push_back(T(rng.uniform_int(lo, hi)));
  return Matrix<T>(static_cast<std::size_t>(m), static_cast<std::size_t>(n), std::move(e));
}

// Rank <= target by construction: product of m x rank and rank x n factors.
inline Matrix<Rational> random_low_rank_matrix(Rng& rng, int m, int n, int rank, int lo, int hi) {
  if (rank == 0) return Matrix<Rational>::zero(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  const auto f = random_int_matrix<Rational>(rng, m, rank, lo, hi);
  const auto g = random_int_matrix<Rational>(rng, rank, n, lo, hi);
  return multiply(f, g);
}

inline IndexPair random_index_pair(Rng& rng, int m, int n, int k) {
  return IndexPair{rng.sample(m, k), rng.sample(n, k)};
}

// Distinct pair of index pairs of order k (re-draws T until T != S).
inline std::pair<IndexPair, IndexPair> random_distinct_pairs(Rng& rng, int m, int n, int k) {
  const IndexPair s = random_index_pair(rng, m, n, k);
  while (true) {
    const IndexPair t = random_index_pair(rng, m, n, k);
    if (!(t == s)) return {s, t};
  }
}

// S and T with |S_r ∩ T_r| = r and |S_c ∩ T_c| = c exactly; needs
// m >= 2k - r and n >= 2k - c.
inline std::pair<IndexPair, IndexPair> random_overlap_pairs(Rng& rng, int m, int n, int k, int r,
                                                            int c) {
  const auto one_side = [&rng](int limit, int k_, int overlap) {
    const std::vector<int> s = rng.sample(limit, k_);
    std::vector<int> rest;
    for (int x = 0; x < limit; ++x)
      if (!detail::contains(s, x)) rest.push_back(x);
    // choose the shared part from s, the rest of t from the complement
    std::vector<int> shared_idx = rng.sample(k_, overlap);
    std::vector<int> t;
    for (int i : shared_idx) t.push_back(s[static_cast<std::size_t>(i)]);
    const std::vector<int> extra_idx = rng.sample(static_cast<int>(rest.size()), k_ - overlap);
    for (int i : extra_idx) t.push_back(rest[static_cast<std::size_t>(i)]);
    std::sort(t.begin(), t.end());
    return std::make_pair(s, t);
  };
  auto [sr, tr] = one_side(m, k, r);
  auto [sc, tc] = one_side(n, k, c);
  return {IndexPair{sr, sc}, IndexPair{tr, tc}};
}

}  // namespace subdet
