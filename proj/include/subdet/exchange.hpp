#pragma once

// Exchanges between two index pairs S, T of common order k. An exchange
// U = (U_r, U_c) takes indices from the symmetric differences S_r Δ T_r and
// S_c Δ T_c, balanced so that S Δ U and T Δ U remain valid index pairs, and
// |U_r| + |U_c| is 2 or 4 (1- and 2-exchanges). With r = |S_r ∩ T_r| and
// c = |S_c ∩ T_c| the family decomposes into
//
//   E1: ({i,i'},{j,j'})     (k-r)^2 (k-c)^2   one row and one column swapped
//   E2: ({i,i'},   ∅)       (k-r)^2           one row swapped
//   Ê2: (   ∅,  {j,j'})     (k-c)^2           one column swapped
//   E3: ({i,h,i',h'}, ∅)    C(k-r,2)^2        two rows swapped
//   Ê3: (   ∅, {j,l,j',l'}) C(k-c,2)^2        two columns swapped
//
// with unprimed indices from S's side of the difference and primed from T's.
// Every U moves both pairs strictly closer: d(SΔU, T) < d(S, T).
//
// The sign delta^U = (-1)^(sum of ranks) uses the rank of each index inside
// its home set: S_r if the index lies in S_r, else T_r (columns likewise).
// These signs are exactly the ones under which the extended Plucker
// relations in plucker.hpp hold.

#include <vector>

#include "subdet/index_pair.hpp"

namespace subdet {

struct Exchange {
  std::vector<int> rows;  // sorted subset of S_r Δ T_r, half from each side
  std::vector<int> cols;  // sorted subset of S_c Δ T_c, half from each side

  friend bool operator==(const Exchange&, const Exchange&) = default;
};

struct ExchangeCounts {
  unsigned long long e1 = 0, e2 = 0, e2_hat = 0, e3 = 0, e3_hat = 0;
  unsigned long long total() const { return e1 + e2 + e2_hat + e3 + e3_hat; }
};

inline ExchangeCounts exchange_counts(int k, int r, int c) {
  const auto sq = [](unsigned long long x) { return x * x; };
  const auto ch2 = [](int x) -> unsigned long long {
    return x < 2 ? 0ull : static_cast<unsigned long long>(x) * (x - 1) / 2;
  };
  ExchangeCounts n;
  n.e1 = sq(static_cast<unsigned long long>(k - r)) * sq(static_cast<unsigned long long>(k - c));
  n.e2 = sq(static_cast<unsigned long long>(k - r));
  n.e2_hat = sq(static_cast<unsigned long long>(k - c));
  n.e3 = sq(ch2(k - r));
  n.e3_hat = sq(ch2(k - c));
  return n;
}

// Enumerates E(S,T) in family order E1, E2, Ê2, E3, Ê3, lexicographic within
// each family. S = T has no exchanges and is a contract violation.
inline std::vector<Exchange> exchanges(const IndexPair& s, const IndexPair& t) {
  if (s.k() != t.k()) throw std::invalid_argument("exchanges: index pairs differ in order");
  if (s == t) throw std::invalid_argument("exchanges: S and T must differ");
  const std::vector<int> rs = detail::set_minus(s.rows, t.rows);  // S_r \ T_r
  const std::vector<int> rt = detail::set_minus(t.rows, s.rows);  // T_r \ S_r
  const std::vector<int> cs = detail::set_minus(s.cols, t.cols);
  const std::vector<int> ct = detail::set_minus(t.cols, s.cols);

  std::vector<Exchange> out;
  const auto sorted2 = [](int a, int b) {
    return a < b ? std::vector<int>{a, b} : std::vector<int>{b, a};
  };
  for (int i : rs)
    for (int ip : rt)
      for (int j : cs)
        for (int jp : ct) out.push_back(Exchange{sorted2(i, ip), sorted2(j, jp)});
  for (int i : rs)
    for (int ip : rt) out.push_back(Exchange{sorted2(i, ip), {}});
  for (int j : cs)
    for (int jp : ct) out.push_back(Exchange{{}, sorted2(j, jp)});
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = a + 1; b < rs.size(); ++b)
      for (std::size_t ap = 0; ap < rt.size(); ++ap)
        for (std::size_t bp = ap + 1; bp < rt.size(); ++bp) {
          std::vector<int> u{rs[a], rs[b], rt[ap], rt[bp]};
          std::sort(u.begin(), u.end());
          out.push_back(Exchange{std::move(u), {}});
        }
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b)
      for (std::size_t ap = 0; ap < ct.size(); ++ap)
        for (std::size_t bp = ap + 1; bp < ct.size(); ++bp) {
          std::vector<int> u{cs[a], cs[b], ct[ap], ct[bp]};
          std::sort(u.begin(), u.end());
          out.push_back(Exchange{{}, std::move(u)});
        }
  return out;
}

// S Δ U on both coordinates. Throws if the result is not a valid index pair
// of the same order (U unbalanced for S).
inline IndexPair apply_exchange(const IndexPair& s, const Exchange& u) {
  IndexPair out{detail::symdiff(s.rows, u.rows), detail::symdiff(s.cols, u.cols)};
  if (out.rows.size() != s.rows.size() || out.cols.size() != s.cols.size())
    throw std::invalid_argument("apply_exchange: exchange is unbalanced for this pair");
  return out;
}

// delta^U: parity of summed ranks, each index ranked within its home set.
inline int sign_delta(const Exchange& u, const IndexPair& s, const IndexPair& t) {
  long total = 0;
  const auto rank_in = [](const std::vector<int>& home, int x) {
    return static_cast<long>(std::lower_bound(home.begin(), home.end(), x) - home.begin());
  };
  const auto side = [&](const std::vector<int>& us, const std::vector<int>& sh,
                        const std::vector<int>& th) {
    for (int x : us) {
      const bool in_s = detail::contains(sh, x), in_t = detail::contains(th, x);
      if (in_s == in_t)
        throw std::invalid_argument("sign_delta: index not in the symmetric difference");
      total += rank_in(in_s ? sh : th, x);
    }
  };
  side(u.rows, s.rows, t.rows);
  side(u.cols, s.cols, t.cols);
  return total % 2 == 0 ? 1 : -1;
}

}  // namespace subdet
