#pragma once

// detlb(A) = max over k >= 0 of maxdet_k(A)^(1/k), the determinant lower
// bound on hereditary discrepancy. The k = 0 term contributes 1, so the
// estimate is never below 1. Each k >= 1 term runs the full pipeline (crude
// initializer, then α-local search), so per-k values are lower bounds on
// maxdet_k rather than exact optima, which is exactly what a lower-bound estimator
// needs. A zero starting determinant certifies maxdet_k = 0 (see gram.hpp)
// and contributes nothing.
//
// In exact mode the winning k is chosen by exact cross-power comparison
// (a^(1/j) >= b^(1/l) iff a^l >= b^j for nonnegative rationals); the reported
// double `value` is a rounded view. Ties prefer the smaller k.

#include <cstdint>
#include <vector>

#include "subdet/det.hpp"
#include "subdet/gram.hpp"
#include "subdet/matrix.hpp"
#include "subdet/search.hpp"

namespace subdet {

template <Backend T>
struct DetlbEntry {
  int k = 0;
  IndexPair pair;
  DetValue<T> det;
  std::size_t accepted_moves = 0;
  double root = 0.0;  // |det|^(1/k); 1.0 for the k = 0 convention row
};

template <Backend T>
struct DetlbResult {
  std::vector<DetlbEntry<T>> per_k;  // k = 0 first, then 1..min(m,n)
  int best_k = 0;
  double value = 1.0;
};

namespace detail {

// a^(1/j) vs b^(1/l) for nonnegative rationals, exact: compare a^l vs b^j.
inline int compare_roots(const Rational& a, unsigned j, const Rational& b, unsigned l) {
  const Rational left = pow_rational(a, l), right = pow_rational(b, j);
  return left < right ? -1 : (left > right ? 1 : 0);
}

template <Backend T>
double root_of(const DetValue<T>& d, int k) {
  if (d.is_zero()) return 0.0;
  if (k == 0) return 1.0;
  if constexpr (std::same_as<T, Rational>) {
    // k = 1 needs no root; convert directly unless it would overflow double
    if (k == 1 && log_abs_rational(d.magnitude) < 700.0) return to_double(d.magnitude);
    return std::exp(log_abs_rational(d.magnitude) / k);
  } else {
    return std::exp(d.log_abs / k);
  }
}

}  // namespace detail

template <Backend T>
DetlbResult<T> detlb(const Matrix<T>& a, const SearchConfig& cfg = {}) {
  DetlbResult<T> out;
  out.per_k.push_back(DetlbEntry<T>{0, IndexPair{}, DetValue<T>::one(), 0, 1.0});
  const int kmax = static_cast<int>(std::min(a.rows(), a.cols()));

  for (int k = 1; k <= kmax; ++k) {
    DetlbEntry<T> entry;
    entry.k = k;
    entry.pair = crude_init(a, k);
    const DetValue<T> d0 = det_sub(a, entry.pair);
    if (d0.is_zero()) {
      entry.det = DetValue<T>::zero();  // certified: maxdet_k = 0
      entry.root = 0.0;
    } else {
      const auto trace = local_search(a, entry.pair, cfg);
      entry.pair = trace.result();
      entry.det = trace.result_det();
      entry.accepted_moves = trace.accepted_moves();
      entry.root = detail::root_of(entry.det, k);
    }
    out.per_k.push_back(std::move(entry));
  }

  // Winner selection; k = 0 (value exactly 1) is the baseline.
  for (const auto& e : out.per_k) {
    if (e.k == 0 || e.det.is_zero()) continue;
    bool better;
    if constexpr (std::same_as<T, Rational>) {
      const Rational best_mag =
          out.best_k == 0 ? Rational(1) : out.per_k[static_cast<std::size_t>(out.best_k)].det.magnitude;
      better = detail::compare_roots(e.det.magnitude, static_cast<unsigned>(e.k), best_mag,
                                     static_cast<unsigned>(std::max(out.best_k, 1))) > 0;
    } else {
      better = e.root > out.value;
    }
    if (better) {
      out.best_k = e.k;
      out.value = e.root;
    }
  }
  return out;
}

}  // namespace subdet
