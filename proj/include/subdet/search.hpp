#pragma once

// α-local search over the 2-exchange neighborhood, the brute-force oracle,
// and the local-to-global ratio certificate.
//
// One iteration scans all of N_2(S), takes the candidate with the largest
// |det| (ties to the lexicographically smallest pair), and accepts it when
// α·|det(A_T)| > |det(A_S)|; otherwise S is a (2,α)-local maximum and the
// search stops. Accepted moves therefore grow the magnitude by a factor
// > 1/α each, which bounds the number of steps by
// log_{1/α}(maxdet_k(A) / |det(A_{S0})|).
//
// Float-mode α-comparisons happen in log space with a relative guard band of
// 1e-12, so rounding noise cannot masquerade as an improving move; exact-mode
// comparisons are exact. Exceeding the iteration cap is reported as an error
// because it can only mean the comparison logic is inconsistent.

#include <cstdint>
#include <optional>
#include <vector>

#include "subdet/det.hpp"
#include "subdet/index_pair.hpp"
#include "subdet/matrix.hpp"
#include "subdet/neighborhood.hpp"

namespace subdet {

inline constexpr double kFloatGuardRel = 1e-12;

struct SearchConfig {
  Rational alpha{1, 2};           // strictly inside (0,1)
  std::size_t max_iterations = 0;  // 0 = derive from alpha (see below)
};

// Cap on accepted moves: enough to sweep |det| across the entire double
// range at the minimum growth factor 1/alpha, plus slack. Hitting it means
// the comparison predicate is broken, not that the input is hard.
inline std::size_t default_max_iterations(const Rational& alpha) {
  const double span = std::log(std::numeric_limits<double>::max()) -
                      std::log(std::numeric_limits<double>::denorm_min());
  const double per_step = -log_abs_rational(alpha);  // log(1/alpha)
  return static_cast<std::size_t>(std::ceil(span / per_step)) + 64;
}

namespace detail {

inline void check_alpha(const Rational& alpha) {
  if (alpha <= 0 || alpha >= 1)
    throw std::invalid_argument("alpha must lie strictly inside (0, 1)");
}

// Does candidate satisfy alpha * |cand| > |cur|?
inline bool alpha_improves(const DetValue<Rational>& cand, const DetValue<Rational>& cur,
                           const Rational& alpha) {
  if (cand.is_zero()) return false;
  return alpha * cand.magnitude > cur.magnitude;
}

inline bool alpha_improves(const DetValue<double>& cand, const DetValue<double>& cur,
                           const Rational& alpha) {
  if (cand.is_zero()) return false;
  if (cur.is_zero()) return true;
  const double guard = kFloatGuardRel * std::max(1.0, std::abs(cur.log_abs));
  return log_abs_rational(alpha) + cand.log_abs > cur.log_abs + guard;
}

}  // namespace detail

template <Backend T>
struct SearchTrace {
  struct Step {
    IndexPair pair;
    DetValue<T> det;
    std::optional<IndexPair> accepted;  // move taken from here; empty = terminal
  };
  IndexPair start;
  std::vector<Step> steps;  // visited states in order; last one is the result

  const IndexPair& result() const { return steps.back().pair; }
  const DetValue<T>& result_det() const { return steps.back().det; }
  std::size_t accepted_moves() const { return steps.size() - 1; }
};

template <Backend T>
SearchTrace<T> local_search(const Matrix<T>& a, const IndexPair& s0, const SearchConfig& cfg = {}) {
  detail::check_alpha(cfg.alpha);
  validate_index_pair(s0, a.rows(), a.cols());
  const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
  const std::size_t cap =
      cfg.max_iterations ? cfg.max_iterations : default_max_iterations(cfg.alpha);

  SearchTrace<T> trace;
  trace.start = s0;
  IndexPair s = s0;
  DetValue<T> ds = det_sub(a, s);
  if (ds.is_zero())
    throw std::invalid_argument(
        "local_search: starting determinant is zero; use the crude_init certificate instead");

  while (true) {
    // Best-improvement scan. The neighborhood is lexicographically sorted and
    // updates are strict, so the first maximum seen is the lex-smallest.
    std::optional<IndexPair> best;
    DetValue<T> best_det;
    for (const IndexPair& t : neighborhood(s, 2, m, n)) {
      if (t == s) continue;
      const DetValue<T> dt = det_sub(a, t);
      if (!best || abs_compare(dt, best_det) > 0) {
        best = t;
        best_det = dt;
      }
    }
    if (best && detail::alpha_improves(best_det, ds, cfg.alpha)) {
      trace.steps.push_back({s, ds, best});
      s = *best;
      ds = best_det;
      if (trace.steps.size() > cap)
        throw std::runtime_error(
            "local_search: iteration cap exceeded; inconsistent det comparisons");
      continue;
    }
    trace.steps.push_back({s, ds, std::nullopt});
    return trace;
  }
}

// Is s a (radius, alpha)-local maximum of |det|?
template <Backend T>
bool is_local_maximum(const Matrix<T>& a, const IndexPair& s, const Rational& alpha,
                      int radius = 2) {
  detail::check_alpha(alpha);
  const DetValue<T> ds = det_sub(a, s);
  for (const IndexPair& t :
       neighborhood(s, radius, static_cast<int>(a.rows()), static_cast<int>(a.cols()))) {
    if (t == s) continue;
    if (detail::alpha_improves(det_sub(a, t), ds, alpha)) return false;
  }
  return true;
}

template <Backend T>
struct OracleResult {
  IndexPair argmax;       // lexicographically smallest maximizer
  DetValue<T> value;
  unsigned long long enumerated = 0;
};

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

// Exhaustive maxdet_k by enumerating all C(m,k) x C(n,k) index pairs.
// Refuses instances whose pair count exceeds the cap.
template <Backend T>
OracleResult<T> maxdet_oracle(const Matrix<T>& a, int k, std::uint64_t cap = kDefaultOracleCap) {
  const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
  if (k < 0 || k > std::min(m, n))
    throw std::invalid_argument("maxdet_oracle: k must satisfy 0 <= k <= min(m,n)");
  OracleResult<T> out;
  if (k == 0) {
    out.argmax = IndexPair{};
    out.value = DetValue<T>::one();
    out.enumerated = 1;
    return out;
  }
  const unsigned long long pairs = detail::binomial(m, k) * detail::binomial(n, k);
  if (pairs > cap)
    throw std::invalid_argument("maxdet_oracle: C(m,k)*C(n,k) exceeds the enumeration cap");
  out.value = DetValue<T>::zero();
  bool first = true;
  detail::for_each_combination(m, k, [&](const std::vector<int>& rows) {
    detail::for_each_combination(n, k, [&](const std::vector<int>& cols) {
      const IndexPair t{rows, cols};
      const DetValue<T> dt = det_sub(a, t);
      ++out.enumerated;
      if (first || abs_compare(dt, out.value) > 0) {
        out.argmax = t;
        out.value = dt;
        first = false;
      }
    });
  });
  return out;
}

template <Backend T>
struct CertificateReport {
  bool local_max = false;       // precondition re-check
  DetValue<T> local_det;
  OracleResult<T> oracle;
  double ratio_log10 = 0.0;     // log10(opt / |det(A_S)|)
  double bound_log10 = 0.0;     // log10(((2k^2+8k)/alpha)^(2k))
  bool within_bound = false;
};

// Ratio certificate for a (2,α)-local maximum: the true optimum exceeds it by
// at most ((2k^2+8k)/alpha)^(2k). The bound in exact mode is evaluated as an
// exact rational power; float mode compares in log space.
template <Backend T>
CertificateReport<T> local_to_global_certificate(const Matrix<T>& a, const IndexPair& s,
                                                 const Rational& alpha = Rational(1, 2),
                                                 std::uint64_t cap = kDefaultOracleCap) {
  detail::check_alpha(alpha);
  validate_index_pair(s, a.rows(), a.cols());
  const int k = static_cast<int>(s.k());
  CertificateReport<T> rep;
  rep.local_det = det_sub(a, s);
  rep.local_max = !rep.local_det.is_zero() && is_local_maximum(a, s, alpha);
  rep.oracle = maxdet_oracle<T>(a, k, cap);
  if (rep.local_det.is_zero()) return rep;  // not certifiable; local_max already false
  if (k == 0) {
    rep.within_bound = true;  // oracle and local value are both exactly one
    return rep;
  }

  const Rational base = Rational(2 * k * k + 8 * k) / alpha;
  rep.bound_log10 = 2.0 * k * log_abs_rational(base) / std::numbers::ln10;
  rep.ratio_log10 = rep.oracle.value.log10_abs() - rep.local_det.log10_abs();
  if constexpr (std::same_as<T, Rational>) {
    const Rational bound = pow_rational(base, static_cast<unsigned>(2 * k));
    rep.within_bound = rep.oracle.value.magnitude <= bound * rep.local_det.magnitude;
  } else {
    rep.within_bound = rep.ratio_log10 <= rep.bound_log10;
  }
  return rep;
}

}  // namespace subdet
