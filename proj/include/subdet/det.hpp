#pragma once

// Determinants under both backends, packaged as a sign/magnitude pair so the
// search can compare values whose plain double representation would over- or
// underflow.
//
//   DetValue<double>:   sign in {-1,0,+1} plus log|det| (natural log).
//   DetValue<Rational>: sign plus |det| as an exact nonnegative rational.
//
// The float path runs partially pivoted Gaussian elimination and sums pivot
// logs; magnitudes below a configurable floor collapse to zero. The exact
// path scales each row to integers and runs fraction-free Bareiss elimination
// (division-exact at every step), which keeps intermediate values far smaller
// than naive rational elimination would.

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "subdet/index_pair.hpp"
#include "subdet/matrix.hpp"

namespace subdet {

// |det| below exp(kZeroFloorLog) is reported as exact zero in the float
// backend; keep in sync with the README's backend notes.
inline const double kZeroFloorLog = std::log(1e-300);

template <Backend T>
struct DetValue;

template <>
struct DetValue<double> {
  int sign = 0;
  double log_abs = -std::numeric_limits<double>::infinity();

  static DetValue one() { return {1, 0.0}; }
  static DetValue zero() { return {}; }

  bool is_zero() const { return sign == 0; }
  double log10_abs() const { return log_abs / std::numbers::ln10; }
  double approx() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

template <>
struct DetValue<Rational> {
  int sign = 0;
  Rational magnitude{0};  // |det|, nonnegative

  static DetValue one() { return {1, Rational(1)}; }
  static DetValue zero() { return {}; }

  bool is_zero() const { return sign == 0; }
  double log10_abs() const {
    if (sign == 0) return -std::numeric_limits<double>::infinity();
    return log_abs_rational(magnitude) / std::numbers::ln10;
  }
  double approx() const { return sign == 0 ? 0.0 : sign * to_double(magnitude); }
  Rational value() const { return sign < 0 ? Rational(-magnitude) : magnitude; }
  std::string fraction() const { return format_rational(value()); }
};

// Order by |value|: -1, 0, +1.
inline int abs_compare(const DetValue<double>& a, const DetValue<double>& b) {
  if (a.sign == 0 || b.sign == 0) return (b.sign != 0) ? -1 : (a.sign != 0 ? 1 : 0);
  return a.log_abs < b.log_abs ? -1 : (a.log_abs > b.log_abs ? 1 : 0);
}

inline int abs_compare(const DetValue<Rational>& a, const DetValue<Rational>& b) {
  if (a.sign == 0 || b.sign == 0) return (b.sign != 0) ? -1 : (a.sign != 0 ? 1 : 0);
  return a.magnitude < b.magnitude ? -1 : (a.magnitude > b.magnitude ? 1 : 0);
}

// Total order consistent with comparing the underlying real determinants.
template <Backend T>
int compare(const DetValue<T>& a, const DetValue<T>& b) {
  if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;
  if (a.sign == 0) return 0;
  const int mag = abs_compare(a, b);
  return a.sign > 0 ? mag : -mag;
}

struct FloatDetOptions {
  double zero_floor_log = kZeroFloorLog;
};

inline DetValue<double> det(const Matrix<double>& a, FloatDetOptions opt = {}) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix must be square");
  const std::size_t n = a.rows();
  std::vector<double> m = a.entries();
  const auto at = [&](std::size_t i, std::size_t j) -> double& { return m[i * n + j]; };
  int sign = 1;
  double log_sum = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t piv = p;
    for (std::size_t i = p + 1; i < n; ++i)
      if (std::abs(at(i, p)) > std::abs(at(piv, p))) piv = i;
    const double pivot = at(piv, p);
    if (pivot == 0.0) return DetValue<double>::zero();
    if (piv != p) {
      for (std::size_t j = p; j < n; ++j) std::swap(at(p, j), at(piv, j));
      sign = -sign;
    }
    if (pivot < 0.0) sign = -sign;
    log_sum += std::log(std::abs(pivot));
    for (std::size_t i = p + 1; i < n; ++i) {
      const double f = at(i, p) / pivot;
      if (f == 0.0) continue;
      at(i, p) = 0.0;
      for (std::size_t j = p + 1; j < n; ++j) at(i, j) -= f * at(p, j);
    }
  }
  if (log_sum < opt.zero_floor_log) return DetValue<double>::zero();
  return {sign, log_sum};
}

inline DetValue<Rational> det(const Matrix<Rational>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix must be square");
  const std::size_t n = a.rows();
  if (n == 0) return DetValue<Rational>::one();

  // Clear denominators row by row so Bareiss runs over integers; det(A) =
  // det(scaled) / prod(row scales).
  std::vector<BigInt> m(n * n);
  BigInt scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l(1);
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, denominator(a(i, j)));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational scaled = a(i, j) * Rational(l);
      m[i * n + j] = numerator(scaled);  // denominator is 1 by construction
    }
    scale *= l;
  }

  const auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n + j]; };
  int sign = 1;
  BigInt prev(1);
  for (std::size_t p = 0; p + 1 < n; ++p) {
    std::size_t piv = p;
    for (std::size_t i = p; i < n; ++i)
      if (abs(at(i, p)) > abs(at(piv, p))) piv = i;
    if (at(piv, p) == 0) return DetValue<Rational>::zero();
    if (piv != p) {
      for (std::size_t j = p; j < n; ++j) at(p, j).swap(at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(p, p) - at(i, p) * at(p, j)) / prev;
      at(i, p) = 0;
    }
    prev = at(p, p);
  }
  const BigInt d = at(n - 1, n - 1);
  if (d == 0) return DetValue<Rational>::zero();
  Rational value = Rational(d) / Rational(scale);
  if (value < 0) {
    sign = -sign;
    value = -value;
  }
  return {sign, value};
}

// Determinant of the submatrix selected by s; the empty pair has det 1.
template <Backend T>
DetValue<T> det_sub(const Matrix<T>& a, const IndexPair& s) {
  validate_index_pair(s, a.rows(), a.cols());
  if (s.k() == 0) return DetValue<T>::one();
  return det(submatrix(a, s.rows, s.cols));
}

// Exact rank via rational Gaussian elimination.
inline std::size_t rank_exact(const Matrix<Rational>& a) {
  std::vector<Rational> m = a.entries();
  const std::size_t rows = a.rows(), cols = a.cols();
  const auto at = [&](std::size_t i, std::size_t j) -> Rational& { return m[i * cols + j]; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) at(rank, j).swap(at(piv, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (at(i, col) == 0) continue;
      const Rational f = at(i, col) / at(rank, col);
      for (std::size_t j = col; j < cols; ++j) at(i, j) -= f * at(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace subdet
