#pragma once

// Dense row-major matrix over one of the two scalar backends:
//   * double:   fast screening, magnitudes tracked in log space by det code;
//   * Rational: exact arithmetic, required by all verification routines.
// Matrices are immutable once constructed; every operation below is a pure
// function returning a fresh value, so concurrent readers need no locking.
//
// Text format (round-trips through parse_matrix/format_matrix):
//   one row per line, entries separated by whitespace or commas, '#' starts a
//   comment. An entry is an integer, a decimal literal, or a rational "p/q".
//   "p/q" demands the exact backend, and a file may not mix "p/q" with
//   decimal-point/exponent literals, since silent precision loss would invalidate
//   verification runs. Integers are welcome in both backends.

#include <concepts>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "subdet/rational.hpp"

namespace subdet {

template <typename T>
concept Backend = std::same_as<T, double> || std::same_as<T, Rational>;

template <Backend T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0)
      throw std::invalid_argument("matrix must have at least one row and column");
    if (data_.size() != rows_ * cols_)
      throw std::invalid_argument("matrix entry count does not match dimensions");
  }

  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, std::vector<T>(rows * cols, T(0)));
  }

  static Matrix identity(std::size_t n) {
    std::vector<T> e(n * n, T(0));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = T(1);
    return Matrix(n, n, std::move(e));
  }

  static Matrix diagonal(const std::vector<T>& d) {
    const std::size_t n = d.size();
    std::vector<T> e(n * n, T(0));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = d[i];
    return Matrix(n, n, std::move(e));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& entries() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

template <Backend T>
Matrix<T> transpose(const Matrix<T>& a) {
  std::vector<T> e(a.rows() * a.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) e[j * a.rows() + i] = a(i, j);
  return Matrix<T>(a.cols(), a.rows(), std::move(e));
}

template <Backend T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  std::vector<T> e(a.rows() * b.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t p = 0; p < a.cols(); ++p) {
      const T& aip = a(i, p);
      if (aip == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) e[i * b.cols() + j] += aip * b(p, j);
    }
  return Matrix<T>(a.rows(), b.cols(), std::move(e));
}

// Extract rows ri and columns ci (0-based, strictly increasing).
template <Backend T>
Matrix<T> submatrix(const Matrix<T>& a, const std::vector<int>& ri, const std::vector<int>& ci) {
  std::vector<T> e;
  e.reserve(ri.size() * ci.size());
  for (int i : ri) {
    if (i < 0 || static_cast<std::size_t>(i) >= a.rows())
      throw std::out_of_range("submatrix: row index out of range");
    for (int j : ci) {
      if (j < 0 || static_cast<std::size_t>(j) >= a.cols())
        throw std::out_of_range("submatrix: column index out of range");
      e.push_back(a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }
  return Matrix<T>(ri.size(), ci.size(), std::move(e));
}

struct MatrixParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MatrixTextInfo {
  bool has_rational = false;  // any "p/q" literal
  bool has_decimal = false;   // any decimal-point/exponent literal
};

namespace detail {

inline std::vector<std::vector<std::string>> tokenize_matrix_text(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::string> row;
    std::string tok;
    for (char ch : line) {
      if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') {
        if (!tok.empty()) row.push_back(std::move(tok)), tok.clear();
      } else {
        tok += ch;
      }
    }
    if (!tok.empty()) row.push_back(std::move(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

inline bool token_is_rational(std::string_view t) { return t.find('/') != std::string_view::npos; }

inline bool token_is_decimal(std::string_view t) {
  return t.find('.') != std::string_view::npos || t.find('e') != std::string_view::npos ||
         t.find('E') != std::string_view::npos;
}

inline double parse_double_token(const std::string& t) {
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || *end != '\0')
    throw MatrixParseError("invalid numeric literal '" + t + "'");
  return v;
}

}  // namespace detail

inline MatrixTextInfo probe_matrix_text(std::string_view text) {
  MatrixTextInfo info;
  for (const auto& row : detail::tokenize_matrix_text(text))
    for (const auto& tok : row) {
      info.has_rational |= detail::token_is_rational(tok);
      info.has_decimal |= detail::token_is_decimal(tok);
    }
  return info;
}

template <Backend T>
Matrix<T> parse_matrix(std::string_view text) {
  const auto rows = detail::tokenize_matrix_text(text);
  if (rows.empty()) throw MatrixParseError("matrix text contains no rows");
  const std::size_t n = rows.front().size();
  const auto info = probe_matrix_text(text);
  if (info.has_rational && info.has_decimal)
    throw MatrixParseError("cannot mix 'p/q' rationals with decimal literals in one matrix");
  if constexpr (std::same_as<T, double>) {
    if (info.has_rational)
      throw MatrixParseError("rational 'p/q' literals require the exact backend");
  }
  std::vector<T> entries;
  entries.reserve(rows.size() * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw MatrixParseError("ragged matrix rows");
    for (const auto& tok : row) {
      if constexpr (std::same_as<T, double>) {
        entries.push_back(detail::parse_double_token(tok));
      } else {
        try {
          entries.push_back(parse_rational(tok));
        } catch (const std::runtime_error& e) {
          throw MatrixParseError(e.what());
        }
      }
    }
  }
  return Matrix<T>(rows.size(), n, std::move(entries));
}

template <Backend T>
std::string format_matrix(const Matrix<T>& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ' ';
      if constexpr (std::same_as<T, double>) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", a(i, j));
        out << buf;
      } else {
        const Rational& q = a(i, j);
        if (denominator(q) == 1)
          out << numerator(q).str();
        else
          out << numerator(q).str() << '/' << denominator(q).str();
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace subdet
