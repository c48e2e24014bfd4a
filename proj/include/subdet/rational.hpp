#pragma once

// Exact-rational scalar backend: GMP-backed arbitrary-precision rationals via
// Boost.Multiprecision, plus the small set of parsing/formatting/log helpers
// the rest of the library needs. Values are always kept in canonical form
// (gcd(p,q)=1, q>0) by the underlying mpq layer.

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace subdet {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

inline BigInt pow_int(BigInt base, unsigned e) {
  BigInt out(1);
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

inline Rational pow_rational(const Rational& base, unsigned e) {
  return Rational(pow_int(numerator(base), e), pow_int(denominator(base), e));
}

// Natural log of |z| for integers too large to convert to double directly.
inline double log_abs_bigint(const BigInt& z) {
  if (z == 0) return -std::numeric_limits<double>::infinity();
  BigInt a = abs(z);
  const unsigned bits = msb(a);  // index of highest set bit
  if (bits <= 512) return std::log(a.convert_to<double>());
  const unsigned shift = bits - 512;
  const double head = BigInt(a >> shift).convert_to<double>();
  return std::log(head) + static_cast<double>(shift) * std::numbers::ln2;
}

inline double log_abs_rational(const Rational& q) {
  if (q == 0) return -std::numeric_limits<double>::infinity();
  return log_abs_bigint(numerator(q)) - log_abs_bigint(denominator(q));
}

inline double to_double(const Rational& q) {
  return q.convert_to<double>();
}

// Canonical "p/q" form, denominator always present ("3/1", "-2/5").
inline std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {

inline bool is_plain_integer(std::string_view t) {
  if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char ch : t)
    if (ch < '0' || ch > '9') return false;
  return true;
}

// GMP-backed string construction auto-detects bases, so "012" would be read
// as octal. Force base 10 by stripping the leading zeros ourselves.
inline BigInt bigint_from_decimal(std::string_view t) {
  bool negative = false;
  if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
    negative = t.front() == '-';
    t.remove_prefix(1);
  }
  while (t.size() > 1 && t.front() == '0') t.remove_prefix(1);
  BigInt v{std::string(t)};
  if (negative) v = -v;
  return v;
}

}  // namespace detail

// Accepts "p/q", plain integers, and decimal literals with optional exponent
// ("0.5", "-1.25e-3"); every accepted form converts exactly.
inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto bad = [&]() -> std::runtime_error {
    return std::runtime_error("invalid rational literal '" + s + "'");
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!detail::is_plain_integer(p) || !detail::is_plain_integer(q)) throw bad();
    const BigInt den = detail::bigint_from_decimal(q);
    if (den == 0) throw std::runtime_error("zero denominator in '" + s + "'");
    return Rational(detail::bigint_from_decimal(p)) / Rational(den);
  }
  if (detail::is_plain_integer(s)) return Rational(detail::bigint_from_decimal(s));

  // decimal form: [sign] digits [. digits] [eE [sign] digits]
  std::string_view t(s);
  bool negative = false;
  if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
    negative = t.front() == '-';
    t.remove_prefix(1);
  }
  std::string mantissa;
  long frac_digits = 0, exp10 = 0;
  std::size_t i = 0;
  while (i < t.size() && t[i] >= '0' && t[i] <= '9') mantissa += t[i++];
  if (i < t.size() && t[i] == '.') {
    ++i;
    while (i < t.size() && t[i] >= '0' && t[i] <= '9') {
      mantissa += t[i++];
      ++frac_digits;
    }
  }
  if (mantissa.empty()) throw bad();
  if (i < t.size() && (t[i] == 'e' || t[i] == 'E')) {
    std::string e(t.substr(i + 1));
    if (!detail::is_plain_integer(e)) throw bad();
    exp10 = std::stol(e);
    i = t.size();
  }
  if (i != t.size()) throw bad();

  Rational value{detail::bigint_from_decimal(mantissa)};
  const long net = exp10 - frac_digits;
  if (net >= 0)
    value *= Rational(pow_int(BigInt(10), static_cast<unsigned>(net)));
  else
    value /= Rational(pow_int(BigInt(10), static_cast<unsigned>(-net)));
  return negative ? Rational(-value) : value;
}

}  // namespace subdet
