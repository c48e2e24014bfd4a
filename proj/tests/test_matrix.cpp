// Matrix text format, exact/float determinants, comparisons, rank, and the
// Cauchy-Binet checker, validated against cofactor-expansion oracles.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "oracles.hpp"

using namespace subdet;
using subdet::testing::laplace_det;

namespace {

Matrix<Rational> rational_matrix(std::size_t m, std::size_t n, const std::vector<int>& e) {
  std::vector<Rational> v;
  for (int x : e) v.emplace_back(x);
  return Matrix<Rational>(m, n, std::move(v));
}

}  // namespace

TEST_CASE("rational literals parse exactly") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("2.5e-1") == Rational(1, 4));
  CHECK(parse_rational("-3.25e2") == Rational(-325));
  CHECK(parse_rational("1e3") == Rational(1000));
  CHECK(parse_rational("+0.125") == Rational(1, 8));
  // leading zeros must stay decimal, not trip GMP's octal auto-detection
  CHECK(parse_rational("012") == Rational(12));
  CHECK(parse_rational("-012/024") == Rational(-1, 2));
  CHECK(parse_rational("0.012") == Rational(12, 1000));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1.2.3"));
  CHECK_THROWS(parse_rational(""));
  CHECK(format_rational(Rational(0)) == "0/1");
  CHECK(format_rational(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("matrix text parses with comments, commas, and both backends") {
  const std::string text = "# demo\n1, 2, 3\n4 5 6 # trailing\n";
  const auto info = probe_matrix_text(text);
  CHECK_FALSE(info.has_rational);
  CHECK_FALSE(info.has_decimal);

  const auto a = parse_matrix<Rational>(text);
  REQUIRE(a.rows() == 2);
  REQUIRE(a.cols() == 3);
  CHECK(a(1, 2) == Rational(6));

  const auto b = parse_matrix<double>(text);
  CHECK(b(0, 1) == 2.0);

  CHECK(probe_matrix_text("1/2 3\n4 5\n").has_rational);
  CHECK(probe_matrix_text("0.5 3\n4 5\n").has_decimal);
}

TEST_CASE("parse errors: ragged, empty, mixed literal styles") {
  CHECK_THROWS_AS(parse_matrix<Rational>("1 2\n3\n"), MatrixParseError);
  CHECK_THROWS_AS(parse_matrix<Rational>(""), MatrixParseError);
  CHECK_THROWS_AS(parse_matrix<Rational>("# only comments\n"), MatrixParseError);
  // p/q plus decimal-point literals in one file is ambiguous about intent
  CHECK_THROWS_AS(parse_matrix<Rational>("1/2 0.5\n1 1\n"), MatrixParseError);
  // p/q cannot be represented in the float backend
  CHECK_THROWS_AS(parse_matrix<double>("1/2 1\n1 1\n"), MatrixParseError);
  CHECK_THROWS_AS(parse_matrix<Rational>("1 x\n2 3\n"), MatrixParseError);
}

TEST_CASE("format and reparse round-trips both backends") {
  Rng rng(42);
  const auto a = random_int_matrix<Rational>(rng, 3, 4, -9, 9);
  const auto back = parse_matrix<Rational>(format_matrix(a));
  CHECK(back == a);

  // %.17g round-trips doubles bit-exactly
  const Matrix<double> f(2, 2, {0.1, -1.0 / 3.0, 2e-17, 123456.789});
  const auto f2 = parse_matrix<double>(format_matrix(f));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(f(i, j) == f2(i, j));

  // rationals format as integers when the denominator is one
  const auto d = Matrix<Rational>::diagonal({Rational(1), Rational(3, 2)});
  CHECK(format_matrix(d) == "1 0\n0 3/2\n");
}

TEST_CASE("exact determinant matches cofactor expansion") {
  Rng rng(7);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      const auto a = random_int_matrix<Rational>(rng, n, n, -9, 9);
      const Rational expected = laplace_det(a);
      const auto d = det(a);
      CHECK(d.value() == expected);
      CHECK(d.sign == sign_of(expected));
    }
  }
}

TEST_CASE("float determinant tracks the exact one in log magnitude") {
  Rng rng(11);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      const auto a = random_int_matrix<Rational>(rng, n, n, -9, 9);
      std::vector<double> e;
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) e.push_back(to_double(a(i, j)));
      const auto df = det(Matrix<double>(a.rows(), a.cols(), std::move(e)));
      const auto de = det(a);
      REQUIRE(df.sign == de.sign);
      if (de.sign != 0)
        CHECK(std::abs(df.log_abs - log_abs_rational(de.magnitude)) <
              1e-9 * std::max(1.0, std::abs(df.log_abs)));
    }
  }
}

TEST_CASE("determinant structure: zero rows, duplicates, permutations, diagonal") {
  const auto dup = rational_matrix(3, 3, {1, 2, 3, 1, 2, 3, 4, 5, 6});
  CHECK(det(dup).is_zero());
  CHECK(det(Matrix<double>(2, 2, {1, 2, 1, 2})).sign == 0);

  const auto a = rational_matrix(3, 3, {3, -1, 4, 0, 5, -2, 7, 1, 0});
  const auto swapped = submatrix(a, {1, 0, 2}, {0, 1, 2});
  CHECK(det(swapped).value() == -det(a).value());

  const auto d = Matrix<Rational>::diagonal({Rational(2), Rational(-3), Rational(5, 7)});
  CHECK(det(d).value() == Rational(2) * Rational(-3) * Rational(5, 7));

  CHECK(det_sub(a, IndexPair{}).value() == Rational(1));  // k = 0 convention
}

TEST_CASE("det values order by magnitude and by signed value") {
  const DetValue<Rational> zero = DetValue<Rational>::zero();
  const DetValue<Rational> one = DetValue<Rational>::one();
  const DetValue<Rational> minus_two{-1, Rational(2)};
  CHECK(abs_compare(zero, one) < 0);
  CHECK(abs_compare(minus_two, one) > 0);
  CHECK(abs_compare(one, one) == 0);
  CHECK(compare(minus_two, zero) < 0);
  CHECK(compare(zero, one) < 0);
  CHECK(minus_two.value() == Rational(-2));

  const DetValue<double> fzero = DetValue<double>::zero();
  const DetValue<double> fsmall{1, std::log(0.5)};
  const DetValue<double> fneg{-1, std::log(3.0)};
  CHECK(abs_compare(fzero, fsmall) < 0);
  CHECK(abs_compare(fneg, fsmall) > 0);
  CHECK(compare(fneg, fsmall) < 0);
}

TEST_CASE("exact rank agrees with construction") {
  Rng rng(13);
  CHECK(rank_exact(Matrix<Rational>::identity(4)) == 4);
  CHECK(rank_exact(Matrix<Rational>::zero(3, 5)) == 0);
  for (int rep = 0; rep < 10; ++rep) {
    const int m = rng.uniform_int(2, 5), n = rng.uniform_int(2, 5);
    const int target = rng.uniform_int(1, std::min(m, n));
    const auto a = random_low_rank_matrix(rng, m, n, target, -3, 3);
    CHECK(rank_exact(a) <= target);
  }
  const auto full = rational_matrix(3, 3, {2, 0, 1, 1, 3, 0, 0, 1, 4});
  REQUIRE(!det(full).is_zero());
  CHECK(rank_exact(full) == 3);
}

TEST_CASE("cauchy-binet check holds on exact products") {
  Rng rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    const int m = rng.uniform_int(1, 3);
    const int n = rng.uniform_int(m, 6);
    const auto a = random_int_matrix<Rational>(rng, m, n, -9, 9);
    const auto b = random_int_matrix<Rational>(rng, n, m, -9, 9);
    const auto rep_cb = cauchy_binet_check(a, b);
    CHECK(rep_cb.holds);
    CHECK(rep_cb.residual == Rational(0));
    CHECK(rep_cb.subsets == detail::binomial(n, m));
  }
  CHECK_THROWS_AS(
      cauchy_binet_check(Matrix<Rational>::identity(3), Matrix<Rational>::identity(2)),
      std::invalid_argument);
}

TEST_CASE("multiply and transpose agree with direct sums") {
  const auto a = rational_matrix(2, 3, {1, 2, 3, 4, 5, 6});
  const auto at = transpose(a);
  CHECK(at.rows() == 3);
  CHECK(at(0, 1) == Rational(4));
  const auto p = multiply(a, at);
  CHECK(p(0, 0) == Rational(14));
  CHECK(p(0, 1) == Rational(32));
  CHECK(p(1, 1) == Rational(77));
  CHECK_THROWS_AS(multiply(a, a), std::invalid_argument);
}
