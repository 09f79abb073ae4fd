#include "flatkit/cyclotomic.hpp"
#include "flatkit/matrix.hpp"
#include "flatkit/rational.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace flatkit;

namespace {

int euler_phi(int m) {
  int count = 0;
  for (int k = 1; k <= m; ++k) {
    int a = k, b = m;
    while (b) {
      int t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++count;
  }
  return count;
}

Matrix<Rational> random_int_matrix(int rows, int cols, SplitMix64& rng, int bound) {
  Matrix<Rational> m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = Rational(static_cast<long long>(rng.next() % (2 * bound + 1)) - bound);
  return m;
}

}  // namespace

TEST_CASE("rational normalization and formatting") {
  Rational q = Rational(6) / Rational(-4);  // stored in lowest terms, q > 0
  CHECK(numerator(q) == -3);
  CHECK(denominator(q) == 2);
  CHECK(parse_rational("6/-4") == q);
  CHECK(fraction_str(Rational(6)) == "6/1");
  CHECK(fraction_str(q) == "-3/2");
  CHECK(rational_str(Rational(6)) == "6");
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("12") == Rational(12));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials at small orders") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("phi_6 agrees with an independent division oracle") {
  // (x^6 - 1) / (phi_1 phi_2 phi_3)
  std::vector<Int> x6m1(7, Int(0));
  x6m1[0] = -1;
  x6m1[6] = 1;
  auto divisors = oracles::poly_mul(oracles::poly_mul({-1, 1}, {1, 1}), {1, 1, 1});
  std::vector<Int> expected;
  REQUIRE(oracles::poly_div(x6m1, divisors, expected));
  CHECK(expected == std::vector<Int>{1, -1, 1});
  CHECK(cyclotomic_polynomial(6) == expected);
}

TEST_CASE("cyclotomic degree equals Euler phi and divisor product is x^m - 1") {
  for (int m = 1; m <= 12; ++m) {
    auto phi = cyclotomic_polynomial(m);
    CHECK(static_cast<int>(phi.size()) - 1 == euler_phi(m));
    std::vector<Int> product{1};
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) product = oracles::poly_mul(product, cyclotomic_polynomial(d));
    std::vector<Int> expected(m + 1, Int(0));
    expected[0] = -1;
    expected[m] = 1;
    CHECK(product == expected);
  }
}

TEST_CASE("cyclotomic normalization") {
  // z^2 mod phi_4 = -1
  CHECK(Cyclotomic::from_polynomial(4, {0, 0, 1}) == Cyclotomic::from_rational(4, -1));
  // z^3 mod phi_3 = 1
  CHECK(Cyclotomic::from_polynomial(3, {0, 0, 0, 1}) == Cyclotomic::one(3));
  // phi_3 itself reduces to zero
  CHECK(Cyclotomic::from_polynomial(3, {1, 1, 1}).is_zero());
}

TEST_CASE("cyclotomic normalization is idempotent") {
  SplitMix64 rng(7);
  for (unsigned m : {3u, 4u, 5u, 6u, 12u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> coeffs;
      for (int i = 0; i < 8; ++i)
        coeffs.push_back(Rational(static_cast<long long>(rng.next() % 21) - 10,
                                  1 + static_cast<long long>(rng.next() % 4)));
      auto once = Cyclotomic::from_polynomial(m, coeffs);
      auto twice = Cyclotomic::from_polynomial(m, once.coeffs());
      CHECK(once == twice);
    }
  }
}

TEST_CASE("cyclotomic field arithmetic") {
  auto z = Cyclotomic::root_power(3, 1);
  CHECK(z * z == Cyclotomic::root_power(3, 2));
  CHECK(z * Cyclotomic::root_power(3, 2) == Cyclotomic::one(3));
  // 1 + z + z^2 = 0 in Q(zeta_3)
  CHECK((Cyclotomic::one(3) + z + z * z).is_zero());

  SplitMix64 rng(11);
  for (unsigned m : {3u, 4u, 5u, 6u, 12u}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> coeffs;
      for (int i = 0; i < 4; ++i)
        coeffs.push_back(Rational(static_cast<long long>(rng.next() % 13) - 6));
      auto a = Cyclotomic::from_polynomial(m, coeffs);
      if (a.is_zero()) continue;
      CHECK(a * a.inverse() == Cyclotomic::one(m));
    }
  }
  CHECK_THROWS_AS(Cyclotomic::zero(5).inverse(), std::domain_error);
  CHECK_THROWS_AS(Cyclotomic::one(3) + Cyclotomic::one(4), std::invalid_argument);
  CHECK(Cyclotomic::one(3) != Cyclotomic::one(4));
}

TEST_CASE("matrix rank basics") {
  Matrix<Rational> id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(matrix_rank(id) == 3);

  Matrix<Rational> prop(2, 2);
  prop.at(0, 0) = 1;
  prop.at(0, 1) = 2;
  prop.at(1, 0) = 2;
  prop.at(1, 1) = 4;
  CHECK(matrix_rank(prop) == 1);

  CHECK(matrix_rank(Matrix<Rational>(0, 0)) == 0);
  CHECK(matrix_rank(Matrix<Rational>(3, 0)) == 0);
  CHECK(matrix_rank(Matrix<Rational>(0, 4)) == 0);
}

TEST_CASE("bareiss rank agrees with naive gaussian elimination") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng.next() % 6);
    int cols = 1 + static_cast<int>(rng.next() % 6);
    auto m = random_int_matrix(rows, cols, rng, 4);
    CHECK(static_cast<int>(matrix_rank(m)) == oracles::naive_rational_rank(m));
  }
}

TEST_CASE("rank is invariant under column permutation") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = 2 + static_cast<int>(rng.next() % 4);
    int cols = 2 + static_cast<int>(rng.next() % 5);
    auto m = random_int_matrix(rows, cols, rng, 5);
    std::vector<int> perm(cols);
    for (int i = 0; i < cols; ++i) perm[i] = i;
    for (int i = cols - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.next() % (i + 1)]);
    CHECK(matrix_rank(m) == matrix_rank(m.select_columns(perm)));
  }
}

TEST_CASE("in_span") {
  Matrix<Rational> a(3, 2);
  a.at(1, 0) = 1;  // e2
  a.at(2, 1) = 1;  // e3
  std::vector<Rational> zero(3, Rational(0));
  CHECK(in_span(zero, a));
  std::vector<Rational> e1{Rational(1), Rational(0), Rational(0)};
  CHECK_FALSE(in_span(e1, a));

  Matrix<Rational> b(3, 2);
  b.at(0, 0) = 1;  // e1
  b.at(1, 1) = 1;  // e2
  std::vector<Rational> e12{Rational(1), Rational(1), Rational(0)};
  CHECK(in_span(e12, b));
  std::vector<Rational> wrong_len{Rational(1)};
  CHECK_THROWS_AS(in_span(wrong_len, b), std::invalid_argument);

  Matrix<Cyclotomic> c(2, 1, Cyclotomic::zero(3));
  c.at(0, 0) = Cyclotomic::one(3);
  std::vector<Cyclotomic> mismatch{Cyclotomic::one(4), Cyclotomic::zero(4)};
  CHECK_THROWS_AS(in_span(mismatch, c), std::invalid_argument);
}

TEST_CASE("cyclotomic matrix rank") {
  // [[1, z], [z^2, 1]] over Q(zeta_3): det = 1 - z^3 = 0, so rank 1... z*z^2=1
  Matrix<Cyclotomic> m(2, 2, Cyclotomic::zero(3));
  m.at(0, 0) = Cyclotomic::one(3);
  m.at(0, 1) = Cyclotomic::root_power(3, 1);
  m.at(1, 0) = Cyclotomic::root_power(3, 2);
  m.at(1, 1) = Cyclotomic::one(3);
  CHECK(matrix_rank(m) == 1);
  m.at(1, 1) = Cyclotomic::root_power(3, 1);
  CHECK(matrix_rank(m) == 2);
}
