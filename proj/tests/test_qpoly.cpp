// Exact polynomial arithmetic and the q-analog helpers: integer polynomials,
// exact division, Gaussian binomials, rational Catalan numbers, power-series
// expansion of rational generating functions, numerator extraction.
#include <catch2/catch_amalgamated.hpp>

#include <numsgp/qpoly.hpp>

#include <cstdint>
#include <vector>

using numsgp::Int;
using numsgp::IntPolynomial;

TEST_CASE("polynomial construction normalizes trailing zeros", "[qpoly]") {
  const IntPolynomial p{1, 0, 2, 0, 0};
  REQUIRE(p.degree() == 2);
  REQUIRE(p == IntPolynomial{1, 0, 2});

  REQUIRE(IntPolynomial::zero().is_zero());
  REQUIRE(IntPolynomial::zero().degree() == IntPolynomial::kMinusInfinity);
  REQUIRE(IntPolynomial{0, 0, 0}.is_zero());
  REQUIRE(IntPolynomial::one().degree() == 0);

  // Out-of-range coefficient reads are zero, not UB.
  REQUIRE(p.coeff(5) == 0);
  REQUIRE(p.coeff(2) == 2);
}

TEST_CASE("polynomial ring operations", "[qpoly]") {
  const IntPolynomial p{1, 2};       // 1 + 2q
  const IntPolynomial q{3, 0, 1};    // 3 + q^2
  REQUIRE(p + q == IntPolynomial{4, 2, 1});
  REQUIRE(q - p == IntPolynomial{2, -2, 1});
  REQUIRE(p - p == IntPolynomial::zero());
  REQUIRE(p * q == IntPolynomial{3, 6, 1, 2});
  REQUIRE(p * IntPolynomial::zero() == IntPolynomial::zero());
  REQUIRE(p.shifted(2) == IntPolynomial{0, 0, 1, 2});
  REQUIRE(p.eval_one() == 3);
  REQUIRE((p * q).eval_one() == p.eval_one() * q.eval_one());

  REQUIRE(IntPolynomial::geometric_block(4) == IntPolynomial{1, 1, 1, 1});
  REQUIRE(IntPolynomial::geometric_block(3, 2) == IntPolynomial{0, 0, 1, 1, 1});
  REQUIRE(IntPolynomial::monomial(Int(-5), 3) == IntPolynomial{0, 0, 0, -5});

  REQUIRE(IntPolynomial({1, 0, 1}).to_string() == "1 + q^2");
  REQUIRE(IntPolynomial({0, -2, 3}).to_string() == "-2q + 3q^2");
  REQUIRE(IntPolynomial::zero().to_string() == "0");
}

TEST_CASE("exact division succeeds exactly when the quotient is integral",
          "[qpoly]") {
  // (1 - q^6) / (1 - q^2) = 1 + q^2 + q^4.
  const IntPolynomial num{1, 0, 0, 0, 0, 0, -1};
  const IntPolynomial den{1, 0, -1};
  REQUIRE(numsgp::exact_div(num, den) == IntPolynomial{1, 0, 1, 0, 1});

  // Round trip: (p*q)/q == p, including non-monic divisors.
  const IntPolynomial p{7, -3, 2};
  const IntPolynomial d{2, 5};
  REQUIRE(numsgp::exact_div(p * d, d) == p);

  REQUIRE(numsgp::exact_div(IntPolynomial::zero(), d) == IntPolynomial::zero());

  REQUIRE_THROWS_AS(numsgp::exact_div(p, IntPolynomial::zero()),
                    numsgp::BadArguments);
  // Degree too small, nonzero remainder, and non-divisible leading coefficient.
  REQUIRE_THROWS_AS(numsgp::exact_div(IntPolynomial{1, 1}, IntPolynomial{1, 1, 1}),
                    numsgp::InexactDivision);
  REQUIRE_THROWS_AS(numsgp::exact_div(IntPolynomial{1, 1, 1}, IntPolynomial{1, 1}),
                    numsgp::InexactDivision);
  REQUIRE_THROWS_AS(numsgp::exact_div(IntPolynomial{0, 0, 3}, IntPolynomial{0, 2}),
                    numsgp::InexactDivision);
}

TEST_CASE("integer binomial coefficients", "[qpoly]") {
  REQUIRE(numsgp::binomial(0, 0) == 1);
  REQUIRE(numsgp::binomial(7, 3) == 35);
  REQUIRE(numsgp::binomial(13, 4) == 715);
  // Exactness where 64-bit arithmetic would overflow.
  REQUIRE(numsgp::binomial(100, 50) ==
          Int("100891344545564193334812497256"));
  // Out-of-range indices are empty selections, not errors.
  REQUIRE(numsgp::binomial(3, 5) == 0);
  REQUIRE(numsgp::binomial(-1, 0) == 0);
}

TEST_CASE("gaussian binomials match known expansions", "[qpoly]") {
  using numsgp::gaussian_binomial;
  REQUIRE(gaussian_binomial(0, 0) == IntPolynomial::one());
  REQUIRE(gaussian_binomial(5, 0) == IntPolynomial::one());
  REQUIRE(gaussian_binomial(5, 5) == IntPolynomial::one());
  REQUIRE(gaussian_binomial(4, 2) == IntPolynomial{1, 1, 2, 1, 1});
  REQUIRE(gaussian_binomial(6, 3) ==
          IntPolynomial{1, 1, 2, 3, 3, 3, 3, 2, 1, 1});
  REQUIRE_THROWS_AS(gaussian_binomial(3, 4), numsgp::BadArguments);
}

TEST_CASE("gaussian binomial identities", "[qpoly][property]") {
  using numsgp::gaussian_binomial;
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto g = gaussian_binomial(n, k);
      INFO("n = " << n << ", k = " << k);
      // Column symmetry, evaluation at q = 1, degree, palindromicity.
      REQUIRE(g == gaussian_binomial(n, n - k));
      REQUIRE(g.eval_one() == numsgp::binomial(n, k));
      const int64_t deg = static_cast<int64_t>(k) * (n - k);
      if (k == 0 || k == n) {
        REQUIRE(g.degree() == 0);
      } else {
        REQUIRE(g.degree() == deg);
        for (int64_t i = 0; i <= deg; ++i) {
          REQUIRE(g.coeff(i) == g.coeff(deg - i));
        }
      }
      // Pascal recurrence in the q-world:
      // [n,k] = [n-1,k-1] + q^k [n-1,k].
      if (n >= 1 && k >= 1 && k <= n - 1) {
        REQUIRE(g == gaussian_binomial(n - 1, k - 1) +
                         gaussian_binomial(n - 1, k).shifted(k));
      }
    }
  }
}

TEST_CASE("rational Catalan numbers", "[qpoly]") {
  REQUIRE(numsgp::rational_catalan(2, 3) == 2);
  REQUIRE(numsgp::rational_catalan(3, 4) == 5);
  REQUIRE(numsgp::rational_catalan(3, 5) == 7);
  REQUIRE(numsgp::rational_catalan(4, 9) == 55);
  REQUIRE(numsgp::rational_catalan(5, 8) == 99);
  // (a, a+1) recovers the classical Catalan numbers.
  REQUIRE(numsgp::rational_catalan(4, 5) == 14);
  REQUIRE(numsgp::rational_catalan(5, 6) == 42);
  // binom(6,2)/6 = 15/6 is not an integer: the coprimality hypothesis matters.
  REQUIRE_THROWS_AS(numsgp::rational_catalan(2, 4), numsgp::InexactDivision);
}

TEST_CASE("series expansion of rational generating functions", "[qpoly]") {
  using numsgp::GFRational;

  SECTION("single denominator factor") {
    // (1 + q + q^2 + q^3)/(1 - q^2) has coefficients 1,1,2,2,2,...
    const GFRational g{IntPolynomial{1, 1, 1, 1}, {2}};
    const auto s = numsgp::expand(g, 6);
    REQUIRE(s.order() == 6);
    for (int64_t k = 0; k <= 6; ++k) {
      REQUIRE(s.coeff(k) == (k == 0 ? 1 : (k == 1 ? 1 : 2)));
    }
  }

  SECTION("two factors count partitions into parts of size 1 and 2") {
    const GFRational g{IntPolynomial::one(), {1, 2}};
    const auto s = numsgp::expand(g, 9);
    const std::vector<int64_t> expected = {1, 1, 2, 2, 3, 3, 4, 4, 5, 5};
    for (int64_t k = 0; k <= 9; ++k) {
      REQUIRE(s.coeff(static_cast<size_t>(k)) == expected[static_cast<size_t>(k)]);
    }
  }

  SECTION("pure polynomial (no denominator) truncates faithfully") {
    const GFRational g{IntPolynomial{4, 0, -1}, {}};
    const auto s = numsgp::expand(g, 5);
    REQUIRE(s.coeff(0) == 4);
    REQUIRE(s.coeff(2) == -1);
    REQUIRE(s.coeff(4) == 0);
  }

  SECTION("truncation below the numerator degree") {
    const GFRational g{IntPolynomial{1, 1, 1, 1}, {2}};
    const auto s = numsgp::expand(g, 1);
    REQUIRE(s.order() == 1);
    REQUIRE(s.coeff(0) == 1);
    REQUIRE(s.coeff(1) == 1);
  }
}

TEST_CASE("numerator extraction from a stabilized series", "[qpoly]") {
  using numsgp::SeriesTruncation;

  SECTION("worked example") {
    // Matching counts 1,1,2,2,2,2 with window 2 gives f = 1 + q^2, and the
    // series degree of f/(1-q) is deg f - 1 = 1.
    const SeriesTruncation s({1, 1, 2, 2, 2, 2});
    const auto out = numsgp::extract_numerator(s, 2);
    REQUIRE(out.numerator == IntPolynomial{1, 0, 1});
    REQUIRE(out.series_degree == 1);
  }

  SECTION("constant series") {
    const SeriesTruncation s({1, 1, 1});
    const auto out = numsgp::extract_numerator(s, 1);
    REQUIRE(out.numerator == IntPolynomial::one());
    REQUIRE(out.series_degree == -1);
  }

  SECTION("round trip against expansion") {
    const numsgp::GFRational g{IntPolynomial{1, 0, 2, 1}, {1}};
    const auto s = numsgp::expand(g, 12);
    const auto out = numsgp::extract_numerator(s, 4);
    REQUIRE(out.numerator == IntPolynomial{1, 0, 2, 1});
    REQUIRE(out.series_degree == 2);
  }

  SECTION("refuses a tail that has not stabilized") {
    const SeriesTruncation s({1, 1, 2, 3, 4, 5});
    REQUIRE_THROWS_AS(numsgp::extract_numerator(s, 2), numsgp::NotStabilized);
    // Window longer than the series can certify nothing.
    const SeriesTruncation t({1, 2});
    REQUIRE_THROWS_AS(numsgp::extract_numerator(t, 3), numsgp::NotStabilized);
    REQUIRE_THROWS_AS(numsgp::extract_numerator(t, 0), numsgp::BadArguments);
  }
}

TEST_CASE("series truncation basics", "[qpoly]") {
  REQUIRE_THROWS_AS(numsgp::SeriesTruncation(std::vector<Int>{}),
                    numsgp::BadArguments);
  const numsgp::SeriesTruncation s({1, 2, 3});
  REQUIRE(s.order() == 2);
  REQUIRE(s.truncated(1).order() == 1);
  REQUIRE(s.truncated(1).coeff(1) == 2);
  REQUIRE_THROWS_AS(s.truncated(5), numsgp::BadArguments);
}
