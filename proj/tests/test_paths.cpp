// Lattice-path words over {D,R} for two-generator semigroups: validation,
// the word <-> gap-set bijection, the inversion statistic, and the closed
// generating function built from a Gaussian binomial.
#include <catch2/catch_amalgamated.hpp>

#include <numsgp/census.hpp>
#include <numsgp/paths.hpp>
#include <numsgp/render.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

using numsgp::IdealGapSet;
using numsgp::Int;
using numsgp::IntPolynomial;
using numsgp::make_semigroup;

TEST_CASE("word validation", "[paths]") {
  SECTION("valid words") {
    REQUIRE(numsgp::validate_word("RDRRDRD", 3, 4));
    REQUIRE(numsgp::validate_word("DDD", 3, 4));
    REQUIRE(numsgp::validate_word("DD", 2, 3));
    // Leading R letters are unrestricted...
    REQUIRE(numsgp::validate_word("RRRRRRRRDD", 2, 3));
    // ...and the inner-R bound is inclusive.
    REQUIRE(numsgp::validate_word("DRRRD", 2, 3));
  }
  SECTION("each violated condition is named") {
    auto why = numsgp::word_violation("DD", 3, 4);
    REQUIRE(why.has_value());
    REQUIRE(why->find("condition (1)") != std::string::npos);

    why = numsgp::word_violation("DDDR", 3, 4);
    REQUIRE(why.has_value());
    REQUIRE(why->find("condition (2)") != std::string::npos);

    why = numsgp::word_violation("RDRRDRRRD", 3, 4);
    REQUIRE(why.has_value());
    REQUIRE(why->find("condition (3)") != std::string::npos);

    why = numsgp::word_violation("DXD", 2, 3);
    REQUIRE(why.has_value());
    REQUIRE(why->find("alphabet") != std::string::npos);

    REQUIRE_FALSE(numsgp::validate_word("DRRRRD", 2, 3));  // 4 inner R > b = 3
    REQUIRE_THROWS_AS(numsgp::word_violation("DD", 0, 3), numsgp::BadArguments);
  }
}

TEST_CASE("inversion counting", "[paths]") {
  REQUIRE(numsgp::inversions("DD") == 0);
  REQUIRE(numsgp::inversions("RRDD") == 4);
  REQUIRE(numsgp::inversions("RDRRDRD") == 8);
  REQUIRE(numsgp::inversions("RRDDD") == 6);
  REQUIRE(numsgp::inversions("") == 0);
}

TEST_CASE("word to gap set and row data", "[paths]") {
  SECTION("worked seven-letter example over <3,4>") {
    const auto d = numsgp::word_to_gapset("RDRRDRD", 3, 4);
    REQUIRE(d.gaps_of_ideal == std::vector<int64_t>{0, 3, 4, 6, 7, 8, 9, 10});
    REQUIRE(d.codim() == numsgp::inversions("RDRRDRD"));
    REQUIRE(numsgp::row_minima("RDRRDRD", 3, 4) ==
            std::vector<int64_t>{12, 13, 11});
  }
  SECTION("all-D word is the whole semigroup") {
    REQUIRE(numsgp::word_to_gapset("DDD", 3, 4).codim() == 0);
    REQUIRE(numsgp::row_minima("DD", 2, 3) == std::vector<int64_t>{0, 3});
  }
  SECTION("leading R block") {
    const auto d = numsgp::word_to_gapset("RRDDD", 3, 4);
    REQUIRE(d.gaps_of_ideal == std::vector<int64_t>{0, 3, 4, 7, 8, 11});
  }
  SECTION("invalid words are rejected with the reason") {
    REQUIRE_THROWS_AS(numsgp::word_to_gapset("DRDR", 2, 3), numsgp::InvalidWord);
    REQUIRE_THROWS_AS(numsgp::row_minima("D", 2, 3), numsgp::InvalidWord);
  }
}

TEST_CASE("gap set back to word", "[paths]") {
  const auto s = make_semigroup({2, 3});
  REQUIRE(numsgp::gapset_to_word(2, 3, IdealGapSet{{0}}) == "DRD");
  REQUIRE(numsgp::gapset_to_word(2, 3, IdealGapSet{}) == "DD");
  REQUIRE(numsgp::gapset_to_word(3, 4, IdealGapSet{{0, 3, 4, 6, 7, 8, 9, 10}}) ==
          "RDRRDRD");
  REQUIRE_THROWS_AS(numsgp::gapset_to_word(2, 3, IdealGapSet{{3}}),
                    numsgp::NotAnIdeal);
}

TEST_CASE("words and ideals are in codim-preserving bijection",
          "[paths][property]") {
  for (const auto [a, b] : std::vector<std::pair<int64_t, int64_t>>{
           {2, 3}, {3, 4}, {4, 5}, {3, 7}}) {
    const auto s = make_semigroup({a, b});
    std::set<std::string> seen;
    for (const auto& ideal : numsgp::collect_ideals(s, 8)) {
      const auto word = numsgp::gapset_to_word(a, b, ideal);
      INFO("a=" << a << " b=" << b << " word " << word);
      REQUIRE(numsgp::validate_word(word, a, b));
      REQUIRE(numsgp::word_to_gapset(word, a, b) == ideal);
      REQUIRE(numsgp::inversions(word) == ideal.codim());
      REQUIRE(seen.insert(word).second);  // injective
    }
  }
}

TEST_CASE("listing words of a fixed codimension", "[paths]") {
  REQUIRE(numsgp::words_of_codim(2, 3, 0) == std::vector<std::string>{"DD"});
  const auto w2 = numsgp::words_of_codim(3, 4, 2);
  REQUIRE(w2.size() == 2);
  for (const auto& w : w2) REQUIRE(numsgp::inversions(w) == 2);

  // Counts agree with the census for every codimension it covers.
  const auto table = numsgp::census(make_semigroup({3, 4}), 6);
  for (int64_t k = 0; k <= 6; ++k) {
    REQUIRE(Int(numsgp::words_of_codim(3, 4, k).size()) ==
            table.counts[static_cast<size_t>(k)]);
  }
}

TEST_CASE("inversion generating sum over fixed-length words is the Gaussian binomial",
          "[paths][property]") {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      INFO("n = " << n << ", k = " << k);
      REQUIRE(numsgp::word_sum_qbinomial(n, k) == numsgp::gaussian_binomial(n, k));
    }
  }
  REQUIRE_THROWS_AS(numsgp::word_sum_qbinomial(15, 2), numsgp::BadArguments);
  REQUIRE_THROWS_AS(numsgp::word_sum_qbinomial(4, 5), numsgp::BadArguments);
}

TEST_CASE("closed generating function for two generators", "[paths]") {
  SECTION("numerator and denominator shape") {
    const auto g = numsgp::closed_form_two_gen(2, 3);
    REQUIRE(g.numerator == numsgp::gaussian_binomial(4, 1));
    REQUIRE(g.denominator_factors == std::vector<long long>{2});
    const auto series = numsgp::expand(g, 6);
    const std::vector<Int> expected = {1, 1, 2, 2, 2, 2, 2};
    for (int64_t k = 0; k <= 6; ++k)
      REQUIRE(series.coeff(k) == expected[static_cast<size_t>(k)]);
  }
  SECTION("generator order does not change the series") {
    // <a,b> = <b,a>, so the two closed forms — different numerators over
    // different denominators — must expand identically.
    const auto s1 = numsgp::expand(numsgp::closed_form_two_gen(2, 3), 20);
    const auto s2 = numsgp::expand(numsgp::closed_form_two_gen(3, 2), 20);
    REQUIRE(s1 == s2);
    REQUIRE(numsgp::expand(numsgp::closed_form_two_gen(3, 4), 20) ==
            numsgp::expand(numsgp::closed_form_two_gen(4, 3), 20));
  }
  SECTION("matches the census for all small coprime pairs") {
    for (int64_t a = 2; a <= 7; ++a) {
      for (int64_t b = 2; b <= 8; ++b) {
        if (a == b || std::gcd(a, b) != 1) continue;
        const auto s = make_semigroup({a, b});
        const int64_t order = s.frobenius() + 2 * s.multiplicity() + 2;
        const auto from_census = numsgp::ideal_gf(s, order);
        const auto from_formula = numsgp::expand(numsgp::closed_form_two_gen(a, b),
                                                 static_cast<int>(order));
        INFO("a = " << a << ", b = " << b);
        REQUIRE(from_census == from_formula);
      }
    }
  }
  SECTION("validation") {
    REQUIRE_THROWS_AS(numsgp::closed_form_two_gen(2, 4),
                      numsgp::NonCoprimeGenerators);
    REQUIRE_THROWS_AS(numsgp::closed_form_two_gen(1, 5), numsgp::BadArguments);
  }
}

TEST_CASE("stable ideal count is the rational Catalan number",
          "[paths][property]") {
  // The coefficients of I(S;q) for S = <a,b> stabilize at binom(a+b,a)/(a+b).
  for (const auto [a, b] : std::vector<std::pair<int64_t, int64_t>>{
           {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {5, 6}}) {
    const auto s = make_semigroup({a, b});
    const auto table =
        numsgp::census(s, s.frobenius() + 2 * s.multiplicity() + 2);
    INFO("a = " << a << ", b = " << b);
    REQUIRE(table.stable_value == numsgp::rational_catalan(a, b));
    REQUIRE(table.onset.has_value());
  }
}

TEST_CASE("path rendering shows labels and brackets gap cells", "[paths][render]") {
  const std::string art = numsgp::render_path_text("DRD", 2, 3);
  // Grid for <2,3> with gap set {0}: top row starts at 3, bottom row holds
  // the bracketed 0.
  REQUIRE(art.find("[0]") != std::string::npos);
  REQUIRE(art.find("3") != std::string::npos);

  const std::string svg = numsgp::render_path_svg("DRD", 2, 3);
  REQUIRE(svg.rfind("<svg", 0) == 0);
  REQUIRE(svg.find("</svg>") != std::string::npos);
  REQUIRE(svg.find("polyline") != std::string::npos);
  // Exactly one shaded (gap) cell for codim 1.
  size_t shaded = 0;
  for (size_t pos = svg.find("#d7d7d7"); pos != std::string::npos;
       pos = svg.find("#d7d7d7", pos + 1))
    ++shaded;
  REQUIRE(shaded == 1);

  REQUIRE_THROWS_AS(numsgp::render_path_text("DDR", 2, 3), numsgp::InvalidWord);
}
