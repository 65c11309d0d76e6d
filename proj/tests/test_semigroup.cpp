// Core semigroup machinery: construction, Apéry sets, frobenius/genus,
// membership, divisor lists.  Frozen values below were cross-checked by an
// independent sieve (dynamic programming over reachability), which several
// sections also run inline.
#include <catch2/catch_amalgamated.hpp>

#include <numsgp/semigroup.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

using numsgp::NumericalSemigroup;
using numsgp::make_semigroup;

namespace {

// Independent membership oracle: mark reachable sums by DP up to `limit`.
std::vector<char> reachable_sieve(const std::vector<int64_t>& gens, int64_t limit) {
  std::vector<char> in(static_cast<size_t>(limit) + 1, 0);
  in[0] = 1;
  for (int64_t x = 1; x <= limit; ++x) {
    for (int64_t g : gens) {
      if (g <= x && in[static_cast<size_t>(x - g)]) {
        in[static_cast<size_t>(x)] = 1;
        break;
      }
    }
  }
  return in;
}

}  // namespace

TEST_CASE("two-generator semigroup invariants", "[semigroup]") {
  const auto s = make_semigroup({3, 4});
  REQUIRE(s.generators() == std::vector<int64_t>{3, 4});
  REQUIRE(s.multiplicity() == 3);
  REQUIRE(s.embedding_dimension() == 2);
  REQUIRE(s.apery() == std::vector<int64_t>{0, 4, 8});
  REQUIRE(s.frobenius() == 5);
  REQUIRE(s.genus() == 3);
  REQUIRE(s.gaps() == std::vector<int64_t>{1, 2, 5});
  REQUIRE(s.small_elements() == std::vector<int64_t>{0, 3, 4});
}

TEST_CASE("the full numerical semigroup from generator 1", "[semigroup]") {
  const auto n = make_semigroup({1});
  REQUIRE(n.multiplicity() == 1);
  REQUIRE(n.apery() == std::vector<int64_t>{0});
  REQUIRE(n.frobenius() == -1);
  REQUIRE(n.genus() == 0);
  REQUIRE(n.gaps().empty());
  // Small elements live in [0, frobenius], an empty range here.
  REQUIRE(n.small_elements().empty());
  REQUIRE(n.contains(0));
  REQUIRE(n.contains(7));
  REQUIRE_FALSE(n.contains(-1));
}

TEST_CASE("redundant generators are dropped", "[semigroup]") {
  // 8 = 3 + 5, so it is not part of the minimal generating set.
  const auto s = make_semigroup({3, 4, 5, 8});
  REQUIRE(s.generators() == std::vector<int64_t>{3, 4, 5});
  REQUIRE(s.embedding_dimension() == 3);
  REQUIRE(s.frobenius() == 2);
  REQUIRE(s.gaps() == std::vector<int64_t>{1, 2});

  // Duplicates and unsorted input are tolerated.
  const auto t = make_semigroup({7, 5, 5, 3});
  REQUIRE(t.generators() == std::vector<int64_t>{3, 5, 7});
}

TEST_CASE("construction rejects bad input", "[semigroup][errors]") {
  REQUIRE_THROWS_AS(make_semigroup({}), numsgp::EmptyInput);
  REQUIRE_THROWS_AS(make_semigroup({0}), numsgp::BadArguments);
  REQUIRE_THROWS_AS(make_semigroup({-3, 4}), numsgp::BadArguments);
  REQUIRE_THROWS_AS(make_semigroup({2, 4}), numsgp::NonCoprimeGenerators);
  REQUIRE_THROWS_AS(make_semigroup({4, 6, 10}), numsgp::NonCoprimeGenerators);
  REQUIRE_THROWS_AS(make_semigroup({numsgp::kMaxGeneratorValue + 1, 3}),
                    numsgp::BadArguments);

  // {6,10,15} is fine: pairwise gcds are 2, 3, 5 but the overall gcd is 1.
  REQUIRE_NOTHROW(make_semigroup({6, 10, 15}));
}

TEST_CASE("membership agrees with a reachability sieve", "[semigroup]") {
  const std::vector<std::vector<int64_t>> cases = {
      {2, 3}, {3, 4}, {3, 5, 7}, {4, 7, 9}, {6, 10, 15}, {5, 11}};
  for (const auto& gens : cases) {
    const auto s = make_semigroup(gens);
    const int64_t limit = s.frobenius() + 2 * gens.back() + 1;
    const auto sieve = reachable_sieve(gens, limit);
    for (int64_t x = 0; x <= limit; ++x) {
      INFO("gens front " << gens.front() << ", x = " << x);
      REQUIRE(s.contains(x) == static_cast<bool>(sieve[static_cast<size_t>(x)]));
    }
    REQUIRE_FALSE(s.contains(-1));
    REQUIRE_FALSE(s.contains(-100));
  }
}

TEST_CASE("apery set holds the least element of each residue class", "[semigroup]") {
  for (const auto& gens :
       std::vector<std::vector<int64_t>>{{3, 4}, {3, 5, 7}, {4, 7, 9}, {5, 7, 8}}) {
    const auto s = make_semigroup(gens);
    const int64_t m = s.multiplicity();
    const auto& ap = s.apery();
    REQUIRE(std::ssize(ap) == m);
    for (int64_t r = 0; r < m; ++r) {
      REQUIRE(ap[static_cast<size_t>(r)] % m == r);
      REQUIRE(s.contains(ap[static_cast<size_t>(r)]));
      // Minimality: stepping down by m leaves the semigroup.
      if (ap[static_cast<size_t>(r)] >= m) {
        REQUIRE_FALSE(s.contains(ap[static_cast<size_t>(r)] - m));
      }
    }
  }
}

TEST_CASE("classical two-generator formulas hold for all small coprime pairs",
          "[semigroup][property]") {
  // F(<a,b>) = ab - a - b and g(<a,b>) = (a-1)(b-1)/2.
  for (int64_t a = 2; a <= 12; ++a) {
    for (int64_t b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto s = make_semigroup({a, b});
      INFO("a = " << a << ", b = " << b);
      REQUIRE(s.frobenius() == a * b - a - b);
      REQUIRE(s.genus() == (a - 1) * (b - 1) / 2);
      REQUIRE(numsgp::sylvester_frobenius(a, b) == s.frobenius());
      // Everything past the frobenius number is in the semigroup.
      REQUIRE(s.contains(s.frobenius() + 1));
      REQUIRE(s.contains(s.frobenius() + 2));
      REQUIRE_FALSE(s.contains(s.frobenius()));
    }
  }
}

TEST_CASE("gap and small-element counts are consistent", "[semigroup]") {
  for (const auto& gens :
       std::vector<std::vector<int64_t>>{{2, 3}, {3, 4}, {3, 5, 7}, {5, 7, 8, 9}}) {
    const auto s = make_semigroup(gens);
    REQUIRE(std::ssize(s.gaps()) == s.genus());
    // small_elements() covers [0, F] members, so the two lists partition [0, F].
    REQUIRE(std::ssize(s.small_elements()) + s.genus() == s.frobenius() + 1);
    for (int64_t g : s.gaps()) REQUIRE_FALSE(s.contains(g));
    for (int64_t e : s.small_elements()) REQUIRE(s.contains(e));
  }
}

TEST_CASE("sylvester_frobenius validates its arguments", "[semigroup][errors]") {
  REQUIRE(numsgp::sylvester_frobenius(2, 3) == 1);
  REQUIRE(numsgp::sylvester_frobenius(4, 9) == 23);
  REQUIRE_THROWS_AS(numsgp::sylvester_frobenius(2, 4), numsgp::NonCoprimeGenerators);
  REQUIRE_THROWS_AS(numsgp::sylvester_frobenius(1, 5), numsgp::BadArguments);
  REQUIRE_THROWS_AS(numsgp::sylvester_frobenius(3, numsgp::kMaxGeneratorValue + 1),
                    numsgp::BadArguments);
}

TEST_CASE("divisors_in lists the in-semigroup divisors of an element", "[semigroup]") {
  const auto s = make_semigroup({3, 4});
  REQUIRE(numsgp::divisors_in(s, 0) == std::vector<int64_t>{0});
  // d divides 8 when both d and 8-d lie in the semigroup.
  REQUIRE(numsgp::divisors_in(s, 8) == std::vector<int64_t>{0, 4, 8});
  REQUIRE(numsgp::divisors_in(s, 12) == std::vector<int64_t>{0, 3, 4, 6, 8, 9, 12});
  REQUIRE_THROWS_AS(numsgp::divisors_in(s, 5), numsgp::NotAnElement);
  REQUIRE_THROWS_AS(numsgp::divisors_in(s, -2), numsgp::NotAnElement);

  const auto n = make_semigroup({1});
  REQUIRE(numsgp::divisors_in(n, 3) == std::vector<int64_t>{0, 1, 2, 3});
}

TEST_CASE("divisor lists are symmetric and nested along divisibility",
          "[semigroup][property]") {
  const auto s = make_semigroup({3, 5, 7});
  for (int64_t x = 0; x <= 40; ++x) {
    if (!s.contains(x)) continue;
    const auto divs = numsgp::divisors_in(s, x);
    REQUIRE(std::is_sorted(divs.begin(), divs.end()));
    for (int64_t d : divs) {
      // x - d is again a divisor of x (complement symmetry)...
      REQUIRE(std::binary_search(divs.begin(), divs.end(), x - d));
      // ...and everything dividing d also divides x (transitivity).
      for (int64_t e : numsgp::divisors_in(s, d)) {
        REQUIRE(std::binary_search(divs.begin(), divs.end(), e));
      }
    }
  }
}
