#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catwalk/enumerate.hpp"
#include "catwalk/series.hpp"

using namespace catwalk;

namespace {

Series from_ints(const std::vector<long long>& v) {
  Series s(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    s.set(static_cast<int>(i), Rational(v[i]));
  }
  return s;
}

BigInt int_coeff(const Series& s, int n) {
  REQUIRE(boost::multiprecision::denominator(s[n]) == 1);
  return BigInt(boost::multiprecision::numerator(s[n]));
}

}  // namespace

TEST_CASE("arithmetic basics") {
  const Series one_plus = from_ints({1, 1, 0});
  const Series one_minus = from_ints({1, -1, 0});
  const Series product = one_plus * one_minus;
  CHECK(product == from_ints({1, 0, -1}));

  const Series geometric = Series::constant(1, 8) / from_ints({1, -1, 0, 0, 0, 0, 0, 0});
  for (int i = 0; i < 8; ++i) CHECK(geometric[i] == 1);

  // 1 / (1 - x - x^2) carries the Fibonacci numbers; oracle by recurrence.
  Series fib = Series::constant(1, 12) /
               (Series::constant(1, 12) - Series::monomial(1, 1, 12) -
                Series::monomial(1, 2, 12));
  long long a = 1, b = 1;
  for (int i = 0; i < 12; ++i) {
    CHECK(fib[i] == a);
    const long long next = a + b;
    a = b;
    b = next;
  }

  CHECK_THROWS_AS(Series::constant(1, 4) / Series::monomial(1, 1, 4),
                  std::invalid_argument);
  CHECK(from_ints({1, 2}) + from_ints({1, 2, 3}) == from_ints({2, 4}));
  CHECK((from_ints({1, 2}) + from_ints({1, 2, 3})).order() == 2);
}

TEST_CASE("sqrt") {
  CHECK(sqrt_series(Series::constant(1, 6)) == Series::constant(1, 6));

  // Coefficients of sqrt(1-4x): 1 then -2 Catalan(k-1).
  const int order = 20;
  Series s = sqrt_series(Series::constant(1, order) -
                         Series::monomial(4, 1, order));
  Series catalan = gf("catalan", order);
  CHECK(s[0] == 1);
  for (int k = 1; k < order; ++k) {
    CHECK(s[k] == -2 * catalan[k - 1]);
  }

  // Defining identity at high order, in x^2.
  const Series radicand = Series::constant(1, 64) - Series::monomial(4, 2, 64);
  const Series root = sqrt_series(radicand);
  CHECK(root * root == radicand);
  const std::vector<long long> head = {1, 0, -2, 0, -2, 0, -4, 0, -10};
  for (std::size_t k = 0; k < head.size(); ++k) {
    CHECK(root[static_cast<int>(k)] == head[k]);
  }

  CHECK_THROWS_AS(sqrt_series(Series::constant(2, 4)), std::invalid_argument);
}

TEST_CASE("compose_geom") {
  // x / (1-x)^2: coefficients 0, 1, 2, 3, ...
  Series s = compose_geom(Series::monomial(1, 1, 10));
  for (int i = 0; i < 10; ++i) CHECK(s[i] == i);

  Series c = compose_geom(Series::constant(1, 10));
  for (int i = 0; i < 10; ++i) CHECK(c[i] == 1);

  // Motzkin meanders with catastrophes arise from the Dyck ones by flats.
  Series mprime = compose_geom(gf("M", 26));
  for (int n = 0; n <= 25; ++n) {
    CHECK(int_coeff(mprime, n) == count_dp(Family::motzkin_meander_cat, n));
  }
}

TEST_CASE("named generating functions against the counting oracles") {
  CHECK(int_coeff(gf("M", 6), 0) == 1);
  Series m = gf("M", 31);
  Series aprime = gf("Aprime", 31);
  for (int n = 0; n <= 30; ++n) {
    CHECK(int_coeff(m, n) == count_dp(Family::dyck_meander_cat, n));
    CHECK(int_coeff(aprime, n) == count_dp(Family::dyck_excursion_cat, n));
  }

  Series astar = gf("Astar", 11);
  Series catalan = gf("catalan", 11);
  for (int n = 0; n <= 10; ++n) {
    if (n % 2 == 0) {
      CHECK(astar[n] == catalan[n / 2]);
    } else {
      CHECK(astar[n] == 0);
    }
    CHECK(int_coeff(astar, n) == enumeration_count(Family::a_star, n));
  }

  Series motzkin = gf("motzkin", 13);
  for (int n = 0; n <= 12; ++n) {
    CHECK(int_coeff(motzkin, n) == count_dp(Family::motzkin, n));
  }
  for (int n = 0; n <= 10; ++n) {
    CHECK(int_coeff(catalan, n) == count_dp(Family::dyck, n));
  }

  CHECK_THROWS_AS(gf("nope", 8), std::invalid_argument);
}

TEST_CASE("series coefficients of the counting functions are integers") {
  for (const char* name : {"M", "Mprime", "Astar", "Aprime", "catalan",
                           "motzkin"}) {
    Series s = gf(name, 40);
    for (int n = 0; n < 40; ++n) {
      CHECK(boost::multiprecision::denominator(s[n]) == 1);
    }
  }
}

TEST_CASE("excursions are meanders one step shorter, coefficient-wise") {
  for (int n = 1; n <= 25; ++n) {
    CHECK(count_dp(Family::motzkin_excursion_cat, n) ==
          count_dp(Family::motzkin_meander_cat, n - 1));
  }
}

TEST_CASE("functional equation report") {
  IdentityReport report = check_identities(32);
  CHECK(report.pass);
  for (const IdentityCheck& c : report.checks) {
    INFO(c.name);
    CHECK(c.pass);
    CHECK(c.first_failing_exponent == -1);
  }
  REQUIRE(report.checks.size() == 5);
  CHECK(report.checks[0].name == "astar_equation");
  CHECK(report.checks[4].name == "aprime_reconstruction");
  CHECK_THROWS_AS(check_identities(4), std::invalid_argument);
}
