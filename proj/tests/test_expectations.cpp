#include <doctest.h>

#include <cmath>

#include "redwords/errors.hpp"
#include "redwords/expectations.hpp"
#include "redwords/tableaux.hpp"

using namespace redwords;

// Exact values below were computed with an independent rational-arithmetic
// script (Python fractions) from the double-factorial closed form, and for
// n <= 5 also by brute-force search over all letter sequences.

TEST_CASE("double factorial") {
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(8) == 384);
  CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
}

TEST_CASE("ratio of odd to even double factorials") {
  CHECK(double_factorial_ratio(0) == 1);
  CHECK(double_factorial_ratio(1) == Rational(3, 2));
  CHECK(double_factorial_ratio(2) == Rational(15, 8));
}

TEST_CASE("noncommuting summands") {
  CHECK(noncommuting_term(4, 1) == Rational(15, 8));
  CHECK(noncommuting_term(4, 2) == Rational(15, 8));
  CHECK(noncommuting_term(3, 1) == 2);
  CHECK(noncommuting_term(5, 1) == Rational(105, 64));
  CHECK(noncommuting_term(5, 2) == Rational(135, 64));
  CHECK_THROWS_AS(noncommuting_term(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(noncommuting_term(2, 1), std::invalid_argument);
  for (int n = 3; n <= 40; ++n)
    for (int j = 1; j <= n - 2; ++j) {
      CHECK(noncommuting_term(n, j) == noncommuting_term(n, n - 1 - j));
      // Each summand is 2(l-1) times a tableau ratio.
      CHECK(noncommuting_term(n, j) == Rational(n * (n - 1) - 2) * tableau_ratio(n, j));
    }
}

TEST_CASE("expected noncommuting pairs and commutations") {
  CHECK(expected_noncommuting(2) == 0);
  CHECK(expected_noncommuting(3) == 2);
  CHECK(expected_noncommuting(4) == Rational(15, 4));
  CHECK(expected_noncommuting(5) == Rational(345, 64));
  CHECK(expected_noncommuting(20) == Rational(BigInt("255732775589519747505"), BigInt("9223372036854775808")));

  CHECK(expected_commutations(2) == 0);
  CHECK(expected_commutations(3) == 0);
  CHECK(expected_commutations(4) == Rational(5, 4));
  CHECK(expected_commutations(5) == Rational(231, 64));
  CHECK(expected_commutations(6) == Rational(1799, 256));
  CHECK(expected_commutations(7) == Rational(47025, 4096));
  CHECK(expected_commutations(8) == Rational(1111311, 65536));
  CHECK(expected_commutations(9) == Rational(49177975, 2097152));
  CHECK(expected_commutations(10) == Rational(259662337, 8388608));
  CHECK_THROWS_AS(expected_commutations(1), std::invalid_argument);

  for (int n = 2; n <= 60; ++n) {
    CHECK(expected_commutations(n) + expected_noncommuting(n) == Rational(n * (n - 1) / 2 - 1));
    CHECK(expected_noncommuting(n) == expected_noncommuting_from_ratios(n));
  }
}

TEST_CASE("floating paths") {
  CHECK(kNoncommutingSlope == doctest::Approx(1.44101238957991497).epsilon(1e-15));
  CHECK(asymptotic_noncommuting(3) == doctest::Approx(4.32303716873974).epsilon(1e-13));

  // High-precision reference values of the exact sums.
  CHECK(expected_noncommuting_logspace(20) == doctest::Approx(27.7266030869905287).epsilon(1e-13));
  CHECK(expected_noncommuting_logspace(100) == doctest::Approx(143.281074106960437).epsilon(1e-13));
  CHECK(expected_noncommuting_logspace(300) == doctest::Approx(431.544137732291047).epsilon(1e-13));
  CHECK(expected_noncommuting_logspace(800) == doctest::Approx(1152.07277747168798).epsilon(1e-12));

  const double exact300 = expected_noncommuting(300).get_d();
  CHECK(std::abs(exact300 - expected_noncommuting_logspace(300)) <= 1e-12 * exact300);
  CHECK(expected_noncommuting_float(301) == expected_noncommuting_logspace(301));
  CHECK(expected_commutations_float(4) == 1.25);
  CHECK(expected_noncommuting_logspace(2) == 0.0);
}

TEST_CASE("distance to the asymptotic slope shrinks") {
  double previous = INFINITY;
  for (int n : {100, 200, 400, 800}) {
    const double gap = std::abs(expected_noncommuting_logspace(n) / n - kNoncommutingSlope);
    CHECK(gap < previous);
    previous = gap;
  }
}

TEST_CASE("proportions") {
  const Proportions p = proportions(10);
  CHECK(p.commutations == 1.0);
  CHECK(p.noncommuting == doctest::Approx(256.0 / (9 * M_PI * M_PI * 10)));
  CHECK(p.braids == doctest::Approx(0.02));
  CHECK(reiner_reference() == 1);
}

TEST_CASE("dp route agrees with the closed form") {
  for (int n = 3; n <= 8; ++n) {
    CountingSession session(n);
    CHECK(expected_noncommuting_dp(session) == expected_noncommuting(n));
    CHECK(expected_braids_dp(session) == 1);
  }
}

TEST_CASE("enumeration means") {
  const auto m3 = enumeration_means(3);
  CHECK(m3.words == 2);
  CHECK(m3.commutations == 0);
  CHECK(m3.noncommuting == 2);
  CHECK(m3.braids == 1);

  const auto m4 = enumeration_means(4);
  CHECK(m4.words == 16);
  CHECK(m4.commutations == Rational(5, 4));
  CHECK(m4.noncommuting == Rational(15, 4));
  CHECK(m4.braids == 1);
  CHECK(m4.ascending_pairs == m4.descending_pairs);

  CHECK(enumeration_means(5).commutations == Rational(231, 64));
  CHECK_THROWS_AS(enumeration_means(7), ResourceCapExceeded);
}

TEST_CASE("expectation reports") {
  for (Method m : {Method::closed_form, Method::dp, Method::enumeration}) {
    const auto rep = expectation_report(4, m);
    REQUIRE(rep.e_commutations);
    CHECK(*rep.e_commutations == Rational(5, 4));
    CHECK(*rep.e_commutations + *rep.e_noncommuting == 5);
    CHECK(rep.float_value == 1.25);
    CHECK(rep.e_braids_reference == 1);
  }
  CHECK(*expectation_report(5, Method::dp).e_commutations == Rational(231, 64));

  const auto big = expectation_report(400, Method::closed_form);
  CHECK_FALSE(big.e_commutations);
  CHECK(big.float_value == doctest::Approx(400 * 399 / 2 - 1 - expected_noncommuting_logspace(400)));

  CHECK_THROWS_AS(expectation_report(7, Method::enumeration), ResourceCapExceeded);
  CHECK_THROWS_AS(expectation_report(11, Method::dp), ResourceCapExceeded);
  CHECK(parse_method("enumerate") == Method::enumeration);
  CHECK_FALSE(parse_method("brute"));
}
