#pragma once

#include <numbers>
#include <optional>
#include <string_view>

#include "redwords/counting.hpp"
#include "redwords/numeric.hpp"

namespace redwords {

// Largest n accepted by each evaluation route.
inline constexpr int kEnumerationMaxN = 6;
inline constexpr int kDpMaxN = 10;
inline constexpr int kExactClosedFormMaxN = 300;

/// 128 / (9 pi^2): slope of the expected number of noncommuting pairs in n.
inline constexpr double kNoncommutingSlope = 128.0 / (9.0 * std::numbers::pi * std::numbers::pi);

/// m(m-2)(m-4)... down to 1 or 2; (-1)!! = 0!! = 1. Rejects m < -1.
BigInt double_factorial(int m);

/// (2i+1)!! / (2i)!! = (3*5*...*(2i+1)) / (2*4*...*(2i)); equal to 1 at i = 0.
Rational double_factorial_ratio(int i);

/// j-th summand of the expected number of noncommuting pairs in a reduced
/// word of w_0 in S_n, for n >= 3 and 1 <= j <= n-2:
///
///   (2j-1)!!/(j-1)! * (2j+1)!!/j! * (2n-2j-3)!!/(n-j-2)! * (2n-2j-1)!!/(n-j-1)!
///   ------------------------------------------------------------------------
///                          3 * C(n,2) * 2^(2n-7)
///
/// The power of two is held as a rational (it is 1/2 at n = 3).
Rational noncommuting_term(int n, int j);

/// Sum of noncommuting_term over j: expected count of adjacent positions k
/// with |i_k - i_{k+1}| = 1. Zero for n = 2.
Rational expected_noncommuting(int n);

/// Same quantity coded through 8/(3 C(n,2)) * sum u_{j-1} u_j u_{n-j-2} u_{n-j-1},
/// u = double_factorial_ratio.
Rational expected_noncommuting_from_ratios(int n);

/// C(n,2) - 1 - expected_noncommuting(n). Requires n >= 2.
Rational expected_commutations(int n);

/// Floating evaluation by summing exp(log(8/(3l)) + log u_{j-1} + ...), with
/// log u_i accumulated as sum log1p(1/(2k)). Works for any n >= 2.
double expected_noncommuting_logspace(int n);

/// Exact path converted to double up to kExactClosedFormMaxN, log-space above.
double expected_noncommuting_float(int n);
double expected_commutations_float(int n);

/// Leading term kNoncommutingSlope * n.
double asymptotic_noncommuting(int n);

struct Proportions {
  double commutations;
  double noncommuting;
  double braids;
};

/// Leading-order per-length proportions (1, 256/(9 pi^2 n), 2/n^2).
Proportions proportions(int n);

/// Expected number of long braid moves in a reduced word of w_0, for n >= 3.
inline Rational reiner_reference() { return Rational(1); }

/// 2(l-1) * sum_j P(word starts j, j+1): uses that every position of a
/// uniformly random word of w_0 is distributed like the first (rotation).
Rational expected_noncommuting_dp(CountingSession& session);

/// (l-2) * sum_j [P(starts j, j+1, j) + P(starts j+1, j, j+1)].
Rational expected_braids_dp(CountingSession& session);

struct EnumerationMeans {
  BigInt words;
  Rational commutations;
  Rational noncommuting;
  Rational braids;
  Rational ascending_pairs;
  Rational descending_pairs;
};

/// Exact means of WordStats over every reduced word of w_0 in S_n.
EnumerationMeans enumeration_means(int n);

enum class Method { closed_form, dp, enumeration };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view s);

struct ExpectationReport {
  int n = 0;
  std::optional<Rational> e_commutations;  // absent when only the float path applies
  std::optional<Rational> e_noncommuting;
  Rational e_braids_reference = reiner_reference();
  Method method = Method::closed_form;
  double float_value = 0.0;  // E(commutations)
  double noncommuting_float = 0.0;
};

/// Throws ResourceCapExceeded if n is beyond the method's cap and
/// std::invalid_argument for n < 2 (n < 3 for dp).
ExpectationReport expectation_report(int n, Method method);

}  // namespace redwords
