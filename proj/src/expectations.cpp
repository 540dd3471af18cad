#include "redwords/expectations.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "redwords/errors.hpp"
#include "redwords/permutation.hpp"

namespace redwords {

namespace {

BigInt factorial(int m) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  return f;
}

BigInt binom2(int n) { return BigInt(n) * (n - 1) / 2; }

/// (2x-1)!! / (x-1)! for x >= 1.
Rational odd_over_factorial(int x) { return make_rational(double_factorial(2 * x - 1), factorial(x - 1)); }

void require_term_range(int n, int j) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (j < 1 || j > n - 2) {
    throw std::invalid_argument("j = " + std::to_string(j) + " outside [1, " + std::to_string(n - 2) + "]");
  }
}

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
}

}  // namespace

BigInt double_factorial(int m) {
  if (m < -1) throw std::invalid_argument("double factorial undefined below -1");
  if (m <= 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

Rational double_factorial_ratio(int i) {
  if (i < 0) throw std::invalid_argument("double_factorial_ratio needs i >= 0");
  return make_rational(double_factorial(2 * i + 1), double_factorial(2 * i));
}

Rational noncommuting_term(int n, int j) {
  require_term_range(n, j);
  Rational prefactor = make_rational(1, 3 * binom2(n));
  const int e = 2 * n - 7;
  BigInt pow2 = 1;
  pow2 <<= static_cast<unsigned long>(std::abs(e));
  prefactor = e >= 0 ? Rational(prefactor / pow2) : Rational(prefactor * pow2);

  const Rational a = odd_over_factorial(j);
  const Rational b = make_rational(double_factorial(2 * j + 1), factorial(j));
  const Rational c = odd_over_factorial(n - j - 1);
  const Rational d = make_rational(double_factorial(2 * n - 2 * j - 1), factorial(n - j - 1));
  Rational t = prefactor * a * b * c * d;
  t.canonicalize();
  return t;
}

Rational expected_noncommuting(int n) {
  require_n(n);
  Rational sum = 0;
  for (int j = 1; j <= n - 2; ++j) sum += noncommuting_term(n, j);
  return sum;
}

Rational expected_noncommuting_from_ratios(int n) {
  require_n(n);
  std::vector<Rational> u;
  for (int i = 0; i <= n - 2; ++i) u.push_back(double_factorial_ratio(i));
  Rational sum = 0;
  for (int j = 1; j <= n - 2; ++j) sum += u[j - 1] * u[j] * u[n - j - 2] * u[n - j - 1];
  Rational r = make_rational(8, 3 * binom2(n)) * sum;
  r.canonicalize();
  return r;
}

Rational expected_commutations(int n) {
  require_n(n);
  Rational r = Rational(binom2(n) - 1) - expected_noncommuting(n);
  r.canonicalize();
  return r;
}

double expected_noncommuting_logspace(int n) {
  require_n(n);
  std::vector<double> log_u(static_cast<std::size_t>(n), 0.0);
  for (int i = 1; i < n; ++i) log_u[i] = log_u[i - 1] + std::log1p(1.0 / (2.0 * i));
  const double ell = 0.5 * n * (n - 1.0);
  const double log_prefactor = std::log(8.0 / (3.0 * ell));
  double sum = 0.0;
  for (int j = 1; j <= n - 2; ++j) {
    sum += std::exp(log_prefactor + log_u[j - 1] + log_u[j] + log_u[n - j - 2] + log_u[n - j - 1]);
  }
  return sum;
}

double expected_noncommuting_float(int n) {
  if (n <= kExactClosedFormMaxN) return expected_noncommuting(n).get_d();
  return expected_noncommuting_logspace(n);
}

double expected_commutations_float(int n) {
  if (n <= kExactClosedFormMaxN) return expected_commutations(n).get_d();
  return 0.5 * n * (n - 1.0) - 1.0 - expected_noncommuting_logspace(n);
}

double asymptotic_noncommuting(int n) { return kNoncommutingSlope * n; }

Proportions proportions(int n) {
  const double nn = n;
  return {1.0, 2.0 * kNoncommutingSlope / nn, 2.0 / (nn * nn)};
}

Rational expected_noncommuting_dp(CountingSession& session) {
  const int n = session.degree();
  if (n < 3) throw std::invalid_argument("dp route needs n >= 3");
  const Permutation w0 = longest_element(n);
  Rational sum = 0;
  for (Letter j = 1; j <= n - 2; ++j) {
    const Letter prefix[] = {j, j + 1};
    sum += prefix_probability(session, w0, prefix);
  }
  Rational r = Rational(2 * (binom2(n) - 1)) * sum;
  r.canonicalize();
  return r;
}

Rational expected_braids_dp(CountingSession& session) {
  const int n = session.degree();
  if (n < 3) throw std::invalid_argument("dp route needs n >= 3");
  const Permutation w0 = longest_element(n);
  Rational sum = 0;
  for (Letter j = 1; j <= n - 2; ++j) {
    const Letter up[] = {j, j + 1, j};
    const Letter down[] = {j + 1, j, j + 1};
    sum += prefix_probability(session, w0, up);
    sum += prefix_probability(session, w0, down);
  }
  Rational r = Rational(binom2(n) - 2) * sum;
  r.canonicalize();
  return r;
}

EnumerationMeans enumeration_means(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > kEnumerationMaxN) {
    throw ResourceCapExceeded("enumeration supports n <= " + std::to_string(kEnumerationMaxN));
  }
  std::int64_t words = 0;
  WordStats total;
  for_each_word(longest_element(n), [&](std::span<const Letter> letters) {
    const WordStats s = stats(letters);
    ++words;
    total.commutations += s.commutations;
    total.noncommuting += s.noncommuting;
    total.braids += s.braids;
    total.ascending_pairs += s.ascending_pairs;
    total.descending_pairs += s.descending_pairs;
  });
  auto mean = [&](std::int64_t x) {
    return make_rational(BigInt(static_cast<long>(x)), BigInt(static_cast<long>(words)));
  };
  return {BigInt(static_cast<long>(words)), mean(total.commutations), mean(total.noncommuting),
          mean(total.braids), mean(total.ascending_pairs), mean(total.descending_pairs)};
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed";
    case Method::dp: return "dp";
    case Method::enumeration: return "enumerate";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view s) {
  if (s == "closed") return Method::closed_form;
  if (s == "dp") return Method::dp;
  if (s == "enumerate") return Method::enumeration;
  return std::nullopt;
}

ExpectationReport expectation_report(int n, Method method) {
  require_n(n);
  ExpectationReport rep;
  rep.n = n;
  rep.method = method;
  const Rational ell_minus_1 = Rational(binom2(n) - 1);

  switch (method) {
    case Method::closed_form:
      if (n <= kExactClosedFormMaxN) {
        rep.e_noncommuting = expected_noncommuting(n);
      } else {
        rep.noncommuting_float = expected_noncommuting_logspace(n);
        rep.float_value = expected_commutations_float(n);
        return rep;
      }
      break;
    case Method::dp: {
      if (n < 3 || n > kDpMaxN) {
        throw ResourceCapExceeded("dp supports 3 <= n <= " + std::to_string(kDpMaxN));
      }
      CountingSession session(n);
      rep.e_noncommuting = expected_noncommuting_dp(session);
      break;
    }
    case Method::enumeration:
      if (n > kEnumerationMaxN) {
        throw ResourceCapExceeded("enumerate supports 2 <= n <= " + std::to_string(kEnumerationMaxN));
      }
      rep.e_noncommuting = enumeration_means(n).noncommuting;
      break;
  }
  Rational ec = ell_minus_1 - *rep.e_noncommuting;
  ec.canonicalize();
  rep.e_commutations = ec;
  rep.float_value = ec.get_d();
  rep.noncommuting_float = rep.e_noncommuting->get_d();
  return rep;
}

}  // namespace redwords
