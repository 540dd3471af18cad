#include "redwords/verify.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "redwords/counting.hpp"
#include "redwords/expectations.hpp"
#include "redwords/permutation.hpp"
#include "redwords/reduced_word.hpp"
#include "redwords/sampler.hpp"
#include "redwords/tableaux.hpp"

namespace redwords {

namespace {

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

Rational closed_commutations(int n, const std::function<Rational(int, int)>& term) {
  Rational sum = 0;
  for (int j = 1; j <= n - 2; ++j) sum += term(n, j);
  Rational r = Rational(n * (n - 1) / 2 - 1) - sum;
  r.canonicalize();
  return r;
}

class Suite {
 public:
  explicit Suite(std::ostream& log) : log_(log) {}

  void check(std::string name, const std::function<std::string()>& body) {
    CheckResult r{std::move(name), true, {}};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    log_ << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.passed) log_ << ": " << r.detail;
    log_ << '\n';
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::ostream& log_;
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options, std::ostream& log) {
  const int max_n = options.max_n;
  if (max_n < 3 || max_n > 10) throw std::invalid_argument("max_n must be in [3, 10]");
  const auto term = options.term ? options.term : std::function<Rational(int, int)>(noncommuting_term);
  Suite suite(log);

  for (int n = 3; n <= std::min(max_n, kEnumerationMaxN); ++n) {
    suite.check("enumeration n=" + std::to_string(n) + ": mean commutations equals closed form", [&] {
      const auto means = enumeration_means(n);
      const Rational closed = closed_commutations(n, term);
      if (means.commutations != closed) {
        return "enumeration " + to_string(means.commutations) + " vs closed form " + to_string(closed);
      }
      if (means.braids != reiner_reference()) return "mean braids " + to_string(means.braids);
      return std::string();
    });
    suite.check("enumeration n=" + std::to_string(n) + ": complement identity and rotation", [&] {
      const Permutation w0 = longest_element(n);
      const int ell = n * (n - 1) / 2;
      std::string failure;
      for_each_word(w0, [&](std::span<const Letter> letters) {
        if (!failure.empty()) return;
        const ReducedWord word(n, {letters.begin(), letters.end()});
        const WordStats s = stats(word);
        if (s.commutations + s.noncommuting != ell - 1) {
          failure = "commutations + noncommuting != l-1 for " + str(word);
        } else if (rotate(word).target() != w0) {
          failure = "rotation of " + str(word) + " is not a word of w0";
        }
      });
      return failure;
    });
  }

  for (int n = 7; n <= std::min(max_n, 9); ++n) {
    suite.check("dp n=" + std::to_string(n) + ": closed form equals prefix-probability route", [&] {
      CountingSession session(n);
      const Rational dp = Rational(n * (n - 1) / 2 - 1) - expected_noncommuting_dp(session);
      const Rational closed = closed_commutations(n, term);
      if (dp != closed) return "dp " + to_string(dp) + " vs closed form " + to_string(closed);
      const Rational braids = expected_braids_dp(session);
      if (braids != reiner_reference()) return "expected braids " + to_string(braids);
      return std::string();
    });
  }

  suite.check("hook-length formula counts reduced words of w0 and of a_n^(j)", [&] {
    for (int n = 3; n <= std::min(max_n, 9); ++n) {
      const BigInt dp = count_words(longest_element(n));
      const BigInt hooks = hook_length_count(staircase(n));
      if (dp != hooks) return "n=" + std::to_string(n) + ": " + dp.get_str() + " vs " + hooks.get_str();
    }
    for (int n = 3; n <= std::min(max_n, 7); ++n)
      for (int j = 1; j <= n - 2; ++j) {
        const Permutation a = a_permutation(n, j);
        if (count_words(a) != hook_length_count(shape_of(a))) {
          return "a_permutation(" + std::to_string(n) + "," + std::to_string(j) + ")";
        }
      }
    return std::string();
  });

  suite.check("shape of a_n^(j) is the staircase minus corners j, j+1", [&] {
    for (int n = 3; n <= max_n; ++n)
      for (int j = 1; j <= n - 2; ++j) {
        const Permutation a = a_permutation(n, j);
        if (!(shape_of(a) == delete_corners(staircase(n), j, j + 1)) || !is_vexillary(a)) {
          return "n=" + std::to_string(n) + " j=" + std::to_string(j) + ": " + str(shape_of(a));
        }
      }
    return std::string();
  });

  if (max_n >= 4) {
    suite.check("sampler n=4: chi-square over 16 words below 99.9% quantile", [&] {
      const auto words = enumerate_words(longest_element(4));
      std::map<std::vector<Letter>, int> index;
      for (std::size_t k = 0; k < words.size(); ++k) {
        index[{words[k].letters().begin(), words[k].letters().end()}] = static_cast<int>(k);
      }
      const WordSampler sampler(4);
      const int draws = 16000;
      std::vector<int> hits(words.size(), 0);
      for (int t = 0; t < draws; ++t) {
        auto rng = trial_generator(options.seed, static_cast<std::uint64_t>(t));
        const auto w = sampler.sample(rng);
        ++hits.at(index.at({w.letters().begin(), w.letters().end()}));
      }
      const double expected = static_cast<double>(draws) / static_cast<double>(words.size());
      double chi2 = 0;
      for (int h : hits) chi2 += (h - expected) * (h - expected) / expected;
      if (chi2 >= kChiSquare15Quantile999) return "chi-square " + std::to_string(chi2);
      return std::string();
    });
  }

  if (max_n >= 10) {
    suite.check("sampler n=10: Monte Carlo means within 4 standard errors", [&] {
      const auto s = monte_carlo(10, 100000, options.seed, 0);
      const double ec = closed_commutations(10, term).get_d();
      if (std::abs(s.mean_commutations - ec) > 4 * s.se_commutations) {
        return "mean commutations " + std::to_string(s.mean_commutations) + " vs " + std::to_string(ec);
      }
      if (std::abs(s.mean_braids - 1.0) > 4 * s.se_braids) {
        return "mean braids " + std::to_string(s.mean_braids);
      }
      return std::string();
    });
  }

  suite.check("sampler totals do not depend on the worker count", [&] {
    const auto a = monte_carlo(std::min(max_n, 6), 2000, options.seed, 1);
    const auto b = monte_carlo(std::min(max_n, 6), 2000, options.seed, 3);
    if (a.total_commutations != b.total_commutations || a.total_braids != b.total_braids ||
        a.total_sq_noncommuting != b.total_sq_noncommuting) {
      return std::string("worker counts 1 and 3 disagree");
    }
    return std::string();
  });

  suite.check("noncommuting pairs per n approach 128/(9 pi^2)", [&] {
    double previous = INFINITY;
    for (int n : {100, 200, 400, 800}) {
      const double gap = std::abs(expected_noncommuting_logspace(n) / n - kNoncommutingSlope);
      if (!(gap < previous)) return "distance did not shrink at n=" + std::to_string(n);
      previous = gap;
    }
    if (previous / kNoncommutingSlope > 0.01) return "n=800 off by " + std::to_string(previous);
    return std::string();
  });

  suite.check("log-space sum agrees with the exact sum to 12 digits at n=300", [&] {
    const double exact = expected_noncommuting(300).get_d();
    const double approx = expected_noncommuting_logspace(300);
    if (std::abs(exact - approx) > 1e-12 * std::abs(exact)) {
      return "exact " + std::to_string(exact) + " vs log-space " + std::to_string(approx);
    }
    return std::string();
  });

  return suite.take();
}

}  // namespace redwords
