#pragma once

#include <cstdint>
#include <random>

#include "redwords/counting.hpp"
#include "redwords/numeric.hpp"
#include "redwords/reduced_word.hpp"

namespace redwords {

/// Generator for one Monte Carlo trial: std::mt19937_64 seeded through
/// std::seed_seq{seed_lo, seed_hi, trial_lo, trial_hi} (32-bit halves). Both
/// engines are fully specified by the standard, so a (seed, trial) pair
/// names the same stream on every platform and under any scheduling.
std::mt19937_64 trial_generator(std::uint64_t seed, std::uint64_t trial);

/// Uniform integer in [0, bound) by masked rejection on 64-bit draws.
BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng);

/// Draws reduced words of w_0 in S_n uniformly. Construction counts every
/// permutation below w_0 once; afterwards sample() only reads the table and
/// is safe to call from several threads with their own generators.
class WordSampler {
 public:
  explicit WordSampler(int n, std::size_t memo_cap = kDefaultMemoCap);

  int degree() const noexcept { return n_; }
  const BigInt& total_words() const { return *session_.lookup(longest_element(n_)); }

  /// Builds the word left to right: from the current w, picks left descent i
  /// with probability R(s_i w) / R(w) and continues with s_i w.
  ReducedWord sample(std::mt19937_64& rng) const;

 private:
  int n_;
  CountingSession session_;
};

struct SampleSummary {
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int word_length = 0;

  // Exact per-statistic totals over all trials.
  std::uint64_t total_commutations = 0;
  std::uint64_t total_noncommuting = 0;
  std::uint64_t total_braids = 0;
  std::uint64_t total_sq_commutations = 0;
  std::uint64_t total_sq_noncommuting = 0;
  std::uint64_t total_sq_braids = 0;

  double mean_commutations = 0;
  double mean_noncommuting = 0;
  double mean_braids = 0;
  // Unbiased sample standard deviation / sqrt(trials); NaN when trials == 1.
  double se_commutations = 0;
  double se_noncommuting = 0;
  double se_braids = 0;

  bool se_defined() const noexcept { return trials > 1; }
};

/// Draws `trials` words, trial t using trial_generator(seed, t). `workers`
/// threads split the trial range (0 means hardware concurrency); the result
/// does not depend on it.
SampleSummary monte_carlo(int n, std::uint64_t trials, std::uint64_t seed, unsigned workers = 1);

}  // namespace redwords
