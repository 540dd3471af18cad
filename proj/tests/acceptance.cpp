// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "redwords/cli.hpp"
#include "redwords/counting.hpp"
#include "redwords/expectations.hpp"
#include "redwords/permutation.hpp"
#include "redwords/reduced_word.hpp"
#include "redwords/sampler.hpp"
#include "redwords/tableaux.hpp"
#include "redwords/verify.hpp"

using namespace redwords;

namespace {

int failures = 0;

/// `body` returns an empty string on success, else the first counterexample.
void criterion(int id, const std::string& title, double max_seconds, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    failure = body();
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty() && secs > max_seconds) {
    failure = "took " + std::to_string(secs) + " s, limit " + std::to_string(max_seconds) + " s";
  }
  std::ostringstream line;
  line.precision(3);
  line << std::fixed << (failure.empty() ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << title << " ("
       << secs << " s)";
  if (!failure.empty()) line << " -- " << failure;
  std::cout << line.str() << std::endl;
  if (!failure.empty()) ++failures;
}

int ell(int n) { return n * (n - 1) / 2; }

std::string n_str(int n) { return "n=" + std::to_string(n) + ": "; }

Rational dp_commutations(CountingSession& session) {
  const int n = session.degree();
  const Permutation w0 = longest_element(n);
  Rational sum = 0;
  for (Letter j = 1; j <= n - 2; ++j) {
    const std::vector<Letter> prefix{j, j + 1};
    sum += prefix_probability(session, w0, prefix);
  }
  Rational r = Rational(ell(n) - 1) * (Rational(1) - Rational(2) * sum);
  r.canonicalize();
  return r;
}

}  // namespace

int main() {
  criterion(1, "enumeration mean of commutations equals the closed form, n = 3..6", 60, [] {
    // Golden values from an independent brute-force search over letter sequences.
    const std::map<int, Rational> golden = {
        {3, Rational(0)}, {4, Rational(5, 4)}, {5, Rational(231, 64)}, {6, Rational(1799, 256)}};
    for (int n = 3; n <= 6; ++n) {
      const Rational mean = enumeration_means(n).commutations;
      if (mean != expected_commutations(n)) {
        return n_str(n) + to_string(mean) + " vs " + to_string(expected_commutations(n));
      }
      if (mean != golden.at(n)) return n_str(n) + "golden value mismatch " + to_string(mean);
    }
    return std::string();
  });

  criterion(2, "prefix-probability route equals the closed form, n = 7..9", 300, [] {
    for (int n = 7; n <= 9; ++n) {
      CountingSession session(n);
      const Rational dp = dp_commutations(session);
      if (dp != expected_commutations(n)) {
        return n_str(n) + to_string(dp) + " vs " + to_string(expected_commutations(n));
      }
    }
    return std::string();
  });

  criterion(3, "expected long braid moves is exactly 1, n = 3..9", 300, [] {
    for (int n = 3; n <= 6; ++n) {
      const Rational mean = enumeration_means(n).braids;
      if (mean != 1) return n_str(n) + "enumeration mean " + to_string(mean);
    }
    for (int n = 7; n <= 9; ++n) {
      CountingSession session(n);
      const Permutation w0 = longest_element(n);
      Rational sum = 0;
      for (Letter j = 1; j <= n - 2; ++j) {
        const std::vector<Letter> up{j, j + 1, j}, down{j + 1, j, j + 1};
        sum += prefix_probability(session, w0, up) + prefix_probability(session, w0, down);
      }
      const Rational e = Rational(ell(n) - 2) * sum;
      if (e != 1) return n_str(n) + "prefix route gives " + to_string(e);
    }
    return std::string();
  });

  criterion(4, "reduced-word counts equal hook-length counts", 300, [] {
    for (int n = 3; n <= 9; ++n) {
      const BigInt words = count_words(longest_element(n));
      const BigInt tableaux = hook_length_count(staircase(n));
      if (words != tableaux) return n_str(n) + words.get_str() + " vs " + tableaux.get_str();
    }
    for (int n = 3; n <= 7; ++n)
      for (int j = 1; j <= n - 2; ++j) {
        const Permutation a = a_permutation(n, j);
        if (count_words(a) != hook_length_count(shape_of(a))) return n_str(n) + "j=" + std::to_string(j);
      }
    return std::string();
  });

  criterion(5, "shape of a_n^(j) is the staircase minus corners j, j+1; vexillary, n = 3..10", 60, [] {
    for (int n = 3; n <= 10; ++n)
      for (int j = 1; j <= n - 2; ++j) {
        const Permutation a = a_permutation(n, j);
        if (!(shape_of(a) == delete_corners(staircase(n), j, j + 1))) return n_str(n) + "shape, j=" + std::to_string(j);
        if (!is_vexillary(a)) return n_str(n) + "not vexillary, j=" + std::to_string(j);
      }
    return std::string();
  });

  criterion(6, "per-word complement identity and rotation closure, n = 3..6", 60, [] {
    for (int n = 3; n <= 6; ++n) {
      const Permutation w0 = longest_element(n);
      std::string failure;
      for_each_word(w0, [&](std::span<const Letter> letters) {
        if (!failure.empty()) return;
        const ReducedWord w(n, {letters.begin(), letters.end()});
        const WordStats s = stats(w);
        if (s.commutations + s.noncommuting != ell(n) - 1) {
          failure = n_str(n) + "complement identity fails";
          return;
        }
        try {
          if (rotate(w).target() != w0) failure = n_str(n) + "rotation leaves w0";
        } catch (const std::exception& e) {
          failure = n_str(n) + "rotation invalid: " + e.what();
        }
      });
      if (!failure.empty()) return failure;
    }
    return std::string();
  });

  criterion(7, "sampler: chi-square at n=4, Monte Carlo means at n=10", 120, [] {
    const auto words = enumerate_words(longest_element(4));
    std::map<std::vector<Letter>, std::size_t> index;
    for (std::size_t k = 0; k < words.size(); ++k) index[{words[k].letters().begin(), words[k].letters().end()}] = k;
    const WordSampler sampler(4);
    std::vector<long> hits(words.size(), 0);
    const long draws = 16000;
    for (long t = 0; t < draws; ++t) {
      auto rng = trial_generator(20260101, static_cast<std::uint64_t>(t));
      const auto w = sampler.sample(rng);
      ++hits[index.at({w.letters().begin(), w.letters().end()})];
    }
    const double expected = static_cast<double>(draws) / 16.0;
    double chi2 = 0;
    for (long h : hits) chi2 += (h - expected) * (h - expected) / expected;
    if (!(chi2 < kChiSquare15Quantile999)) return "chi-square " + std::to_string(chi2);

    const auto s = monte_carlo(10, 100000, 42, 0);
    const double ec = expected_commutations(10).get_d();
    if (std::abs(s.mean_commutations - ec) > 4 * s.se_commutations) {
      return "n=10 mean commutations " + std::to_string(s.mean_commutations) + " vs " + std::to_string(ec) +
             " (se " + std::to_string(s.se_commutations) + ")";
    }
    if (std::abs(s.mean_braids - 1.0) > 4 * s.se_braids) {
      return "n=10 mean braids " + std::to_string(s.mean_braids) + " (se " + std::to_string(s.se_braids) + ")";
    }
    return std::string();
  });

  criterion(8, "noncommuting pairs per n converge to 128/(9 pi^2)", 10, [] {
    const double slope = 128.0 / (9.0 * std::numbers::pi * std::numbers::pi);
    double previous = INFINITY;
    double last = 0;
    for (int n : {100, 200, 400, 800}) {
      last = expected_noncommuting_logspace(n) / n;
      const double gap = std::abs(last - slope);
      if (!(gap < previous)) return n_str(n) + "distance did not decrease";
      previous = gap;
    }
    if (std::abs(last - slope) > 0.01 * slope) return "n=800 ratio " + std::to_string(last);
    return std::string();
  });

  criterion(9, "proportions at n=800", 10, [] {
    const int n = 800;
    const double length = ell(n);
    const double noncomm = expected_noncommuting_logspace(n) / length;
    const double noncomm_leading = 256.0 / (9.0 * std::numbers::pi * std::numbers::pi * n);
    if (std::abs(noncomm - noncomm_leading) > 0.03 * noncomm_leading) {
      return "noncommuting proportion " + std::to_string(noncomm) + " vs " + std::to_string(noncomm_leading);
    }
    if (std::abs(proportions(n).noncommuting - noncomm_leading) > 1e-12 * noncomm_leading) {
      return std::string("proportions() noncommuting term disagrees with 256/(9 pi^2 n)");
    }
    const double braid = reiner_reference().get_d() / (length - 2.0);
    const double braid_leading = 2.0 / (static_cast<double>(n) * n);
    if (std::abs(braid - braid_leading) > 0.01 * braid_leading) {
      return "braid proportion " + std::to_string(braid) + " vs " + std::to_string(braid_leading);
    }
    if (proportions(n).braids != braid_leading || proportions(n).commutations != 1.0) {
      return std::string("proportions() leading terms");
    }
    return std::string();
  });

  criterion(10, "sample output is byte-identical across --jobs", 60, [] {
    auto run = [](const char* jobs) {
      std::ostringstream out, err;
      const int code = cli::run({"redwords", "sample", "--n", "9", "--trials", "20000", "--seed", "42", "--jobs", jobs},
                                out, err);
      return std::make_pair(code, out.str());
    };
    const auto a = run("1");
    const auto b = run("4");
    if (a.first != 0 || b.first != 0) return std::string("sample exited nonzero");
    if (a.second != b.second) return "outputs differ:\n" + a.second + b.second;
    return std::string();
  });

  std::cout << (failures ? "FAILED: " : "ALL PASSED: ") << 10 - failures << "/10 criteria" << std::endl;
  return failures ? 1 : 0;
}
