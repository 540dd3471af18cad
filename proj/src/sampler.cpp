#include "redwords/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace redwords {

std::mt19937_64 trial_generator(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng) {
  if (bound <= 0) throw std::invalid_argument("uniform_below needs a positive bound");
  if (bound == 1) return 0;
  const BigInt top = bound - 1;
  const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  std::vector<std::uint64_t> limbs((bits + 63) / 64);
  BigInt r;
  do {
    for (auto& limb : limbs) limb = rng();
    mpz_import(r.get_mpz_t(), limbs.size(), -1, sizeof(std::uint64_t), 0, 0, limbs.data());
    mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), bits);
  } while (r >= bound);
  return r;
}

WordSampler::WordSampler(int n, std::size_t memo_cap) : n_(n), session_(n, memo_cap) {
  if (n < 2) throw std::invalid_argument("sampling needs n >= 2");
  session_.count(longest_element(n));
}

ReducedWord WordSampler::sample(std::mt19937_64& rng) const {
  Permutation w = longest_element(n_);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);

  for (auto descents = left_descents(w); !descents.empty(); descents = left_descents(w)) {
    Letter pick = descents.front();
    if (descents.size() > 1) {
      BigInt r = uniform_below(*session_.lookup(w), rng);
      for (Letter i : descents) {
        const BigInt& weight = *session_.lookup(apply_simple_left(i, w));
        if (r < weight) {
          pick = i;
          break;
        }
        r -= weight;
      }
    }
    letters.push_back(pick);
    w = apply_simple_left(pick, w);
  }
  return ReducedWord(n_, std::move(letters));
}

namespace {

struct Totals {
  std::uint64_t sum[3] = {0, 0, 0};
  std::uint64_t sum_sq[3] = {0, 0, 0};
};

void run_trials(const WordSampler& sampler, std::uint64_t seed, std::uint64_t begin, std::uint64_t end,
                Totals& out) {
  for (std::uint64_t t = begin; t < end; ++t) {
    auto rng = trial_generator(seed, t);
    const WordStats s = stats(sampler.sample(rng));
    const std::uint64_t v[3] = {static_cast<std::uint64_t>(s.commutations),
                                static_cast<std::uint64_t>(s.noncommuting),
                                static_cast<std::uint64_t>(s.braids)};
    for (int k = 0; k < 3; ++k) {
      out.sum[k] += v[k];
      out.sum_sq[k] += v[k] * v[k];
    }
  }
}

double standard_error(std::uint64_t sum, std::uint64_t sum_sq, std::uint64_t trials) {
  if (trials < 2) return std::numeric_limits<double>::quiet_NaN();
  // T * sum_sq - sum^2 is exact in 128 bits.
  const unsigned __int128 t = trials;
  const unsigned __int128 centered = t * sum_sq - static_cast<unsigned __int128>(sum) * sum;
  const double variance = static_cast<double>(centered) / (static_cast<double>(trials) * (trials - 1.0));
  return std::sqrt(variance / static_cast<double>(trials));
}

}  // namespace

SampleSummary monte_carlo(int n, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

  const WordSampler sampler(n);
  std::vector<Totals> partial(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = trials / workers;
  const std::uint64_t extra = trials % workers;
  std::uint64_t begin = 0;
  for (unsigned k = 0; k < workers; ++k) {
    const std::uint64_t end = begin + chunk + (k < extra ? 1 : 0);
    if (k + 1 == workers) {
      run_trials(sampler, seed, begin, end, partial[k]);
    } else {
      pool.emplace_back(run_trials, std::cref(sampler), seed, begin, end, std::ref(partial[k]));
    }
    begin = end;
  }
  for (auto& th : pool) th.join();

  Totals all;
  for (const auto& p : partial)
    for (int k = 0; k < 3; ++k) {
      all.sum[k] += p.sum[k];
      all.sum_sq[k] += p.sum_sq[k];
    }

  SampleSummary s;
  s.n = n;
  s.trials = trials;
  s.seed = seed;
  s.word_length = n * (n - 1) / 2;
  s.total_commutations = all.sum[0];
  s.total_noncommuting = all.sum[1];
  s.total_braids = all.sum[2];
  s.total_sq_commutations = all.sum_sq[0];
  s.total_sq_noncommuting = all.sum_sq[1];
  s.total_sq_braids = all.sum_sq[2];
  const double t = static_cast<double>(trials);
  s.mean_commutations = static_cast<double>(all.sum[0]) / t;
  s.mean_noncommuting = static_cast<double>(all.sum[1]) / t;
  s.mean_braids = static_cast<double>(all.sum[2]) / t;
  s.se_commutations = standard_error(all.sum[0], all.sum_sq[0], trials);
  s.se_noncommuting = standard_error(all.sum[1], all.sum_sq[1], trials);
  s.se_braids = standard_error(all.sum[2], all.sum_sq[2], trials);
  return s;
}

}  // namespace redwords
