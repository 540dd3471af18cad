#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "redwords/numeric.hpp"
#include "redwords/permutation.hpp"
#include "redwords/reduced_word.hpp"

namespace redwords {

inline constexpr std::size_t kDefaultMemoCap = 10'000'000;
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Memoized count of reduced words,
///
///   R(id) = 1,   R(w) = sum over left descents i of R(s_i w),
///
/// keyed by one-line notation. All permutations in one session share a
/// degree (at most 16). The table only grows; once populated for some w,
/// lookup() of anything below w in weak order is read-only and may run
/// concurrently with other lookups.
class CountingSession {
 public:
  explicit CountingSession(int n, std::size_t memo_cap = kDefaultMemoCap);

  int degree() const noexcept { return n_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }
  std::size_t memo_cap() const noexcept { return cap_; }

  /// Counts, filling the memo on demand. Throws ResourceCapExceeded when the
  /// memo would outgrow its cap; entries computed so far are kept.
  const BigInt& count(const Permutation& w);

  /// Read-only lookup of an already-counted permutation; nullptr if absent.
  const BigInt* lookup(const Permutation& w) const;

 private:
  const BigInt& count_packed(std::uint64_t key, std::vector<int>& oneline);

  int n_;
  std::size_t cap_;
  std::unordered_map<std::uint64_t, BigInt> memo_;
};

/// Number of reduced words of w (fresh session).
BigInt count_words(const Permutation& w, std::size_t memo_cap = kDefaultMemoCap);

/// Probability that a uniformly random reduced word of w begins with
/// `prefix`: R(s_{p_k} ... s_{p_1} w) / R(w). Zero when some prefix letter
/// fails to shorten.
Rational prefix_probability(CountingSession& session, const Permutation& w,
                            std::span<const Letter> prefix);
Rational prefix_probability(const Permutation& w, std::span<const Letter> prefix);

/// Visits every reduced word of w once, in lexicographic order. Refuses with
/// ResourceCapExceeded before visiting anything when R(w) exceeds `cap`.
void for_each_word(const Permutation& w, const std::function<void(std::span<const Letter>)>& visit,
                   std::uint64_t cap = kDefaultEnumerationCap);

/// Materialized form of for_each_word.
std::vector<ReducedWord> enumerate_words(const Permutation& w,
                                         std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace redwords
