#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "redwords/permutation.hpp"

namespace redwords {

/// Multiplies s_{i_1} s_{i_2} ... left to right starting from the identity of
/// S_n. Throws NotReduced naming the first letter that fails to grow the
/// length, or std::invalid_argument for a letter outside [1, n-1].
Permutation evaluate(int n, std::span<const Letter> letters);

/// A letter sequence known to be a reduced word of `target()`.
class ReducedWord {
 public:
  /// Validates via evaluate().
  ReducedWord(int n, std::vector<Letter> letters);

  int degree() const noexcept { return n_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  const Permutation& target() const noexcept { return target_; }

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.n_ == b.n_ && a.letters_ == b.letters_;
  }

 private:
  int n_;
  std::vector<Letter> letters_;
  Permutation target_;
};

std::ostream& operator<<(std::ostream& os, const ReducedWord& w);

/// Positional statistics of one word. Overlapping patterns count once per
/// position: 1 3 5 has two commutation positions.
struct WordStats {
  std::int64_t commutations = 0;      // |i_k - i_{k+1}| > 1
  std::int64_t noncommuting = 0;      // |i_k - i_{k+1}| = 1
  std::int64_t braids = 0;            // i_k = i_{k+2}, |i_k - i_{k+1}| = 1
  std::int64_t ascending_pairs = 0;   // i_{k+1} = i_k + 1
  std::int64_t descending_pairs = 0;  // i_{k+1} = i_k - 1

  friend bool operator==(const WordStats&, const WordStats&) = default;
};

WordStats stats(std::span<const Letter> letters);
inline WordStats stats(const ReducedWord& w) { return stats(w.letters()); }

/// i_1 i_2 ... i_l  ->  i_2 ... i_l (n - i_1), a bijection on the reduced
/// words of w_0. Throws std::invalid_argument if `word` is not a word of w_0.
ReducedWord rotate(const ReducedWord& word);

}  // namespace redwords
