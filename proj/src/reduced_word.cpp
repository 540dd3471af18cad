#include "redwords/reduced_word.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "redwords/errors.hpp"

namespace redwords {

Permutation evaluate(int n, std::span<const Letter> letters) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  Permutation w = Permutation::identity(n);
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const Letter i = letters[k];
    if (i < 1 || i > n - 1) {
      throw std::invalid_argument("letter " + std::to_string(i) + " at position " +
                                  std::to_string(k + 1) + " outside [1, " + std::to_string(n - 1) + "]");
    }
    // w s_i is longer than w iff w(i) < w(i+1).
    if (w(i) > w(i + 1)) {
      throw NotReduced(k + 1, "word is not reduced at position " + std::to_string(k + 1));
    }
    w = apply_simple_right(w, i);
  }
  return w;
}

ReducedWord::ReducedWord(int n, std::vector<Letter> letters)
    : n_(n), letters_(std::move(letters)), target_(evaluate(n, letters_)) {}

std::ostream& operator<<(std::ostream& os, const ReducedWord& w) {
  os << '(';
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w.letters()[k];
  return os << ')';
}

WordStats stats(std::span<const Letter> letters) {
  WordStats s;
  for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
    const int d = letters[k + 1] - letters[k];
    if (std::abs(d) > 1) {
      ++s.commutations;
    } else if (d == 1) {
      ++s.noncommuting;
      ++s.ascending_pairs;
    } else if (d == -1) {
      ++s.noncommuting;
      ++s.descending_pairs;
    }
    if (std::abs(d) == 1 && k + 2 < letters.size() && letters[k + 2] == letters[k]) ++s.braids;
  }
  return s;
}

ReducedWord rotate(const ReducedWord& word) {
  const int n = word.degree();
  if (word.target() != longest_element(n)) {
    throw std::invalid_argument("rotate needs a reduced word of the longest element");
  }
  auto in = word.letters();
  if (in.empty()) return word;
  std::vector<Letter> out(in.begin() + 1, in.end());
  out.push_back(n - in.front());
  return ReducedWord(n, std::move(out));
}

}  // namespace redwords
