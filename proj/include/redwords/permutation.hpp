#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace redwords {

/// Letter of a word: the index i of the simple reflection s_i, 1 <= i <= n-1.
using Letter = int;

/// An element of the symmetric group S_n in one-line notation w(1)...w(n),
/// values 1-based. Immutable; the degree is part of the value.
class Permutation {
 public:
  /// Validates that `oneline` is a bijection on {1..n}. Throws std::invalid_argument.
  explicit Permutation(std::vector<int> oneline);

  static Permutation identity(int n);

  int degree() const noexcept { return static_cast<int>(oneline_.size()); }
  std::span<const int> oneline() const noexcept { return oneline_; }

  /// w(position), position 1-based.
  int operator()(int position) const { return oneline_.at(position - 1); }

  Permutation inverse() const;

  /// One-line notation packed 4 bits per entry; defined for degree <= 16.
  std::uint64_t packed() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<int> oneline, Trusted) : oneline_(std::move(oneline)) {}

  std::vector<int> oneline_;

  friend Permutation apply_simple_left(Letter, const Permutation&);
  friend Permutation apply_simple_right(const Permutation&, Letter);
};

std::ostream& operator<<(std::ostream& os, const Permutation& w);

/// An integer partition with trailing zeros dropped.
class Shape {
 public:
  Shape() = default;
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and nonnegative.
  explicit Shape(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  /// Length of row r (1-based); 0 past the last row.
  int row(int r) const noexcept;
  int size() const noexcept { return size_; }

  friend bool operator==(const Shape& a, const Shape& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Shape& s);

/// w_0 = n(n-1)...1, the unique element of length n(n-1)/2.
Permutation longest_element(int n);

/// s_i * w: exchanges the values i and i+1.
Permutation apply_simple_left(Letter i, const Permutation& w);

/// w * s_i: exchanges the entries in positions i and i+1.
Permutation apply_simple_right(const Permutation& w, Letter i);

/// Inversion count.
int length(const Permutation& w);

/// Letters i with length(s_i w) = length(w) - 1, in increasing order.
/// These are exactly the letters that can begin a reduced word of w.
std::vector<Letter> left_descents(const Permutation& w);

/// Letters i with w(i) > w(i+1), i.e. length(w s_i) = length(w) - 1.
std::vector<Letter> right_descents(const Permutation& w);

/// True iff w avoids 2143. Direct quartic scan.
bool is_vexillary(const Permutation& w);

/// lambda(w): the counts r_i = #{j < i : w(j) > w(i)} sorted nonincreasing.
Shape shape_of(const Permutation& w);

/// s_{j+1} s_j w_0 in S_n, for n >= 3 and 1 <= j <= n-2. Checks the result
/// against the explicit one-line form n ... (j+3)(j+1) j (j+2)(j-1) ... 1 and
/// that it is vexillary; a mismatch throws std::logic_error.
Permutation a_permutation(int n, int j);

}  // namespace redwords
