#pragma once

#include <vector>

#include "redwords/numeric.hpp"
#include "redwords/permutation.hpp"

namespace redwords {

/// Hook lengths of a Young diagram, row-major and 1-based in the accessor:
/// hook(r, c) = arm + leg + 1.
class HookGrid {
 public:
  explicit HookGrid(Shape shape);

  const Shape& shape() const noexcept { return shape_; }
  int hook(int row, int col) const { return hooks_.at(row - 1).at(col - 1); }
  const std::vector<std::vector<int>>& rows() const noexcept { return hooks_; }

  /// Product of all hooks.
  BigInt product() const;

 private:
  Shape shape_;
  std::vector<std::vector<int>> hooks_;
};

/// delta_n = (n-1, n-2, ..., 1).
Shape staircase(int n);

/// Removes the last cell of rows `upper` and `upper + 1` (1-based). Each must
/// be a corner of the input shape; otherwise throws std::invalid_argument.
Shape delete_corners(const Shape& shape, int upper, int lower);

/// f^lambda = |lambda|! / prod(hooks), the number of standard Young tableaux.
BigInt hook_length_count(const Shape& shape);

/// f^{lambda(a_n^(j))} / f^{delta_n}, through full hook products on both sides.
Rational tableau_ratio(int n, int j);

}  // namespace redwords
