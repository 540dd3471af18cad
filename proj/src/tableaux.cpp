#include "redwords/tableaux.hpp"

#include <stdexcept>
#include <string>

namespace redwords {

HookGrid::HookGrid(Shape shape) : shape_(std::move(shape)) {
  const int rows = shape_.rows();
  hooks_.resize(rows);
  for (int r = 1; r <= rows; ++r) {
    const int len = shape_.row(r);
    hooks_[r - 1].resize(len);
    for (int c = 1; c <= len; ++c) {
      int leg = 0;
      while (shape_.row(r + leg + 1) >= c) ++leg;
      hooks_[r - 1][c - 1] = (len - c) + leg + 1;
    }
  }
}

BigInt HookGrid::product() const {
  BigInt p = 1;
  for (const auto& row : hooks_)
    for (int h : row) p *= h;
  return p;
}

Shape staircase(int n) {
  if (n < 1) throw std::invalid_argument("staircase needs n >= 1");
  std::vector<int> parts;
  for (int k = n - 1; k >= 1; --k) parts.push_back(k);
  return Shape(std::move(parts));
}

Shape delete_corners(const Shape& shape, int upper, int lower) {
  if (lower != upper + 1) throw std::invalid_argument("delete_corners needs adjacent rows");
  for (int r : {upper, lower}) {
    if (r < 1 || r > shape.rows() || shape.row(r) <= shape.row(r + 1)) {
      throw std::invalid_argument("row " + std::to_string(r) + " has no removable corner");
    }
  }
  std::vector<int> parts(shape.parts().begin(), shape.parts().end());
  --parts[upper - 1];
  --parts[lower - 1];
  return Shape(std::move(parts));
}

BigInt hook_length_count(const Shape& shape) {
  BigInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(shape.size()));
  const BigInt hooks = HookGrid(shape).product();
  BigInt quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), factorial.get_mpz_t(), hooks.get_mpz_t());
  if (remainder != 0) throw std::logic_error("hook product does not divide |lambda|!");
  return quotient;
}

Rational tableau_ratio(int n, int j) {
  if (n < 3 || j < 1 || j > n - 2) {
    throw std::invalid_argument("tableau_ratio needs n >= 3 and 1 <= j <= n-2");
  }
  const Shape delta = staircase(n);
  return make_rational(hook_length_count(delete_corners(delta, j, j + 1)), hook_length_count(delta));
}

}  // namespace redwords
