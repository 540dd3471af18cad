#include "redwords/permutation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace redwords {

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
  const int n = degree();
  std::vector<bool> seen(n + 1, false);
  for (int v : oneline_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = k + 1;
  return Permutation(std::move(v), Trusted{});
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(oneline_.size());
  for (std::size_t k = 0; k < oneline_.size(); ++k) inv[oneline_[k] - 1] = static_cast<int>(k) + 1;
  return Permutation(std::move(inv), Trusted{});
}

std::uint64_t Permutation::packed() const {
  if (degree() > 16) throw std::invalid_argument("packed key needs degree <= 16");
  std::uint64_t key = 0;
  for (int v : oneline_) key = (key << 4) | static_cast<std::uint64_t>(v - 1);
  return key;
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) {
  os << '(';
  for (int k = 0; k < w.degree(); ++k) os << (k ? "," : "") << w.oneline()[k];
  return os << ')';
}

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0 || (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])) {
      throw std::invalid_argument("shape parts must be weakly decreasing and nonnegative");
    }
    size_ += parts_[k];
  }
}

int Shape::row(int r) const noexcept {
  return r >= 1 && r <= rows() ? parts_[r - 1] : 0;
}

std::ostream& operator<<(std::ostream& os, const Shape& s) {
  os << '(';
  for (int k = 0; k < s.rows(); ++k) os << (k ? "," : "") << s.parts()[k];
  return os << ')';
}

Permutation longest_element(int n) {
  if (n < 1) throw std::invalid_argument("longest_element needs n >= 1");
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = n - k;
  return Permutation(std::move(v));
}

namespace {

void check_letter(Letter i, const Permutation& w) {
  if (i < 1 || i > w.degree() - 1) {
    throw std::invalid_argument("letter " + std::to_string(i) + " outside [1, " +
                                std::to_string(w.degree() - 1) + "]");
  }
}

}  // namespace

Permutation apply_simple_left(Letter i, const Permutation& w) {
  check_letter(i, w);
  std::vector<int> v = w.oneline_;
  for (int& x : v) {
    if (x == i) {
      x = i + 1;
    } else if (x == i + 1) {
      x = i;
    }
  }
  return Permutation(std::move(v), Permutation::Trusted{});
}

Permutation apply_simple_right(const Permutation& w, Letter i) {
  check_letter(i, w);
  std::vector<int> v = w.oneline_;
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v), Permutation::Trusted{});
}

int length(const Permutation& w) {
  const auto v = w.oneline();
  int inv = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (v[a] > v[b]) ++inv;
  return inv;
}

std::vector<Letter> left_descents(const Permutation& w) {
  // s_i shortens w exactly when i+1 appears before i.
  const Permutation inv = w.inverse();
  std::vector<Letter> out;
  for (Letter i = 1; i < w.degree(); ++i)
    if (inv(i) > inv(i + 1)) out.push_back(i);
  return out;
}

std::vector<Letter> right_descents(const Permutation& w) {
  std::vector<Letter> out;
  for (Letter i = 1; i < w.degree(); ++i)
    if (w(i) > w(i + 1)) out.push_back(i);
  return out;
}

bool is_vexillary(const Permutation& w) {
  const auto v = w.oneline();
  const std::size_t n = v.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!(v[b] < v[a])) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!(v[c] > v[a])) continue;
        for (std::size_t d = c + 1; d < n; ++d)
          if (v[a] < v[d] && v[d] < v[c]) return false;
      }
    }
  return true;
}

Shape shape_of(const Permutation& w) {
  const auto v = w.oneline();
  std::vector<int> r(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (v[j] > v[i]) ++r[i];
  std::sort(r.begin(), r.end(), std::greater<>());
  return Shape(std::move(r));
}

Permutation a_permutation(int n, int j) {
  if (n < 3) throw std::invalid_argument("a_permutation needs n >= 3");
  if (j < 1 || j > n - 2) {
    throw std::invalid_argument("j = " + std::to_string(j) + " outside [1, " + std::to_string(n - 2) + "]");
  }
  Permutation a = apply_simple_left(j + 1, apply_simple_left(j, longest_element(n)));

  // n (n-1) ... (j+3) (j+1) j (j+2) (j-1) ... 2 1
  std::vector<int> expected;
  for (int v = n; v >= j + 3; --v) expected.push_back(v);
  expected.insert(expected.end(), {j + 1, j, j + 2});
  for (int v = j - 1; v >= 1; --v) expected.push_back(v);
  if (std::vector<int>(a.oneline().begin(), a.oneline().end()) != expected) {
    throw std::logic_error("s_{j+1} s_j w_0 disagrees with its explicit one-line form");
  }
  if (!is_vexillary(a)) throw std::logic_error("a_permutation is not vexillary");
  return a;
}

}  // namespace redwords
