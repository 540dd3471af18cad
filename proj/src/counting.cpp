#include "redwords/counting.hpp"

#include <stdexcept>
#include <string>

#include "redwords/errors.hpp"

namespace redwords {

namespace {

std::uint64_t pack(const std::vector<int>& oneline) {
  std::uint64_t key = 0;
  for (int v : oneline) key = (key << 4) | static_cast<std::uint64_t>(v - 1);
  return key;
}

void require_degree(const CountingSession& s, const Permutation& w) {
  if (w.degree() != s.degree()) {
    throw std::invalid_argument("permutation of degree " + std::to_string(w.degree()) +
                                " passed to a session of degree " + std::to_string(s.degree()));
  }
}

}  // namespace

CountingSession::CountingSession(int n, std::size_t memo_cap) : n_(n), cap_(memo_cap) {
  if (n < 1 || n > 16) throw std::invalid_argument("counting session degree must be in [1, 16]");
}

const BigInt& CountingSession::count(const Permutation& w) {
  require_degree(*this, w);
  std::vector<int> v(w.oneline().begin(), w.oneline().end());
  return count_packed(pack(v), v);
}

const BigInt* CountingSession::lookup(const Permutation& w) const {
  require_degree(*this, w);
  auto it = memo_.find(w.packed());
  return it == memo_.end() ? nullptr : &it->second;
}

const BigInt& CountingSession::count_packed(std::uint64_t key, std::vector<int>& oneline) {
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (memo_.size() >= cap_) {
    throw ResourceCapExceeded("reduced-word memo reached its cap of " + std::to_string(cap_) + " entries");
  }

  std::vector<int> pos(n_ + 1);
  for (int k = 0; k < n_; ++k) pos[oneline[k]] = k;

  BigInt total = 0;
  bool any = false;
  for (int i = 1; i < n_; ++i) {
    if (pos[i] < pos[i + 1]) continue;
    any = true;
    std::swap(oneline[pos[i]], oneline[pos[i + 1]]);
    total += count_packed(pack(oneline), oneline);
    std::swap(oneline[pos[i]], oneline[pos[i + 1]]);
  }
  if (!any) total = 1;
  return memo_.emplace(key, std::move(total)).first->second;
}

BigInt count_words(const Permutation& w, std::size_t memo_cap) {
  CountingSession session(w.degree(), memo_cap);
  return session.count(w);
}

Rational prefix_probability(CountingSession& session, const Permutation& w,
                            std::span<const Letter> prefix) {
  Permutation rest = w;
  for (Letter p : prefix) {
    if (p < 1 || p >= w.degree()) return Rational(0);
    const Permutation next = apply_simple_left(p, rest);
    if (length(next) >= length(rest)) return Rational(0);
    rest = next;
  }
  const BigInt numerator = session.count(rest);
  return make_rational(numerator, session.count(w));
}

Rational prefix_probability(const Permutation& w, std::span<const Letter> prefix) {
  CountingSession session(w.degree());
  return prefix_probability(session, w, prefix);
}

void for_each_word(const Permutation& w, const std::function<void(std::span<const Letter>)>& visit,
                   std::uint64_t cap) {
  const BigInt total = count_words(w);
  if (total > BigInt(static_cast<unsigned long>(cap))) {
    throw ResourceCapExceeded("permutation has " + total.get_str() + " reduced words; enumeration cap is " +
                              std::to_string(cap));
  }

  std::vector<Letter> word;
  word.reserve(static_cast<std::size_t>(length(w)));
  // Depth-first over left descents in increasing order gives lexicographic order.
  std::function<void(const Permutation&)> walk = [&](const Permutation& u) {
    const auto descents = left_descents(u);
    if (descents.empty()) {
      visit(word);
      return;
    }
    for (Letter i : descents) {
      word.push_back(i);
      walk(apply_simple_left(i, u));
      word.pop_back();
    }
  };
  walk(w);
}

std::vector<ReducedWord> enumerate_words(const Permutation& w, std::uint64_t cap) {
  std::vector<ReducedWord> out;
  for_each_word(
      w, [&](std::span<const Letter> letters) {
        out.emplace_back(w.degree(), std::vector<Letter>(letters.begin(), letters.end()));
      },
      cap);
  return out;
}

}  // namespace redwords
