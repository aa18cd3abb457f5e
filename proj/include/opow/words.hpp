#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opow {

// Letters are the integers 0..size-1.
struct Alphabet {
  int size;

  explicit Alphabet(int n = 2) : size(n) {
    if (n < 2 || n > 16)
      throw std::invalid_argument("alphabet size must be between 2 and 16");
  }

  bool valid(int letter) const { return letter >= 0 && letter < size; }
  bool operator==(const Alphabet&) const = default;
};

/// A finite word over a small integer alphabet. The empty word is a valid
/// value and is written `e` in the literal syntax.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<int> letters) {
    letters_.reserve(letters.size());
    for (int l : letters) letters_.push_back(static_cast<std::uint8_t>(l));
  }

  // Literal syntax: a string of digits, e.g. "0100"; "e" is the empty word.
  static Word parse(std::string_view text) {
    if (text == "e") return Word{};
    Word w;
    w.letters_.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("bad word literal: " + std::string(text));
      w.letters_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return w;
  }

  std::string str() const {
    if (letters_.empty()) return "e";
    std::string s;
    s.reserve(letters_.size());
    for (auto l : letters_) s.push_back(static_cast<char>('0' + l));
    return s;
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  int back() const { return letters_.back(); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }

  bool fits(Alphabet a) const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [&](std::uint8_t l) { return a.valid(l); });
  }

  Word prefix(std::size_t len) const {
    len = std::min(len, letters_.size());
    return Word(std::vector<std::uint8_t>(letters_.begin(), letters_.begin() + len));
  }

  // s.drop(k) is the paper-style shift s - s|k.
  Word drop(std::size_t k) const {
    k = std::min(k, letters_.size());
    return Word(std::vector<std::uint8_t>(letters_.begin() + k, letters_.end()));
  }

  Word& append(int letter) {
    letters_.push_back(static_cast<std::uint8_t>(letter));
    return *this;
  }

  Word& pop_back() {
    letters_.pop_back();
    return *this;
  }

  friend Word operator+(const Word& a, const Word& b) {
    std::vector<std::uint8_t> ls = a.letters_;
    ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(ls));
  }

  Word pow(std::size_t k) const {
    Word r;
    r.letters_.reserve(letters_.size() * k);
    for (std::size_t i = 0; i < k; ++i)
      r.letters_.insert(r.letters_.end(), letters_.begin(), letters_.end());
    return r;
  }

  // Cycle rotation moving the last letter to the front: wa -> aw.
  Word rotate_right() const {
    if (letters_.size() < 2) return *this;
    std::vector<std::uint8_t> ls;
    ls.reserve(letters_.size());
    ls.push_back(letters_.back());
    ls.insert(ls.end(), letters_.begin(), letters_.end() - 1);
    return Word(std::move(ls));
  }

  Word rotate_left(std::size_t k) const {
    if (letters_.empty()) return *this;
    k %= letters_.size();
    std::vector<std::uint8_t> ls(letters_.begin() + k, letters_.end());
    ls.insert(ls.end(), letters_.begin(), letters_.begin() + k);
    return Word(std::move(ls));
  }

  bool operator==(const Word&) const = default;
  // Lexicographic; use shortlex_less for enumeration order.
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<std::uint8_t> letters_;
};

inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// The non-strict prefix ordering s ≺ t.
inline bool is_prefix(const Word& s, const Word& t) {
  if (s.size() > t.size()) return false;
  return std::equal(s.letters().begin(), s.letters().end(), t.letters().begin());
}

inline bool is_strict_prefix(const Word& s, const Word& t) {
  return s.size() < t.size() && is_prefix(s, t);
}

// Incompatibility s ⊥ t: neither extends the other.
inline bool incompatible(const Word& s, const Word& t) {
  return !is_prefix(s, t) && !is_prefix(t, s);
}

inline bool compatible(const Word& s, const Word& t) { return !incompatible(s, t); }

// Longest common prefix s ∧ t.
inline Word meet(const Word& s, const Word& t) {
  std::size_t n = std::min(s.size(), t.size());
  std::size_t i = 0;
  while (i < n && s[i] == t[i]) ++i;
  return s.prefix(i);
}

inline bool commutes(const Word& x, const Word& y) { return x + y == y + x; }

/// Shortest u with w = u^k, k >= 1. Tested divisor length by divisor length;
/// quadratic, which is fine at the word sizes this library targets.
inline Word primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive_root of the empty word");
  for (std::size_t d = 1; d <= w.size(); ++d) {
    if (w.size() % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < w.size() && periodic; ++i)
      periodic = w[i] == w[i % d];
    if (periodic) return w.prefix(d);
  }
  return w;  // unreachable; d = |w| always succeeds
}

inline bool is_primitive(const Word& w) { return primitive_root(w) == w; }

// meet(s1·s2, s2·s1): the point after which s2·s1· ... and s1^q·s2· ... split.
inline Word split_point(const Word& s1, const Word& s2) {
  return meet(s1 + s2, s2 + s1);
}

/// The q-th chunk of an ω-word under a cut sequence beta: chunk 0 has length
/// beta[0]+1, chunk q>0 has length beta[q] and starts right after chunk q-1.
/// `alpha` is anything exposing letters by index (Lasso, OmegaStream, ...).
template <class AlphaFn>
Word pi_chunk(const AlphaFn& alpha, std::span<const int> beta, int q) {
  if (q < 0 || static_cast<std::size_t>(q) >= beta.size())
    throw std::invalid_argument("pi_chunk: cut index out of range");
  for (int m = 1; m <= q; ++m)
    if (beta[m] <= 0) throw std::invalid_argument("pi_chunk: beta must be positive after index 0");
  std::uint64_t start = 0, end = 0;  // inclusive positions
  if (q == 0) {
    end = static_cast<std::uint64_t>(beta[0]);
  } else {
    std::uint64_t sum = 0;
    for (int j = 0; j < q; ++j) sum += static_cast<std::uint64_t>(beta[j]);
    start = 1 + sum;
    end = sum + static_cast<std::uint64_t>(beta[q]);
  }
  Word w;
  for (std::uint64_t i = start; i <= end; ++i) w.append(alpha.letter(i));
  return w;
}

}  // namespace opow
