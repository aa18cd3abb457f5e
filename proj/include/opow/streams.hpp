#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opow/words.hpp"

namespace opow {

/// An ultimately periodic ω-word u·v^∞ in canonical form: the cycle is
/// primitive and the head is shortest among all representations of the same
/// ω-word. Equality of canonical lassos is structural equality.
class Lasso {
 public:
  Lasso(Word head, Word cycle) {
    if (cycle.empty()) throw std::invalid_argument("lasso cycle must be nonempty");
    cycle_ = primitive_root(cycle);
    head_ = std::move(head);
    while (!head_.empty() && head_.back() == cycle_.back()) {
      head_.pop_back();
      cycle_ = cycle_.rotate_right();
    }
  }

  // Literal syntax: u(v) with digit strings, e.g. "0(10)"; "(1)" for 1^∞.
  static Lasso parse(std::string_view text) {
    auto open = text.find('(');
    auto close = text.find(')');
    if (open == std::string_view::npos || close != text.size() - 1 || close <= open)
      throw std::invalid_argument("bad lasso literal: " + std::string(text));
    std::string_view u = text.substr(0, open);
    std::string_view v = text.substr(open + 1, close - open - 1);
    if (v.empty()) throw std::invalid_argument("bad lasso literal (empty cycle): " + std::string(text));
    return Lasso(u.empty() ? Word{} : Word::parse(u), Word::parse(v));
  }

  std::string str() const {
    std::string s = head_.empty() ? "" : head_.str();
    return s + "(" + cycle_.str() + ")";
  }

  const Word& head() const { return head_; }
  const Word& cycle() const { return cycle_; }

  int letter(std::uint64_t k) const {
    if (k < head_.size()) return head_[static_cast<std::size_t>(k)];
    return cycle_[static_cast<std::size_t>((k - head_.size()) % cycle_.size())];
  }

  Word prefix(std::uint64_t k) const {
    Word w;
    for (std::uint64_t i = 0; i < k; ++i) w.append(letter(i));
    return w;
  }

  Lasso shift(std::uint64_t k) const {
    if (k <= head_.size()) return Lasso(head_.drop(static_cast<std::size_t>(k)), cycle_);
    std::uint64_t into = (k - head_.size()) % cycle_.size();
    return Lasso(Word{}, cycle_.rotate_left(static_cast<std::size_t>(into)));
  }

  bool fits(Alphabet a) const { return head_.fits(a) && cycle_.fits(a); }

  bool operator==(const Lasso&) const = default;
  auto operator<=>(const Lasso&) const = default;

 private:
  Word head_;
  Word cycle_;
};

inline Lasso lasso_normalize(Word head, Word cycle) {
  return Lasso(std::move(head), std::move(cycle));
}

inline Lasso lasso_shift(const Lasso& alpha, std::uint64_t k) { return alpha.shift(k); }

/// A computable ω-word given by a total letter function. Callers always pass
/// an explicit prefix/step budget; nothing here consumes a stream unboundedly.
class OmegaStream {
 public:
  explicit OmegaStream(std::function<int(std::uint64_t)> letter)
      : letter_(std::move(letter)) {}

  int letter(std::uint64_t k) const { return letter_(k); }

  Word prefix(std::uint64_t k) const {
    Word w;
    for (std::uint64_t i = 0; i < k; ++i) w.append(letter_(i));
    return w;
  }

 private:
  std::function<int(std::uint64_t)> letter_;
};

inline OmegaStream to_stream(const Lasso& alpha) {
  return OmegaStream([alpha](std::uint64_t k) { return alpha.letter(k); });
}

// α₀ = 1 0 1 0² 1 0³ ... : segment m (m >= 1) is 1·0^m and starts at
// position (m-1)(m+2)/2. Maximal 0-runs are strictly increasing.
inline std::uint64_t alpha0_segment_start(std::uint64_t m) {
  return (m - 1) * (m + 2) / 2;
}

inline int alpha0_letter(std::uint64_t k) {
  // Solve alpha0_segment_start(m) <= k: m ~ (sqrt(9+8k)-1)/2, then adjust.
  std::uint64_t m = static_cast<std::uint64_t>((std::sqrt(9.0 + 8.0 * static_cast<double>(k)) - 1.0) / 2.0);
  if (m < 1) m = 1;
  while (alpha0_segment_start(m) > k) --m;
  while (alpha0_segment_start(m + 1) <= k) ++m;
  return k == alpha0_segment_start(m) ? 1 : 0;
}

inline OmegaStream alpha0() { return OmegaStream(&alpha0_letter); }

/// All canonical lassos over `a` with |head| + |cycle| <= budget, in a fixed
/// deterministic order. Distinct entries denote distinct ω-words.
inline std::vector<Lasso> enumerate_lassos(Alphabet a, int budget) {
  std::vector<Lasso> out;
  auto words_of_len = [&](int len) {
    std::vector<Word> ws;
    Word w;
    std::function<void(int)> rec = [&](int left) {
      if (left == 0) {
        ws.push_back(w);
        return;
      }
      for (int l = 0; l < a.size; ++l) {
        w.append(l);
        rec(left - 1);
        w.pop_back();
      }
    };
    rec(len);
    return ws;
  };
  for (int hu = 0; hu + 1 <= budget; ++hu) {
    for (int vv = 1; hu + vv <= budget; ++vv) {
      for (const Word& u : words_of_len(hu))
        for (const Word& v : words_of_len(vv)) {
          Lasso l(u, v);
          if (l.head().size() == static_cast<std::size_t>(hu) &&
              l.cycle().size() == static_cast<std::size_t>(vv))
            out.push_back(l);  // keep canonical representatives only
        }
    }
  }
  return out;
}

}  // namespace opow
