#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "opow/dict.hpp"
#include "opow/engine.hpp"
#include "opow/streams.hpp"

namespace opow {

using u128 = unsigned __int128;

inline std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

// ---------------------------------------------------------------------------
// Alphabet change: fixed-width binary letter codes σ_m enumerated
// lexicographically. Words map letterwise, so the coding is a monoid
// homomorphism and ω-power membership transports along it.
// ---------------------------------------------------------------------------

struct BinaryEncoding {
  Alphabet source;
  int width;  // min p with source.size <= 2^p

  Word encode_word(const Word& w) const {
    Word out;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (int b = width - 1; b >= 0; --b) out.append((w[i] >> b) & 1);
    return out;
  }

  Lasso encode_lasso(const Lasso& l) const {
    return Lasso(encode_word(l.head()), encode_word(l.cycle()));
  }

  DictExprPtr encode_expr(const DictExprPtr& e) const {
    Alphabet two(2);
    switch (e->kind()) {
      case DictExpr::Kind::Finite: {
        std::vector<Word> ws;
        for (const Word& w : e->words()) ws.push_back(encode_word(w));
        return DictExpr::finite(two, std::move(ws));
      }
      case DictExpr::Kind::Ext: {
        // Extensions of t map to Φ(t) followed by any letter codes.
        std::vector<Word> sigma;
        for (int m = 0; m < source.size; ++m) sigma.push_back(encode_word(Word{m}));
        return DictExpr::concat(DictExpr::finite(two, {encode_word(e->words()[0])}),
                                DictExpr::star(DictExpr::finite(two, std::move(sigma))));
      }
      case DictExpr::Kind::Concat:
        return DictExpr::concat(encode_expr(e->subs()[0]), encode_expr(e->subs()[1]));
      case DictExpr::Kind::Union:
        return DictExpr::unite(encode_expr(e->subs()[0]), encode_expr(e->subs()[1]));
      case DictExpr::Kind::Star:
        return DictExpr::star(encode_expr(e->subs()[0]));
      case DictExpr::Kind::Diff:
        // Letter codes are injective, so difference commutes with the coding.
        return DictExpr::diff(encode_expr(e->subs()[0]), encode_expr(e->subs()[1]));
    }
    throw std::logic_error("unreachable");
  }
};

inline BinaryEncoding binary_encoding(Alphabet source) {
  int width = 1;
  while ((1 << width) < source.size) ++width;
  return BinaryEncoding{source, width};
}

// ---------------------------------------------------------------------------
// Finite trees on ω: prefix-closed sets of finite sequences of naturals.
// ---------------------------------------------------------------------------

using Seq = std::vector<std::uint32_t>;

inline std::string seq_str(const Seq& s) {
  if (s.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(s[i]);
  }
  return out;
}

struct FiniteTree {
  std::vector<Seq> nodes;  // sorted, unique, prefix-closed

  static FiniteTree of(std::vector<Seq> ns) {
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    FiniteTree t{std::move(ns)};
    for (const Seq& s : t.nodes) {
      if (s.empty()) continue;
      Seq parent(s.begin(), s.end() - 1);
      if (!t.contains(parent))
        throw std::invalid_argument("tree is not prefix-closed at " + seq_str(s));
    }
    return t;
  }

  bool contains(const Seq& s) const {
    return std::binary_search(nodes.begin(), nodes.end(), s);
  }

  std::vector<Seq> children(const Seq& s) const {
    std::vector<Seq> out;
    for (const Seq& t : nodes)
      if (t.size() == s.size() + 1 && std::equal(s.begin(), s.end(), t.begin()))
        out.push_back(t);
    return out;
  }

  bool empty() const { return nodes.empty(); }
};

// Tree file format: one node per line as comma-separated naturals, `()` for
// the empty sequence. Prefix closure is validated on load.
inline FiniteTree parse_tree_file(const std::string& content) {
  std::vector<Seq> nodes;
  std::istringstream iss(content);
  std::string line;
  while (std::getline(iss, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string t;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) continue;
    if (t == "()") {
      nodes.push_back({});
      continue;
    }
    Seq s;
    std::istringstream ls(t);
    std::string item;
    while (std::getline(ls, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) {
            return c >= '0' && c <= '9';
          }))
        throw std::invalid_argument("bad tree node: " + line);
      s.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    nodes.push_back(std::move(s));
  }
  return FiniteTree::of(std::move(nodes));
}

// ψ(t) = 0^{t(0)} 1 0^{t(1)} 1 ... 0^{t(|t|-1)} 1
inline Word psi(const Seq& t) {
  Word w;
  for (std::uint32_t v : t) {
    for (std::uint32_t i = 0; i < v; ++i) w.append(0);
    w.append(1);
  }
  return w;
}

// ---------------------------------------------------------------------------
// The prime-power sequence code M and the word coding φ into prefixes of
// α₀ = 1 0 1 0² 1 0³ ... . φ(t) is the block of α₀-segments
// 2M(parent)+1 .. 2M(t); φ(∅) covers segments 1..2. M(∅) = 1 so that the
// segment blocks of φ(∅) and its successors tile α₀ without a gap.
// ---------------------------------------------------------------------------

namespace detail {
inline constexpr std::uint64_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                            31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
}

inline std::uint64_t m_code(const Seq& s) {
  if (s.empty()) return 1;
  if (s.size() > std::size(detail::kPrimes))
    throw std::invalid_argument("m_code: sequence too deep");
  u128 m = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::uint64_t e = 0; e <= s[i]; ++e) {
      m *= detail::kPrimes[i];
      if (m > static_cast<u128>(1) << 62)
        throw std::overflow_error("m_code: value does not fit the supported range");
    }
  }
  return static_cast<std::uint64_t>(m) + 1;
}

// φ(t) as a range of α₀ segments (segment j is 1·0^j).
struct SegRange {
  std::uint64_t first, last;
};

inline SegRange phi_segments(const Seq& t) {
  if (t.empty()) return {1, 2};
  Seq parent(t.begin(), t.end() - 1);
  return {2 * m_code(parent) + 1, 2 * m_code(t)};
}

inline u128 segment_length(u128 j) { return j + 1; }

inline u128 segments_total_length(SegRange r) {
  // Σ_{j=a}^{b} (j+1)
  u128 a = r.first, b = r.last;
  return (b - a + 1) + (a + b) * (b - a + 1) / 2;
}

inline u128 alpha0_segment_start128(u128 m) { return (m - 1) * (m + 2) / 2; }

inline u128 phi_length(const Seq& t) { return segments_total_length(phi_segments(t)); }

/// Materializes φ(t). Deep or high-labelled nodes have astronomically long
/// images; callers that only need lengths or alignment should stay with
/// phi_segments.
inline Word phi_word(const Seq& t, std::size_t max_letters = std::size_t{1} << 27) {
  SegRange r = phi_segments(t);
  u128 len = segments_total_length(r);
  if (len > static_cast<u128>(max_letters))
    throw std::length_error("phi_word: image too long to materialize");
  Word w;
  for (std::uint64_t j = r.first; j <= r.last; ++j) {
    w.append(1);
    for (std::uint64_t i = 0; i < j; ++i) w.append(0);
  }
  return w;
}

/// Φ(T) = φ[T] as an explicit dictionary over 2.
inline FiniteDict tree_dict(const FiniteTree& t, std::size_t max_letters = std::size_t{1} << 27) {
  std::vector<Word> words;
  for (const Seq& s : t.nodes) words.push_back(phi_word(s, max_letters));
  return FiniteDict::of(Alphabet(2), std::move(words));
}

/// Every chain φ(γ|0)·φ(γ|1)·...·φ(γ|L) must be a prefix of α₀; checking it
/// letter by letter exercises the M/φ implementation against the independent
/// α₀ letter function. Beyond the materialization budget the check degrades
/// to exact segment tiling, which verifies the same alignment identities.
inline bool branch_check(const Seq& gamma, std::size_t L,
                         std::size_t max_letters = std::size_t{1} << 20) {
  if (L > gamma.size()) throw std::invalid_argument("branch_check: L exceeds the prefix");
  std::vector<SegRange> ranges;
  u128 total = 0;
  for (std::size_t i = 0; i <= L; ++i) {
    Seq prefix(gamma.begin(), gamma.begin() + i);
    ranges.push_back(phi_segments(prefix));
    total += segments_total_length(ranges.back());
  }
  if (total <= static_cast<u128>(max_letters)) {
    std::uint64_t pos = 0;
    for (std::size_t i = 0; i <= L; ++i) {
      Seq prefix(gamma.begin(), gamma.begin() + i);
      Word w = phi_word(prefix, max_letters);
      for (std::size_t k = 0; k < w.size(); ++k, ++pos)
        if (w[k] != alpha0_letter(pos)) return false;
    }
    return true;
  }
  std::uint64_t expect = 1;
  for (const SegRange& r : ranges) {
    if (r.first != expect || r.last < r.first) return false;
    expect = r.last + 1;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Safety run of Φ(T) along α₀ at full scale. Matching is segment-aligned:
// a word can only start where its first segment index equals the next α₀
// segment, and then matches exactly through its last segment. All partial
// match spans are computed in closed form, so the exact death step of the
// prefix-set safety automaton comes out without materializing any word.
// ---------------------------------------------------------------------------

/// Exact number of letters the safety automaton of Φ(T) consumes on α₀
/// before dying. Finite trees always die: the word chains follow branches of
/// T and branches end.
inline u128 tree_safety_death(const FiniteTree& t) {
  if (t.empty()) return 0;  // no words at all: the automaton starts dead
  std::vector<SegRange> words;
  for (const Seq& s : t.nodes) words.push_back(phi_segments(s));

  std::set<std::uint64_t> boundaries{1};
  std::vector<std::uint64_t> todo{1};
  std::vector<std::pair<u128, u128>> spans;  // alive state-index intervals
  while (!todo.empty()) {
    std::uint64_t m = todo.back();
    todo.pop_back();
    u128 p = alpha0_segment_start128(m);
    for (const SegRange& w : words) {
      if (w.first == m) {
        spans.push_back({p + 1, p + segments_total_length(w)});
        std::uint64_t nb = w.last + 1;
        if (boundaries.insert(nb).second) todo.push_back(nb);
      } else {
        u128 survive = std::min<u128>(w.first, m) + 1;  // letters beyond the initial 1
        spans.push_back({p + 1, p + survive});
      }
    }
  }

  std::sort(spans.begin(), spans.end());
  u128 covered = 0;
  for (const auto& [s, e] : spans) {
    if (s > covered + 1) break;
    covered = std::max(covered, e);
  }
  return covered + 1;
}

/// The documented step budget within which the safety run must die:
/// twice the longest word of Φ(T) plus |φ(∅)|.
inline u128 tree_safety_bound(const FiniteTree& t) {
  u128 longest = 0;
  for (const Seq& s : t.nodes) longest = std::max(longest, phi_length(s));
  return 2 * longest + 5;
}

// ---------------------------------------------------------------------------
// Membership in Φ'(T) = φ[T] ∪ {s : some t ∈ E ∪ F is a prefix of s}, where
// E holds the one-letter deviations from α₀ (skipping position 2) and F the
// φ[T]-concatenations that are not subwords of α₀.
// ---------------------------------------------------------------------------

/// t ⊆ α₀: does t occur as a subword? The 0-runs of α₀ are strictly
/// increasing, so an occurrence with two or more 1s is pinned by its 1-gaps,
/// and short patterns occur, if at all, within the first |t|+4 segments.
inline bool alpha0_subword(const Word& t) {
  if (t.empty()) return true;
  OmegaStream a0 = alpha0();
  std::uint64_t L = t.size();
  std::uint64_t limit = alpha0_segment_start(L + 4) + L + 4;
  for (std::uint64_t k = 0; k <= limit; ++k) {
    bool ok = true;
    for (std::uint64_t i = 0; i < L && ok; ++i) ok = t[i] == a0.letter(k + i);
    if (ok) return true;
  }
  return false;
}

inline bool phi_prime_member(const FiniteTree& tree, const Word& s) {
  // Direct φ[T] hit.
  for (const Seq& t : tree.nodes) {
    if (phi_length(t) != static_cast<u128>(s.size())) continue;
    if (phi_word(t) == s) return true;
  }
  // E: s extends (α₀|p)·r with r ≠ α₀(p), p ≠ 2.
  OmegaStream a0 = alpha0();
  bool agrees = true;
  for (std::size_t p = 0; p < s.size() && agrees; ++p) {
    if (p != 2 && s[p] != a0.letter(p)) return true;
    agrees = s[p] == a0.letter(p);
  }
  // F: some concatenation of φ[T]-words that is not a subword of α₀
  // prefixes s. Only words no longer than s matter.
  std::vector<Word> small;
  for (const Seq& t : tree.nodes)
    if (phi_length(t) <= static_cast<u128>(s.size())) small.push_back(phi_word(t));
  std::function<bool(const Word&)> extend = [&](const Word& sofar) -> bool {
    if (!sofar.empty() && !alpha0_subword(sofar)) return true;
    for (const Word& w : small) {
      if (sofar.size() + w.size() > s.size()) continue;
      if (!is_prefix(w, s.drop(sofar.size()))) continue;
      if (extend(sofar + w)) return true;
    }
    return false;
  };
  return extend(Word{});
}

// ---------------------------------------------------------------------------
// Ranks under the coding: ρ(T) against the rank of the decomposition tree
// T_{φ[T]}(α₀). Nodes of the latter are chains of φ-words whose segment
// ranges tile α₀ from segment 1, so exploration runs on segment indices.
// ---------------------------------------------------------------------------

inline std::uint32_t tree_rank(const FiniteTree& t) {
  if (t.empty()) return 0;
  std::function<std::uint32_t(const Seq&)> height = [&](const Seq& s) -> std::uint32_t {
    std::uint32_t best = 0;
    for (const Seq& c : t.children(s)) best = std::max(best, height(c) + 1);
    return best;
  };
  return height(Seq{}) + 1;
}

inline std::uint32_t alpha0_rank(const FiniteTree& t) {
  std::vector<SegRange> words;
  for (const Seq& s : t.nodes) words.push_back(phi_segments(s));
  std::map<std::uint64_t, std::uint32_t> memo;
  std::function<std::uint32_t(std::uint64_t)> height = [&](std::uint64_t next_seg) -> std::uint32_t {
    auto it = memo.find(next_seg);
    if (it != memo.end()) return it->second;
    std::uint32_t best = 0;
    for (const SegRange& w : words)
      if (w.first == next_seg) best = std::max(best, height(w.last + 1) + 1);
    memo[next_seg] = best;
    return best;
  };
  return height(1) + 1;
}

// ---------------------------------------------------------------------------
// The antichain map γ ↦ {0^k 1 : γ(k) = 1}.
// ---------------------------------------------------------------------------

inline FiniteDict phi_pf(const std::vector<int>& gamma_prefix) {
  std::vector<Word> words;
  for (std::size_t k = 0; k < gamma_prefix.size(); ++k) {
    if (gamma_prefix[k] != 1) continue;
    Word w;
    for (std::size_t i = 0; i < k; ++i) w.append(0);
    w.append(1);
    words.push_back(std::move(w));
  }
  return FiniteDict::of(Alphabet(2), std::move(words));
}

}  // namespace opow
