#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "opow/rank.hpp"

namespace opow {

/// Decides whether a single word generates the same ω-power. With u the
/// primitive root of the shortest nonempty member, A^∞ is singly generated
/// iff every member is a power of u; the reported witness is the shortest
/// member itself. An ω-power-empty dictionary is generated by {∅}.
inline std::pair<bool, std::optional<Word>> g1(const FiniteDict& d) {
  std::vector<Word> members = d.nonempty_words();
  if (members.empty()) return {true, Word{}};
  Word u = primitive_root(members.front());  // shortlex order: front is shortest
  for (const Word& w : members) {
    if (w.size() % u.size() != 0) return {false, std::nullopt};
    if (!(u.pow(w.size() / u.size()) == w)) return {false, std::nullopt};
  }
  return {true, members.front()};
}

namespace detail {

// Candidate generators: nonempty prefixes of members, shortlex sorted.
inline std::vector<Word> member_prefixes(const FiniteDict& d) {
  std::set<Word> ps;
  for (const Word& w : d.words)
    for (std::size_t k = 1; k <= w.size(); ++k) ps.insert(w.prefix(k));
  std::vector<Word> out(ps.begin(), ps.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace detail

/// Two-word generation. Candidate pairs are drawn from nonempty prefixes of
/// members: any two-word generator must show up as first blocks of member
/// decompositions, hence as member prefixes, which makes this search
/// complete. Ties break by total length, then shortlex.
inline std::pair<bool, std::optional<std::pair<Word, Word>>> g2(const FiniteDict& d) {
  auto [in_g1, w1] = g1(d);
  std::vector<Word> cand = detail::member_prefixes(d);
  std::vector<std::pair<Word, Word>> pairs;
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j) pairs.push_back({cand[i], cand[j]});
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return a.first.size() + a.second.size() < b.first.size() + b.second.size();
  });
  for (const auto& [s1, s2] : pairs) {
    if (equivalent(d, FiniteDict::of(d.alphabet, {s1, s2}))) return {true, std::make_pair(s1, s2)};
  }
  if (in_g1) return {true, std::nullopt};  // singly generated, no proper pair needed
  return {false, std::nullopt};
}

/// Searches p-tuples of member prefixes. Positive answers carry a verified
/// witness. The prefix candidate space is complete for p ≤ 2; for p ≥ 3 a
/// negative answer only means "no prefix-tuple witness" and is flagged
/// inconclusive.
struct GSearchResult {
  bool found = false;
  std::vector<Word> witness;
  bool conclusive = true;
};

inline GSearchResult g_search(const FiniteDict& d, int p) {
  if (p < 1) throw std::invalid_argument("g_search: p must be >= 1");
  // Generator families are monotone in p (repeated words collapse), so the
  // smallest witness found wins.
  auto [ok1, w1] = g1(d);
  if (ok1) return {true, {*w1}, true};
  if (p == 1) return {false, {}, true};
  std::vector<Word> cand = detail::member_prefixes(d);
  for (int size = 2; size <= p; ++size) {
    std::vector<std::vector<Word>> tuples;
    std::vector<Word> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (static_cast<int>(cur.size()) == size) {
        tuples.push_back(cur);
        return;
      }
      for (std::size_t i = from; i < cand.size(); ++i) {
        cur.push_back(cand[i]);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    std::stable_sort(tuples.begin(), tuples.end(), [](const auto& a, const auto& b) {
      std::size_t la = 0, lb = 0;
      for (const Word& w : a) la += w.size();
      for (const Word& w : b) lb += w.size();
      return la < lb;
    });
    for (const auto& t : tuples)
      if (equivalent(d, FiniteDict::of(d.alphabet, t))) return {true, t, true};
  }
  return {false, {}, p <= 2};
}

struct GClassReport {
  bool g0 = false;
  bool g1 = false;
  std::optional<Word> g1_witness;
  bool g2 = false;
  std::optional<std::pair<Word, Word>> g2_witness;
  int searched_p = 2;
};

struct ClassifyReport {
  GClassReport gclass;
  TopoClass topo = TopoClass::Empty;
  RankSummary rank{RankSummary::Kind::One, 1};
};

inline GClassReport g_class_report(const FiniteDict& d) {
  GClassReport r;
  r.g0 = d.nonempty_words().empty();
  auto [ok1, w1] = g1(d);
  r.g1 = ok1;
  r.g1_witness = w1;
  auto [ok2, w2] = g2(d);
  r.g2 = ok2;
  r.g2_witness = w2;
  return r;
}

inline ClassifyReport classify_report(const FiniteDict& d) {
  return ClassifyReport{g_class_report(d), topo_class(d), rank_summary(d)};
}

}  // namespace opow
