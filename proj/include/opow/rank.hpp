#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opow/engine.hpp"

namespace opow {

/// The finite quotient of the decomposition tree T_A(α) on a lasso: one node
/// per position class, an edge p → p' for every member matching at p and
/// landing in p'. Positions in one class carry identical suffixes of α, so
/// the subtrees below them are isomorphic and the quotient is exact.
struct PositionGraph {
  int head = 0, cycle = 0;
  std::vector<std::vector<int>> succ;               // sorted distinct successor classes
  std::vector<std::vector<std::uint32_t>> match_len;  // shortest witness per successor

  int count() const { return head + cycle; }
  int initial() const { return 0; }
  bool on_cycle(int cls) const { return cls >= head; }
};

/// Matches per class are found by running the word acceptor along the lasso
/// up to the saturation bound |states|·|classes| + |head| + |cycle|; beyond
/// it, (state, class) pairs repeat and no new edge can appear.
inline PositionGraph position_graph(const CompiledDict& d, const Lasso& alpha) {
  if (!alpha.fits(d.alphabet)) throw std::invalid_argument("lasso outside alphabet");
  detail::LassoClasses pc(alpha);
  PositionGraph g;
  g.head = pc.head;
  g.cycle = pc.cycle;
  g.succ.resize(pc.count());
  g.match_len.resize(pc.count());
  std::uint64_t bound =
      static_cast<std::uint64_t>(d.dfa.size()) * pc.count() + pc.count();
  for (int c = 0; c < pc.count(); ++c) {
    std::vector<std::optional<std::uint32_t>> first_len(pc.count());
    int q = d.dfa.start;
    int cls = c;
    for (std::uint64_t len = 1; len <= bound; ++len) {
      q = d.dfa.next[q][pc.letter(alpha, cls)];
      cls = pc.next(cls);
      if (d.dfa.accepting[q] && !first_len[cls])
        first_len[cls] = static_cast<std::uint32_t>(len);
    }
    for (int t = 0; t < pc.count(); ++t)
      if (first_len[t]) {
        g.succ[c].push_back(t);
        g.match_len[c].push_back(*first_len[t]);
      }
  }
  return g;
}

inline PositionGraph position_graph(const DictExprPtr& e, const Lasso& alpha) {
  return position_graph(compile(e), alpha);
}

namespace detail {

// Classes from which an infinite path (hence an infinite branch of the
// decomposition tree) leaves.
inline std::vector<bool> graph_has_cycle_from(const PositionGraph& g) {
  int n = g.count();
  std::vector<int> color(n, 0);
  std::vector<bool> reaches_cycle(n, false);
  std::function<void(int)> dfs = [&](int v) {
    color[v] = 1;
    for (int t : g.succ[v]) {
      if (color[t] == 0) dfs(t);
      if (color[t] == 1 || reaches_cycle[t]) reaches_cycle[v] = true;
    }
    color[v] = 2;
  };
  for (int v = 0; v < n; ++v)
    if (color[v] == 0) dfs(v);
  return reaches_cycle;
}

}  // namespace detail

struct RankResult {
  bool member = false;       // α ∈ A^∞; the tree is ill-founded, no rank
  std::uint32_t rank = 0;    // ρ(T_A(α)) otherwise

  bool operator==(const RankResult&) const = default;
};

/// ρ(T_A(α)) on the class quotient: sinks have height 0, inner classes one
/// more than their highest successor, and the tree rank is the height of the
/// root class plus one (the root of the tree is the empty sequence).
inline RankResult rank_lasso(const CompiledDict& d, const Lasso& alpha) {
  PositionGraph g = position_graph(d, alpha);
  auto bad = detail::graph_has_cycle_from(g);
  if (bad[g.initial()]) return {true, 0};
  std::vector<std::int64_t> h(g.count(), -1);
  std::function<std::int64_t(int)> height = [&](int v) -> std::int64_t {
    if (h[v] >= 0) return h[v];
    std::int64_t best = 0;
    for (int t : g.succ[v]) best = std::max(best, height(t) + 1);
    return h[v] = best;
  };
  return {false, static_cast<std::uint32_t>(height(g.initial()) + 1)};
}

inline RankResult rank_lasso(const DictExprPtr& e, const Lasso& alpha) {
  return rank_lasso(compile(e), alpha);
}

/// Membership by well-foundedness: α ∈ A^∞ iff the decomposition tree has an
/// infinite branch, i.e. a cycle is reachable in the position graph. Kept as
/// an independent route for cross-validating member_lasso.
inline bool member_positions(const CompiledDict& d, const Lasso& alpha) {
  PositionGraph g = position_graph(d, alpha);
  return detail::graph_has_cycle_from(g)[g.initial()];
}

inline bool member_positions(const DictExprPtr& e, const Lasso& alpha) {
  return member_positions(compile(e), alpha);
}

/// Finite levels of the E hierarchy on the position graph: E₀ holds where no
/// member matches, E_{k+1} where every match leads into E_k. The answer is
/// the value at the class of position 0.
inline bool e_level(const CompiledDict& d, const Lasso& alpha, int k) {
  if (k < 0) throw std::invalid_argument("e_level: negative level");
  PositionGraph g = position_graph(d, alpha);
  std::vector<bool> e(g.count());
  for (int c = 0; c < g.count(); ++c) e[c] = g.succ[c].empty();
  for (int level = 0; level < k; ++level) {
    std::vector<bool> nxt(g.count());
    for (int c = 0; c < g.count(); ++c)
      nxt[c] = std::all_of(g.succ[c].begin(), g.succ[c].end(), [&](int t) { return e[t]; });
    e = std::move(nxt);
  }
  return e[g.initial()];
}

inline bool e_level(const DictExprPtr& ex, const Lasso& alpha, int k) {
  return e_level(compile(ex), alpha, k);
}

/// Summary of the rank function R(A) = sup over α ∉ A^∞ of ρ(T_A(α)) for a
/// finite dictionary. Zero iff A^∞ is everything, One iff it is empty, Omega
/// iff it is closed but not open. In the remaining (clopen) case the exact
/// finite supremum has no closed form here; a certified lower bound over all
/// lassos with |head|+|cycle| ≤ budget is reported instead.
struct RankSummary {
  enum class Kind { Zero, One, FiniteClopen, Omega } kind;
  std::uint32_t lower_bound = 0;  // meaningful for FiniteClopen only

  bool operator==(const RankSummary&) const = default;
};

inline std::string to_string(RankSummary::Kind k) {
  switch (k) {
    case RankSummary::Kind::Zero: return "Zero";
    case RankSummary::Kind::One: return "One";
    case RankSummary::Kind::FiniteClopen: return "FiniteClopen";
    case RankSummary::Kind::Omega: return "Omega";
  }
  return "?";
}

inline RankSummary rank_summary(const FiniteDict& d, int budget = 8) {
  TopoClass c = topo_class(d);
  switch (c) {
    case TopoClass::Full: return {RankSummary::Kind::Zero, 0};
    case TopoClass::Empty: return {RankSummary::Kind::One, 1};
    case TopoClass::ClosedNotOpen: return {RankSummary::Kind::Omega, 0};
    case TopoClass::Clopen: break;
  }
  CompiledDict cd = compile(d.expr());
  std::uint32_t best = 0;
  for (const Lasso& l : enumerate_lassos(d.alphabet, budget)) {
    RankResult r = rank_lasso(cd, l);
    if (!r.member) best = std::max(best, r.rank);
  }
  return {RankSummary::Kind::FiniteClopen, best};
}

}  // namespace opow
