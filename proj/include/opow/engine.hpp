#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "opow/dict.hpp"
#include "opow/streams.hpp"

namespace opow {

/// Büchi-style acceptor for A^∞ = (A⁻)^ω: the word acceptor for A plus a
/// re-entry move back to the start whenever a nonempty word completes. A run
/// is accepting iff it completes words infinitely often.
struct OmegaAcceptor {
  Alphabet alphabet{2};
  Dfa dfa;                 // word acceptor for A
  std::vector<bool> live;  // dfa states that can still reach an accepting state
};

inline OmegaAcceptor build_omega(const CompiledDict& d) {
  return OmegaAcceptor{d.alphabet, d.dfa, d.dfa.live()};
}

inline OmegaAcceptor build_omega(const DictExprPtr& e) { return build_omega(compile(e)); }

namespace detail {

// Position classes of a lasso: head positions individually, cycle positions
// modulo the cycle length. Two positions in a class have identical suffixes.
struct LassoClasses {
  int head, cycle;

  explicit LassoClasses(const Lasso& l)
      : head(static_cast<int>(l.head().size())), cycle(static_cast<int>(l.cycle().size())) {}

  int count() const { return head + cycle; }
  int initial() const { return head > 0 ? 0 : head; }  // class of position 0
  int letter(const Lasso& l, int cls) const {
    return cls < head ? l.head()[cls] : l.cycle()[cls - head];
  }
  int next(int cls) const {
    if (cls < head) return cls + 1 == head + cycle ? head : cls + 1;
    int c = cls - head + 1;
    return head + (c == cycle ? 0 : c);
  }
  bool on_cycle(int cls) const { return cls >= head; }
};

}  // namespace detail

/// Decides α ∈ A^∞ by searching for an accepting cycle in the product of the
/// ω-acceptor with the lasso's position classes.
inline bool member_lasso(const OmegaAcceptor& acc, const Lasso& alpha) {
  if (!alpha.fits(acc.alphabet)) throw std::invalid_argument("lasso outside alphabet");
  detail::LassoClasses pc(alpha);
  const int nq = acc.dfa.size();
  auto id = [&](int q, int c) { return q * pc.count() + c; };

  // Successors: continue inside the current word (if still viable), and/or
  // complete a word and re-enter at the start. Completion edges are the
  // accepting transitions.
  struct Edge {
    int to;
    bool completes;
  };
  auto edges = [&](int node) {
    int q = node / pc.count(), c = node % pc.count();
    int a = pc.letter(alpha, c);
    int q2 = acc.dfa.next[q][a];
    int c2 = pc.next(c);
    std::vector<Edge> out;
    if (acc.live[q2]) out.push_back({id(q2, c2), false});
    if (acc.dfa.accepting[q2]) out.push_back({id(acc.dfa.start, c2), true});
    return out;
  };

  int startNode = id(acc.dfa.start, pc.initial());
  // Reachable subgraph.
  std::vector<int> index(nq * pc.count(), -1);
  std::vector<int> nodes;
  std::queue<int> bfs;
  bfs.push(startNode);
  index[startNode] = 0;
  nodes.push_back(startNode);
  while (!bfs.empty()) {
    int n = bfs.front();
    bfs.pop();
    for (auto e : edges(n))
      if (index[e.to] == -1) {
        index[e.to] = static_cast<int>(nodes.size());
        nodes.push_back(e.to);
        bfs.push(e.to);
      }
  }

  // Tarjan SCC; accept iff some completion edge stays within one SCC.
  int n = static_cast<int>(nodes.size());
  std::vector<int> low(n, -1), num(n, -1), comp(n, -1);
  std::vector<bool> onstack(n, false);
  std::vector<int> stk;
  int counter = 0, ncomps = 0;
  struct Frame {
    int v;
    std::size_t ei;
    std::vector<Edge> es;
  };
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<Frame> call;
    call.push_back({root, 0, edges(nodes[root])});
    num[root] = low[root] = counter++;
    stk.push_back(root);
    onstack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.ei < f.es.size()) {
        int w = index[f.es[f.ei++].to];
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          stk.push_back(w);
          onstack[w] = true;
          call.push_back({w, 0, edges(nodes[w])});
        } else if (onstack[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        if (low[f.v] == num[f.v]) {
          for (;;) {
            int w = stk.back();
            stk.pop_back();
            onstack[w] = false;
            comp[w] = ncomps;
            if (w == f.v) break;
          }
          ++ncomps;
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (auto e : edges(nodes[i]))
      if (e.completes && comp[i] == comp[index[e.to]]) return true;
  return false;
}

inline bool member_lasso(const CompiledDict& d, const Lasso& alpha) {
  return member_lasso(build_omega(d), alpha);
}

inline bool member_lasso(const DictExprPtr& e, const Lasso& alpha) {
  return member_lasso(build_omega(compile(e)), alpha);
}

/// Deterministic prefix-set acceptor for a finite dictionary: a state is the
/// set of proper prefixes of members consistent with the input read so far
/// (the empty prefix marks a word boundary), plus an absorbing dead state.
/// A run is accepting iff it never dies; for finite A this recognizes A^∞.
struct SafetyAutomaton {
  Alphabet alphabet{2};
  int initial = 0;
  int dead = 0;
  std::vector<std::vector<int>> next;          // total
  std::vector<std::vector<Word>> state_sets;   // the prefix set of each state

  int size() const { return static_cast<int>(next.size()); }

  static SafetyAutomaton build(const FiniteDict& d) {
    SafetyAutomaton sa;
    sa.alphabet = d.alphabet;
    std::vector<Word> members = d.nonempty_words();
    std::set<Word> member_set(members.begin(), members.end());
    std::set<Word> proper;  // proper prefixes of members, ε included
    for (const Word& w : members)
      for (std::size_t k = 0; k < w.size(); ++k) proper.insert(w.prefix(k));

    std::map<std::vector<Word>, int> ids;
    std::vector<std::vector<Word>> sets;
    auto intern = [&](std::vector<Word> s) {
      auto it = ids.find(s);
      if (it != ids.end()) return it->second;
      int id = static_cast<int>(sets.size());
      ids.emplace(s, id);
      sets.push_back(std::move(s));
      sa.next.emplace_back(d.alphabet.size, -1);
      return id;
    };

    sa.dead = intern({});
    sa.initial = members.empty() ? sa.dead : intern({Word{}});
    for (int cur = 0; cur < static_cast<int>(sets.size()); ++cur) {
      for (int a = 0; a < d.alphabet.size; ++a) {
        std::set<Word> to;
        for (const Word& p : sets[cur]) {
          Word q = Word(p).append(a);
          if (member_set.count(q)) to.insert(Word{});
          if (proper.count(q)) to.insert(std::move(q));
        }
        sa.next[cur][a] = intern(std::vector<Word>(to.begin(), to.end()));
      }
    }
    sa.state_sets = std::move(sets);
    return sa;
  }

  /// States with no path to the dead state: every continuation stays alive.
  std::vector<bool> universal_states() const {
    std::vector<std::vector<int>> rev(next.size());
    for (int s = 0; s < size(); ++s)
      for (int a = 0; a < alphabet.size; ++a) rev[next[s][a]].push_back(s);
    std::vector<bool> reaches_dead(next.size(), false);
    std::queue<int> q;
    reaches_dead[dead] = true;
    q.push(dead);
    while (!q.empty()) {
      int s = q.front();
      q.pop();
      for (int p : rev[s])
        if (!reaches_dead[p]) {
          reaches_dead[p] = true;
          q.push(p);
        }
    }
    std::vector<bool> u(next.size());
    for (int s = 0; s < size(); ++s) u[s] = !reaches_dead[s];
    return u;
  }

  /// States admitting an infinite run that never dies.
  std::vector<bool> viable_states() const {
    std::vector<bool> viable(next.size(), true);
    viable[dead] = false;
    for (bool changed = true; changed;) {
      changed = false;
      for (int s = 0; s < size(); ++s) {
        if (!viable[s]) continue;
        bool ok = false;
        for (int a = 0; a < alphabet.size && !ok; ++a) ok = viable[next[s][a]];
        if (!ok) {
          viable[s] = false;
          changed = true;
        }
      }
    }
    return viable;
  }
};

struct RunResult {
  bool dead = false;
  std::uint64_t step = 0;  // letters consumed when the run died, or the budget

  bool operator==(const RunResult&) const = default;
};

/// Feeds `limit` letters of the stream to the safety automaton. Dead(k)
/// means the run died consuming its k-th letter; Alive(limit) means the
/// budget was exhausted without dying.
inline RunResult run_safety(const SafetyAutomaton& sa, const OmegaStream& alpha,
                            std::uint64_t limit) {
  int q = sa.initial;
  if (q == sa.dead) return {true, 0};
  for (std::uint64_t k = 0; k < limit; ++k) {
    int a = alpha.letter(k);
    if (!sa.alphabet.valid(a)) throw std::invalid_argument("stream letter outside alphabet");
    q = sa.next[q][a];
    if (q == sa.dead) return {true, k + 1};
  }
  return {false, limit};
}

/// Exact lasso acceptance for the safety automaton: alive forever iff the
/// run survives until a (state, position-class) pair repeats.
inline bool safety_accepts_lasso(const SafetyAutomaton& sa, const Lasso& alpha) {
  detail::LassoClasses pc(alpha);
  int q = sa.initial;
  std::uint64_t bound = static_cast<std::uint64_t>(sa.size()) * pc.count() + pc.count() + 1;
  int cls = pc.initial();
  for (std::uint64_t k = 0; k < bound; ++k) {
    q = sa.next[q][pc.letter(alpha, cls)];
    cls = pc.next(cls);
    if (q == sa.dead) return false;
  }
  return true;
}

/// Thm-style universality test: A^∞ = n^ω iff every word of length
/// max-member-length has a nonempty prefix in A. The cut length is closed
/// under induction, so testing at that single length decides universality.
inline bool is_universal(const FiniteDict& d) {
  std::vector<Word> members = d.nonempty_words();
  if (members.empty()) return false;
  std::set<Word> member_set(members.begin(), members.end());
  std::size_t depth = d.max_len();
  // DFS over n^depth, pruning once a prefix lands in A.
  Word w;
  std::function<bool(std::size_t)> all_covered = [&](std::size_t k) -> bool {
    if (member_set.count(w)) return true;
    if (k == depth) return false;
    for (int a = 0; a < d.alphabet.size; ++a) {
      w.append(a);
      bool ok = all_covered(k + 1);
      w.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  // ε ∉ member_set, so the root call recurses as intended.
  return all_covered(0);
}

enum class TopoClass { Empty, Full, Clopen, ClosedNotOpen };

inline std::string to_string(TopoClass c) {
  switch (c) {
    case TopoClass::Empty: return "Empty";
    case TopoClass::Full: return "Full";
    case TopoClass::Clopen: return "Clopen";
    case TopoClass::ClosedNotOpen: return "ClosedNotOpen";
  }
  return "?";
}

/// For finite A, A^∞ is closed, so the class is decided by openness: open
/// iff every live run eventually enters a state that can no longer die,
/// i.e. no cycle of viable non-universal states is reachable.
inline TopoClass topo_class(const FiniteDict& d) {
  if (d.nonempty_words().empty()) return TopoClass::Empty;
  if (is_universal(d)) return TopoClass::Full;
  SafetyAutomaton sa = SafetyAutomaton::build(d);
  auto universal = sa.universal_states();
  auto viable = sa.viable_states();

  // Cycle search in the subgraph of viable, non-universal states.
  std::vector<int> color(sa.size(), 0);
  std::function<bool(int)> has_cycle = [&](int s) -> bool {
    color[s] = 1;
    for (int a = 0; a < sa.alphabet.size; ++a) {
      int t = sa.next[s][a];
      if (!viable[t] || universal[t]) continue;
      if (color[t] == 1) return true;
      if (color[t] == 0 && has_cycle(t)) return true;
    }
    color[s] = 2;
    return false;
  };
  int s0 = sa.initial;
  bool cyc = viable[s0] && !universal[s0] && has_cycle(s0);
  return cyc ? TopoClass::ClosedNotOpen : TopoClass::Clopen;
}

/// A^∞ ⊆ B^∞ for finite dictionaries, via the safety product: inclusion
/// fails iff some reachable pair is viable on the A side and dead on the B
/// side.
inline bool included(const SafetyAutomaton& sa, const std::vector<bool>& viable,
                     const SafetyAutomaton& sb) {
  std::set<std::pair<int, int>> seen;
  std::queue<std::pair<int, int>> q;
  q.push({sa.initial, sb.initial});
  seen.insert({sa.initial, sb.initial});
  while (!q.empty()) {
    auto [p, r] = q.front();
    q.pop();
    if (viable[p] && r == sb.dead) return false;
    if (p == sa.dead) continue;  // nothing of A^∞ goes through here
    for (int l = 0; l < sa.alphabet.size; ++l) {
      std::pair<int, int> t{sa.next[p][l], sb.next[r][l]};
      if (seen.insert(t).second) q.push(t);
    }
  }
  return true;
}

inline bool included(const FiniteDict& a, const FiniteDict& b) {
  if (!(a.alphabet == b.alphabet)) throw std::invalid_argument("alphabet mismatch");
  SafetyAutomaton sa = SafetyAutomaton::build(a);
  SafetyAutomaton sb = SafetyAutomaton::build(b);
  return included(sa, sa.viable_states(), sb);
}

inline bool equivalent(const FiniteDict& a, const FiniteDict& b) {
  return included(a, b) && included(b, a);
}

/// Inclusion-minimal B ⊆ A with B^∞ = A^∞: greedy removal in shortlex
/// descending order. Keeping a word stays correct as the set shrinks, so a
/// single pass is minimal. The empty word never contributes and is dropped.
inline FiniteDict minimal_generator(const FiniteDict& d) {
  FiniteDict full = FiniteDict::of(d.alphabet, d.nonempty_words());
  std::vector<Word> kept = full.words;  // shortlex ascending
  for (int i = static_cast<int>(kept.size()) - 1; i >= 0; --i) {
    std::vector<Word> trial = kept;
    trial.erase(trial.begin() + i);
    if (equivalent(FiniteDict::of(d.alphabet, trial), full)) kept = std::move(trial);
  }
  return FiniteDict::of(d.alphabet, kept);
}

/// First k chunks of the leftmost-minimal decomposition of α into words of
/// A⁻: each chunk is the shortest member that prefixes the current suffix
/// and leaves a suffix still in A^∞.
inline std::vector<Word> greedy_decompose(const CompiledDict& d, const Lasso& alpha, int k) {
  OmegaAcceptor acc = build_omega(d);
  if (!member_lasso(acc, alpha))
    throw std::invalid_argument("greedy_decompose: lasso is not in the omega-power");
  std::vector<Word> chunks;
  Lasso cur = alpha;
  for (int i = 0; i < k; ++i) {
    detail::LassoClasses pc(cur);
    std::uint64_t bound =
        static_cast<std::uint64_t>(d.dfa.size()) * pc.count() + pc.count();
    int q = d.dfa.start;
    int cls = pc.initial();
    bool found = false;
    for (std::uint64_t len = 1; len <= bound && !found; ++len) {
      q = d.dfa.next[q][pc.letter(cur, cls)];
      cls = pc.next(cls);
      if (d.dfa.accepting[q] && member_lasso(acc, cur.shift(len))) {
        chunks.push_back(cur.prefix(len));
        cur = cur.shift(len);
        found = true;
      }
    }
    if (!found)
      throw std::logic_error("greedy_decompose: no chunk within the saturation bound");
  }
  return chunks;
}

inline std::vector<Word> greedy_decompose(const DictExprPtr& e, const Lasso& alpha, int k) {
  return greedy_decompose(compile(e), alpha, k);
}

}  // namespace opow
