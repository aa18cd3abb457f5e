#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "opow/words.hpp"

namespace opow {

// Nondeterministic automaton with epsilon moves (letter -1). Compilation
// target for dictionary expressions before determinization.
struct Nfa {
  int letters = 2;
  struct State {
    std::vector<std::pair<int, int>> edges;  // (letter or -1, target)
  };
  std::vector<State> states;
  int start = 0;
  int accept = 0;  // single accept state by construction

  int add_state() {
    states.emplace_back();
    return static_cast<int>(states.size()) - 1;
  }
  void add_edge(int from, int letter, int to) { states[from].edges.push_back({letter, to}); }
};

// Deterministic automaton with a total transition function. State 0 is not
// special; `dead` marks the absorbing reject sink when one exists.
struct Dfa {
  int letters = 2;
  int start = 0;
  std::vector<std::vector<int>> next;  // [state][letter]
  std::vector<bool> accepting;

  int size() const { return static_cast<int>(next.size()); }

  int run(const Word& w) const {
    int q = start;
    for (std::size_t i = 0; i < w.size(); ++i) q = next[q][w[i]];
    return q;
  }

  bool accepts(const Word& w) const { return accepting[run(w)]; }

  // States from which some accepting state is reachable.
  std::vector<bool> live() const {
    std::vector<std::vector<int>> rev(next.size());
    for (int s = 0; s < size(); ++s)
      for (int a = 0; a < letters; ++a) rev[next[s][a]].push_back(s);
    std::vector<bool> l(next.size(), false);
    std::queue<int> q;
    for (int s = 0; s < size(); ++s)
      if (accepting[s]) {
        l[s] = true;
        q.push(s);
      }
    while (!q.empty()) {
      int s = q.front();
      q.pop();
      for (int p : rev[s])
        if (!l[p]) {
          l[p] = true;
          q.push(p);
        }
    }
    return l;
  }
};

inline Dfa determinize(const Nfa& nfa) {
  auto closure = [&](std::set<int> s) {
    std::vector<int> stack(s.begin(), s.end());
    while (!stack.empty()) {
      int q = stack.back();
      stack.pop_back();
      for (auto [l, t] : nfa.states[q].edges)
        if (l == -1 && s.insert(t).second) stack.push_back(t);
    }
    return s;
  };

  std::map<std::set<int>, int> ids;
  std::vector<std::set<int>> subsets;
  Dfa dfa;
  dfa.letters = nfa.letters;
  auto intern = [&](std::set<int> s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(subsets.size());
    ids.emplace(s, id);
    subsets.push_back(std::move(s));
    dfa.next.emplace_back(nfa.letters, -1);
    dfa.accepting.push_back(subsets.back().count(nfa.accept) > 0);
    return id;
  };

  dfa.start = intern(closure({nfa.start}));
  for (int cur = 0; cur < static_cast<int>(subsets.size()); ++cur) {
    for (int a = 0; a < nfa.letters; ++a) {
      std::set<int> to;
      for (int q : subsets[cur])
        for (auto [l, t] : nfa.states[q].edges)
          if (l == a) to.insert(t);
      dfa.next[cur][a] = intern(closure(std::move(to)));
    }
  }
  return dfa;
}

// Moore partition refinement. Keeps compiled dictionaries small so that the
// saturation bounds used downstream stay tight.
inline Dfa minimize(const Dfa& in) {
  int n = in.size();
  std::vector<int> block(n);
  for (int s = 0; s < n; ++s) block[s] = in.accepting[s] ? 1 : 0;
  int blocks = 2;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> nb(n);
    for (int s = 0; s < n; ++s) {
      std::vector<int> sig;
      sig.reserve(in.letters + 1);
      sig.push_back(block[s]);
      for (int a = 0; a < in.letters; ++a) sig.push_back(block[in.next[s][a]]);
      auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
      (void)fresh;
      nb[s] = it->second;
    }
    int nblocks = static_cast<int>(sig_ids.size());
    bool stable = nblocks == blocks;
    block = std::move(nb);
    blocks = nblocks;
    if (stable) break;
  }

  Dfa out;
  out.letters = in.letters;
  out.start = block[in.start];
  out.next.assign(blocks, std::vector<int>(in.letters, -1));
  out.accepting.assign(blocks, false);
  for (int s = 0; s < n; ++s) {
    out.accepting[block[s]] = in.accepting[s];
    for (int a = 0; a < in.letters; ++a) out.next[block[s]][a] = block[in.next[s][a]];
  }

  // Drop states unreachable from the start.
  std::vector<int> remap(blocks, -1);
  std::vector<int> order;
  std::queue<int> q;
  q.push(out.start);
  remap[out.start] = 0;
  order.push_back(out.start);
  while (!q.empty()) {
    int s = q.front();
    q.pop();
    for (int a = 0; a < out.letters; ++a) {
      int t = out.next[s][a];
      if (remap[t] == -1) {
        remap[t] = static_cast<int>(order.size());
        order.push_back(t);
        q.push(t);
      }
    }
  }
  Dfa trimmed;
  trimmed.letters = out.letters;
  trimmed.start = 0;
  trimmed.next.assign(order.size(), std::vector<int>(out.letters, -1));
  trimmed.accepting.assign(order.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    trimmed.accepting[i] = out.accepting[order[i]];
    for (int a = 0; a < out.letters; ++a) trimmed.next[i][a] = remap[out.next[order[i]][a]];
  }
  return trimmed;
}

inline Dfa product(const Dfa& a, const Dfa& b, bool (*combine)(bool, bool)) {
  if (a.letters != b.letters) throw std::invalid_argument("alphabet mismatch in product");
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> pairs;
  Dfa out;
  out.letters = a.letters;
  auto intern = [&](std::pair<int, int> p) {
    auto it = ids.find(p);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(pairs.size());
    ids.emplace(p, id);
    pairs.push_back(p);
    out.next.emplace_back(a.letters, -1);
    out.accepting.push_back(combine(a.accepting[p.first], b.accepting[p.second]));
    return id;
  };
  out.start = intern({a.start, b.start});
  for (int cur = 0; cur < static_cast<int>(pairs.size()); ++cur) {
    auto [p, q] = pairs[cur];
    for (int l = 0; l < a.letters; ++l) out.next[cur][l] = intern({a.next[p][l], b.next[q][l]});
  }
  return out;
}

/// Enumerates the language if it is finite (no cycle through live states);
/// returns nullopt for infinite languages. Words come back in shortlex order.
inline std::optional<std::vector<Word>> finite_language(const Dfa& dfa,
                                                        std::size_t max_words = 1 << 20) {
  auto live = dfa.live();
  // Cycle check restricted to live states reachable from the start.
  std::vector<int> color(dfa.size(), 0);
  std::vector<std::pair<int, int>> stack;  // (state, next letter)
  if (live[dfa.start]) {
    stack.push_back({dfa.start, 0});
    color[dfa.start] = 1;
    while (!stack.empty()) {
      auto& [s, a] = stack.back();
      if (a == dfa.letters) {
        color[s] = 2;
        stack.pop_back();
        continue;
      }
      int t = dfa.next[s][a++];
      if (!live[t]) continue;
      if (color[t] == 1) return std::nullopt;
      if (color[t] == 0) {
        color[t] = 1;
        stack.push_back({t, 0});
      }
    }
  }

  std::vector<Word> words;
  std::vector<std::pair<int, Word>> frontier = {{dfa.start, Word{}}};
  while (!frontier.empty()) {
    std::vector<std::pair<int, Word>> next_frontier;
    for (auto& [s, w] : frontier) {
      if (dfa.accepting[s]) {
        words.push_back(w);
        if (words.size() > max_words) throw std::runtime_error("finite language too large");
      }
      for (int a = 0; a < dfa.letters; ++a) {
        int t = dfa.next[s][a];
        if (live[t]) next_frontier.push_back({t, Word(w).append(a)});
      }
    }
    frontier = std::move(next_frontier);
  }
  std::sort(words.begin(), words.end(), shortlex_less);
  return words;
}

}  // namespace opow
