#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opow/automata.hpp"
#include "opow/words.hpp"

namespace opow {

class DictExpr;
using DictExprPtr = std::shared_ptr<const DictExpr>;

/// A dictionary presentation: a regular set of finite words built from
/// finite sets, extension sets ext(t) = {s : t ≺ s}, concatenation, union,
/// star closure (all finite concatenations of members) and difference.
class DictExpr {
 public:
  enum class Kind { Finite, Ext, Concat, Union, Star, Diff };

  static DictExprPtr finite(Alphabet a, std::vector<Word> words) {
    for (const Word& w : words)
      if (!w.fits(a)) throw std::invalid_argument("word outside alphabet: " + w.str());
    std::sort(words.begin(), words.end(), shortlex_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    auto e = std::make_shared<DictExpr>(Private{}, a, Kind::Finite);
    e->words_ = std::move(words);
    return e;
  }

  static DictExprPtr letter(Alphabet a, int l) { return finite(a, {Word{l}}); }

  static DictExprPtr ext(Alphabet a, Word base) {
    if (!base.fits(a)) throw std::invalid_argument("word outside alphabet: " + base.str());
    auto e = std::make_shared<DictExpr>(Private{}, a, Kind::Ext);
    e->words_ = {std::move(base)};
    return e;
  }

  static DictExprPtr concat(DictExprPtr lhs, DictExprPtr rhs) {
    return binary(Kind::Concat, std::move(lhs), std::move(rhs));
  }

  static DictExprPtr unite(DictExprPtr lhs, DictExprPtr rhs) {
    return binary(Kind::Union, std::move(lhs), std::move(rhs));
  }

  // [X^{<ω}]^* — every finite concatenation of member words, ε included.
  // On word sets this coincides with the Kleene star, so one node serves
  // both operators.
  static DictExprPtr star(DictExprPtr sub) {
    auto e = std::make_shared<DictExpr>(Private{}, sub->alphabet(), Kind::Star);
    e->subs_ = {std::move(sub)};
    return e;
  }

  static DictExprPtr star_words(DictExprPtr sub) { return star(std::move(sub)); }

  static DictExprPtr diff(DictExprPtr lhs, DictExprPtr rhs) {
    return binary(Kind::Diff, std::move(lhs), std::move(rhs));
  }

  Kind kind() const { return kind_; }
  Alphabet alphabet() const { return alphabet_; }
  const std::vector<Word>& words() const { return words_; }
  const std::vector<DictExprPtr>& subs() const { return subs_; }

  struct Private {};
  DictExpr(Private, Alphabet a, Kind k) : alphabet_(a), kind_(k) {}

 private:
  static DictExprPtr binary(Kind k, DictExprPtr lhs, DictExprPtr rhs) {
    if (!(lhs->alphabet() == rhs->alphabet()))
      throw std::invalid_argument("alphabet mismatch in dictionary expression");
    auto e = std::make_shared<DictExpr>(Private{}, lhs->alphabet(), k);
    e->subs_ = {std::move(lhs), std::move(rhs)};
    return e;
  }

  Alphabet alphabet_;
  Kind kind_;
  std::vector<Word> words_;   // Finite members, or the Ext base word
  std::vector<DictExprPtr> subs_;
};

namespace detail {

inline std::pair<int, int> build_nfa(const DictExpr& e, Nfa& nfa);  // fwd

inline std::pair<int, int> nfa_of_dfa(const Dfa& dfa, Nfa& nfa) {
  int base = static_cast<int>(nfa.states.size());
  for (int s = 0; s < dfa.size(); ++s) nfa.add_state();
  int accept = nfa.add_state();
  for (int s = 0; s < dfa.size(); ++s) {
    for (int a = 0; a < dfa.letters; ++a) nfa.add_edge(base + s, a, base + dfa.next[s][a]);
    if (dfa.accepting[s]) nfa.add_edge(base + s, -1, accept);
  }
  return {base + dfa.start, accept};
}

inline Dfa compile_dfa(const DictExpr& e) {
  Nfa nfa;
  nfa.letters = e.alphabet().size;
  auto [start, accept] = build_nfa(e, nfa);
  nfa.start = start;
  nfa.accept = accept;
  return minimize(determinize(nfa));
}

inline std::pair<int, int> build_nfa(const DictExpr& e, Nfa& nfa) {
  switch (e.kind()) {
    case DictExpr::Kind::Finite: {
      int start = nfa.add_state();
      int accept = nfa.add_state();
      for (const Word& w : e.words()) {
        int cur = start;
        for (std::size_t i = 0; i < w.size(); ++i) {
          int nxt = nfa.add_state();
          nfa.add_edge(cur, w[i], nxt);
          cur = nxt;
        }
        nfa.add_edge(cur, -1, accept);
      }
      return {start, accept};
    }
    case DictExpr::Kind::Ext: {
      const Word& base = e.words()[0];
      int start = nfa.add_state();
      int cur = start;
      for (std::size_t i = 0; i < base.size(); ++i) {
        int nxt = nfa.add_state();
        nfa.add_edge(cur, base[i], nxt);
        cur = nxt;
      }
      for (int a = 0; a < nfa.letters; ++a) nfa.add_edge(cur, a, cur);
      int accept = nfa.add_state();
      nfa.add_edge(cur, -1, accept);
      return {start, accept};
    }
    case DictExpr::Kind::Concat: {
      auto [s1, a1] = build_nfa(*e.subs()[0], nfa);
      auto [s2, a2] = build_nfa(*e.subs()[1], nfa);
      nfa.add_edge(a1, -1, s2);
      return {s1, a2};
    }
    case DictExpr::Kind::Union: {
      auto [s1, a1] = build_nfa(*e.subs()[0], nfa);
      auto [s2, a2] = build_nfa(*e.subs()[1], nfa);
      int start = nfa.add_state();
      int accept = nfa.add_state();
      nfa.add_edge(start, -1, s1);
      nfa.add_edge(start, -1, s2);
      nfa.add_edge(a1, -1, accept);
      nfa.add_edge(a2, -1, accept);
      return {start, accept};
    }
    case DictExpr::Kind::Star: {
      auto [s, a] = build_nfa(*e.subs()[0], nfa);
      int start = nfa.add_state();
      int accept = nfa.add_state();
      nfa.add_edge(start, -1, s);
      nfa.add_edge(start, -1, accept);
      nfa.add_edge(a, -1, s);
      nfa.add_edge(a, -1, accept);
      return {start, accept};
    }
    case DictExpr::Kind::Diff: {
      // Determinize both sides, complement the right inside a product.
      Dfa lhs = compile_dfa(*e.subs()[0]);
      Dfa rhs = compile_dfa(*e.subs()[1]);
      Dfa d = product(lhs, rhs, [](bool x, bool y) { return x && !y; });
      return nfa_of_dfa(minimize(d), nfa);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

/// A dictionary compiled to a total deterministic acceptor for its word set.
struct CompiledDict {
  Alphabet alphabet{2};
  Dfa dfa;

  bool contains(const Word& w) const {
    if (!w.fits(alphabet)) throw std::invalid_argument("word outside alphabet: " + w.str());
    return dfa.accepts(w);
  }
};

inline CompiledDict compile(const DictExprPtr& e) {
  return CompiledDict{e->alphabet(), detail::compile_dfa(*e)};
}

/// A dictionary given only by a decidable membership predicate. Supports
/// membership and brute-force decomposition; never compiled to an acceptor.
struct OracleDictionary {
  Alphabet alphabet{2};
  std::function<bool(const Word&)> member;

  bool contains(const Word& w) const {
    if (!w.fits(alphabet)) throw std::invalid_argument("word outside alphabet: " + w.str());
    return member(w);
  }
};

/// An explicit finite dictionary, sorted shortlex without duplicates.
/// The empty word may be present; ω-power machinery strips it (A⁻).
struct FiniteDict {
  Alphabet alphabet{2};
  std::vector<Word> words;

  static FiniteDict of(Alphabet a, std::vector<Word> ws) {
    for (const Word& w : ws)
      if (!w.fits(a)) throw std::invalid_argument("word outside alphabet: " + w.str());
    std::sort(ws.begin(), ws.end(), shortlex_less);
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return FiniteDict{a, std::move(ws)};
  }

  bool contains(const Word& w) const {
    return std::binary_search(words.begin(), words.end(), w, shortlex_less);
  }

  // A⁻ = A \ {∅}.
  std::vector<Word> nonempty_words() const {
    std::vector<Word> out;
    out.reserve(words.size());
    for (const Word& w : words)
      if (!w.empty()) out.push_back(w);
    return out;
  }

  std::size_t max_len() const {
    std::size_t m = 0;
    for (const Word& w : words) m = std::max(m, w.size());
    return m;
  }

  DictExprPtr expr() const { return DictExpr::finite(alphabet, words); }

  bool operator==(const FiniteDict&) const = default;
};

// True iff no member is a prefix of another distinct member.
inline bool is_antichain(const FiniteDict& d) {
  for (std::size_t i = 0; i < d.words.size(); ++i)
    for (std::size_t j = i + 1; j < d.words.size(); ++j)
      if (compatible(d.words[i], d.words[j])) return false;
  return true;
}

/// Greedy chain decomposition in shortlex order: each word joins the least
/// part it is compatible with every member of, else opens a new part. Every
/// part is totally ordered by the prefix relation.
inline std::vector<std::vector<Word>> chain_decomposition(const FiniteDict& d) {
  std::vector<std::vector<Word>> parts;
  for (const Word& w : d.words) {  // already shortlex sorted
    bool placed = false;
    for (auto& part : parts) {
      bool ok = std::all_of(part.begin(), part.end(),
                            [&](const Word& p) { return compatible(p, w); });
      if (ok) {
        part.push_back(w);
        placed = true;
        break;
      }
    }
    if (!placed) parts.push_back({w});
  }
  return parts;
}

/// Sardinas–Patterson unique-decipherability test. A set of nonempty words
/// is a code iff no residual in the closure is itself a member.
inline bool is_code(const FiniteDict& d) {
  for (const Word& w : d.words)
    if (w.empty()) throw std::invalid_argument("is_code: dictionary contains the empty word");

  auto residuals = [&](const std::vector<Word>& from, const std::vector<Word>& of) {
    std::set<Word> out;
    for (const Word& u : from)
      for (const Word& v : of) {
        if (is_strict_prefix(u, v)) out.insert(v.drop(u.size()));
        // u = v would mean an empty residual; callers detect that earlier
      }
    return out;
  };

  std::set<Word> seen;
  // C1 = A⁻¹A \ {ε}
  std::set<Word> frontier = residuals(d.words, d.words);
  while (!frontier.empty()) {
    for (const Word& r : frontier)
      if (d.contains(r)) return false;  // ε would appear next round
    std::vector<Word> fr(frontier.begin(), frontier.end());
    std::set<Word> next;
    for (const Word& r : residuals(fr, d.words)) next.insert(r);
    for (const Word& r : residuals(d.words, fr)) next.insert(r);
    frontier.clear();
    for (const Word& r : next)
      if (seen.insert(r).second) frontier.insert(r);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Dictionary file format. One statement per line, comments start with '#':
//   alphabet 2
//   A = { 010, 011 }
//   B = ext(11)
//   C = star(A)
//   D = A \ B
//   E = A | B
//   F = re(1 0* 1 1*)
//   G = cat(A, B)
//   main = D
// ---------------------------------------------------------------------------

struct DictFile {
  Alphabet alphabet{2};
  std::map<std::string, DictExprPtr> defs;
  DictExprPtr main;
};

namespace detail {

struct ReParser {
  std::string_view text;
  std::size_t pos = 0;
  Alphabet alphabet;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  DictExprPtr parse() {
    auto e = parse_union();
    if (!at_end()) throw std::invalid_argument("bad re(): trailing input");
    return e;
  }

  DictExprPtr parse_union() {
    auto e = parse_concat();
    while (peek() == '|') {
      ++pos;
      e = DictExpr::unite(e, parse_concat());
    }
    return e;
  }

  DictExprPtr parse_concat() {
    DictExprPtr e;
    for (;;) {
      char c = peek();
      if (c == '\0' || c == '|' || c == ')') break;
      auto f = parse_postfix();
      e = e ? DictExpr::concat(e, f) : f;
    }
    if (!e) throw std::invalid_argument("bad re(): empty term");
    return e;
  }

  DictExprPtr parse_postfix() {
    auto e = parse_atom();
    while (peek() == '*') {
      ++pos;
      e = DictExpr::star(e);
    }
    return e;
  }

  DictExprPtr parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      auto e = parse_union();
      if (peek() != ')') throw std::invalid_argument("bad re(): expected ')'");
      ++pos;
      return e;
    }
    if (c >= '0' && c <= '9') {
      ++pos;
      int l = c - '0';
      if (!alphabet.valid(l)) throw std::invalid_argument("re() letter outside alphabet");
      return DictExpr::letter(alphabet, l);
    }
    throw std::invalid_argument("bad re(): unexpected character");
  }
};

struct DictFileParser {
  Alphabet alphabet{2};
  std::map<std::string, DictExprPtr> defs;

  static std::string trim(std::string s) {
    auto issp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
  }

  DictExprPtr lookup(const std::string& name) {
    auto it = defs.find(name);
    if (it == defs.end()) throw std::invalid_argument("undefined dictionary name: " + name);
    return it->second;
  }

  // term := primary (('\' | '|') primary)*, single operator kind per chain
  DictExprPtr parse_rhs(const std::string& rhs) {
    std::vector<std::string> parts;
    std::vector<char> ops;
    int depth = 0;
    std::string cur;
    for (char c : rhs) {
      if (c == '(' || c == '{') ++depth;
      if (c == ')' || c == '}') --depth;
      if (depth == 0 && (c == '\\' || c == '|')) {
        parts.push_back(cur);
        ops.push_back(c);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    parts.push_back(cur);
    auto e = parse_primary(trim(parts[0]));
    for (std::size_t i = 0; i < ops.size(); ++i) {
      auto r = parse_primary(trim(parts[i + 1]));
      e = ops[i] == '\\' ? DictExpr::diff(e, r) : DictExpr::unite(e, r);
    }
    return e;
  }

  DictExprPtr parse_primary(const std::string& t) {
    if (t.empty()) throw std::invalid_argument("empty dictionary term");
    if (t.front() == '{') {
      if (t.back() != '}') throw std::invalid_argument("unterminated word set");
      std::vector<Word> ws;
      std::string inner = t.substr(1, t.size() - 2);
      std::istringstream iss(inner);
      std::string item;
      while (std::getline(iss, item, ',')) {
        item = trim(item);
        if (!item.empty()) ws.push_back(Word::parse(item));
      }
      return DictExpr::finite(alphabet, std::move(ws));
    }
    auto call = [&](std::string_view fn) -> std::optional<std::string> {
      if (t.size() > fn.size() + 1 && t.compare(0, fn.size(), fn) == 0 &&
          t[fn.size()] == '(' && t.back() == ')')
        return t.substr(fn.size() + 1, t.size() - fn.size() - 2);
      return std::nullopt;
    };
    if (auto arg = call("ext")) {
      std::string a = trim(*arg);
      bool word_like = a == "e" || std::all_of(a.begin(), a.end(), [](char c) {
                         return c >= '0' && c <= '9';
                       });
      if (word_like && defs.find(a) == defs.end())
        return DictExpr::ext(alphabet, Word::parse(a));
      // ext over a set: every extension of a member.
      auto base = parse_primary(a);
      std::vector<Word> sigma;
      for (int l = 0; l < alphabet.size; ++l) sigma.push_back(Word{l});
      return DictExpr::concat(base, DictExpr::star(DictExpr::finite(alphabet, sigma)));
    }
    if (auto arg = call("star")) return DictExpr::star(parse_primary(trim(*arg)));
    if (auto arg = call("re")) {
      ReParser rp{*arg, 0, alphabet};
      return rp.parse();
    }
    if (auto arg = call("cat")) {
      std::vector<std::string> items;
      int depth = 0;
      std::string cur;
      for (char c : *arg) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (depth == 0 && c == ',') {
          items.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      items.push_back(cur);
      DictExprPtr e;
      for (auto& item : items) {
        auto f = parse_primary(trim(item));
        e = e ? DictExpr::concat(e, f) : f;
      }
      return e;
    }
    return lookup(t);
  }
};

}  // namespace detail

inline DictFile parse_dict_file(const std::string& content) {
  detail::DictFileParser p;
  DictFile out;
  bool saw_alphabet = false;
  std::istringstream iss(content);
  std::string line;
  DictExprPtr main;
  while (std::getline(iss, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::DictFileParser::trim(line);
    if (line.empty()) continue;
    if (line.rfind("alphabet", 0) == 0) {
      int n = std::stoi(line.substr(8));
      p.alphabet = Alphabet(n);
      out.alphabet = p.alphabet;
      saw_alphabet = true;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad dictionary statement: " + line);
    std::string name = detail::DictFileParser::trim(line.substr(0, eq));
    std::string rhs = detail::DictFileParser::trim(line.substr(eq + 1));
    if (name.empty()) throw std::invalid_argument("bad dictionary statement: " + line);
    auto e = p.parse_rhs(rhs);
    if (name == "main")
      main = e;
    else
      p.defs[name] = e;
  }
  if (!saw_alphabet) throw std::invalid_argument("dictionary file missing 'alphabet' line");
  if (!main) throw std::invalid_argument("dictionary file missing 'main' definition");
  out.defs = std::move(p.defs);
  out.main = std::move(main);
  return out;
}

/// The word set of `e` when finite, in shortlex order; nullopt otherwise.
inline std::optional<FiniteDict> try_finite(const DictExprPtr& e) {
  auto cd = compile(e);
  auto words = finite_language(cd.dfa);
  if (!words) return std::nullopt;
  return FiniteDict::of(e->alphabet(), std::move(*words));
}

}  // namespace opow
