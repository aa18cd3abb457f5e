#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "opow/classify.hpp"
#include "opow/dict.hpp"
#include "opow/engine.hpp"
#include "opow/rank.hpp"

namespace opow {

struct CorpusCheck {
  std::string what;
  std::function<bool()> run;
};

struct CorpusEntry {
  std::string name;
  std::string description;
  DictExprPtr expr;  // null for oracle-only entries
  std::vector<CorpusCheck> checks;
};

struct CorpusOutcome {
  std::string entry;
  std::string what;
  bool pass;
};

namespace corpus_detail {

inline DictExprPtr fin(Alphabet a, std::initializer_list<const char*> ws) {
  std::vector<Word> words;
  for (const char* w : ws) words.push_back(Word::parse(w));
  return DictExpr::finite(a, std::move(words));
}

inline DictExprPtr ext(Alphabet a, const char* w) { return DictExpr::ext(a, Word::parse(w)); }

inline DictExprPtr uni(DictExprPtr x, DictExprPtr y) { return DictExpr::unite(std::move(x), std::move(y)); }

inline DictExprPtr cat(DictExprPtr x, DictExprPtr y) { return DictExpr::concat(std::move(x), std::move(y)); }

// Adds a membership fact checked through both engines (and the safety route
// when the dictionary is finite).
inline void add_member_fact(CorpusEntry& e, std::shared_ptr<CompiledDict> cd, const char* lasso,
                            bool expected) {
  Lasso l = Lasso::parse(lasso);
  e.checks.push_back(
      {std::string(lasso) + (expected ? " in" : " not in") + " the omega-power",
       [cd, l, expected] {
         if (member_lasso(*cd, l) != expected) return false;
         return member_positions(*cd, l) == expected;
       }});
}

inline void add_identity_fact(CorpusEntry& e, std::string what,
                              std::shared_ptr<CompiledDict> cd,
                              std::function<bool(const Lasso&)> expected, int budget = 6) {
  e.checks.push_back({std::move(what), [cd, expected = std::move(expected), budget] {
                        for (const Lasso& l : enumerate_lassos(cd->alphabet, budget)) {
                          bool want = expected(l);
                          if (member_lasso(*cd, l) != want) return false;
                          if (member_positions(*cd, l) != want) return false;
                        }
                        return true;
                      }});
}

inline std::uint64_t leading_zeros(const Lasso& l, std::uint64_t cap) {
  std::uint64_t z = 0;
  while (z < cap && l.letter(z) == 0) ++z;
  return z;
}

inline bool is_zero_tail(const Lasso& l) { return l.cycle() == Word{0}; }

}  // namespace corpus_detail

/// The Finkel-style dictionary: words whose every prefix carries at least as
/// many 1s, doubled, as its length. Its ω-power is closed but no finite
/// sub-dictionary generates it.
inline OracleDictionary finkel_dictionary() {
  return OracleDictionary{Alphabet(2), [](const Word& s) {
                            std::size_t ones = 0;
                            for (std::size_t i = 0; i < s.size(); ++i) {
                              // condition at i checked before reading s[i]
                              if (2 * ones < i) return false;
                              ones += s[i] == 1 ? 1 : 0;
                            }
                            return 2 * ones >= s.size();
                          }};
}

/// Bounded decomposition cover for oracle dictionaries: can the window
/// [from, upto) of the stream be tiled by words of the dictionary, with cuts
/// landing exactly on `upto` at the right edge?
inline bool oracle_covers(const OracleDictionary& d, const OmegaStream& alpha,
                          std::uint64_t from, std::uint64_t upto) {
  if (from >= upto) return true;
  std::vector<int> memo(static_cast<std::size_t>(upto - from), -1);
  std::function<bool(std::uint64_t)> rec = [&](std::uint64_t at) -> bool {
    if (at >= upto) return true;
    int& m = memo[static_cast<std::size_t>(at - from)];
    if (m != -1) return m == 1;
    m = 0;
    Word w;
    for (std::uint64_t end = at + 1; end <= upto; ++end) {
      w.append(alpha.letter(end - 1));
      if (d.contains(w) && rec(end)) {
        m = 1;
        break;
      }
    }
    return m == 1;
  };
  return rec(from);
}

inline std::vector<CorpusEntry> corpus() {
  using namespace corpus_detail;
  Alphabet two(2);
  std::vector<CorpusEntry> entries;

  auto lit0 = DictExpr::letter(two, 0);
  auto lit1 = DictExpr::letter(two, 1);

  {  // (1) clopen: extensions of 0 together with extensions of 11
    CorpusEntry e{"clopen_example", "ext(0) | ext(11); omega-power N_0 | N_11", nullptr, {}};
    e.expr = uni(ext(two, "0"), ext(two, "11"));
    auto cd = std::make_shared<CompiledDict>(compile(e.expr));
    add_member_fact(e, cd, "(0)", true);
    add_member_fact(e, cd, "(1)", true);
    add_member_fact(e, cd, "1(0)", false);
    add_identity_fact(e, "omega-power equals N_0 | N_11 on small lassos", cd,
                      [](const Lasso& l) {
                        return l.letter(0) == 0 || (l.letter(0) == 1 && l.letter(1) == 1);
                      });
    entries.push_back(std::move(e));
  }

  {  // (2) open: complement of the single point 10^∞
    CorpusEntry e{"open_example", "ext(0) | re(1 0* 1 1*); omega-power is everything but 10^inf",
                  nullptr, {}};
    e.expr = uni(ext(two, "0"),
                 cat(lit1, cat(DictExpr::star(lit0), cat(lit1, DictExpr::star(lit1)))));
    auto cd = std::make_shared<CompiledDict>(compile(e.expr));
    add_member_fact(e, cd, "1(0)", false);
    add_member_fact(e, cd, "(1)", true);
    add_member_fact(e, cd, "(10)", true);
    add_identity_fact(e, "omega-power misses exactly 10^inf on small lassos", cd,
                      [](const Lasso& l) { return !(l == Lasso::parse("1(0)")); });
    entries.push_back(std::move(e));
  }

  {  // (3) open-plus-closed blend
    CorpusEntry e{"sum_example",
                  "ext(001) | {00} | re(1 0* 1 (0|1)*); 0^inf plus even-zero cylinders plus N_1 "
                  "minus 10^inf",
                  nullptr, {}};
    auto sigma = uni(lit0, lit1);
    e.expr = uni(ext(two, "001"),
                 uni(fin(two, {"00"}),
                     cat(lit1, cat(DictExpr::star(lit0), cat(lit1, DictExpr::star(sigma))))));
    auto cd = std::make_shared<CompiledDict>(compile(e.expr));
    add_member_fact(e, cd, "(0)", true);
    add_member_fact(e, cd, "1(0)", false);
    add_member_fact(e, cd, "0011(0)", true);
    add_identity_fact(e, "matches the two-sided normal form on small lassos", cd,
                      [](const Lasso& l) {
                        if (l.letter(0) == 1) return !(l == Lasso::parse("1(0)"));
                        if (is_zero_tail(l) && leading_zeros(l, 64) >= l.head().size())
                          return true;  // 0^inf
                        std::uint64_t z = leading_zeros(l, 64);
                        return z >= 2 && z % 2 == 0;
                      });
    entries.push_back(std::move(e));
  }

  {  // (4) dual-D2: open set union a single limit point
    CorpusEntry e{"dual_d2_example",
                  "ext(0) | star({101}) ext(111) | {100}; contains (100)^inf as limit", nullptr, {}};
    e.expr = uni(ext(two, "0"),
                 uni(cat(DictExpr::star(fin(two, {"101"})), ext(two, "111")), fin(two, {"100"})));
    auto cd = std::make_shared<CompiledDict>(compile(e.expr));
    add_member_fact(e, cd, "(100)", true);
    add_member_fact(e, cd, "(110)", false);
    add_member_fact(e, cd, "100(110)", false);
    add_member_fact(e, cd, "100100(110)", false);
    add_member_fact(e, cd, "100100100(110)", false);
    entries.push_back(std::move(e));
  }

  {  // (5) D2: difference of star closures
    CorpusEntry e{"d2_example", "star(A1) \\ star(A0) with A0 = {010,011}; omega-power "
                  "A1^inf \\ A0^inf",
                  nullptr, {}};
    auto a0 = fin(two, {"010", "011"});
    auto a1 = fin(two, {"010", "011", "00", "000", "100", "110", "1000", "1100"});
    e.expr = DictExpr::diff(DictExpr::star(a1), DictExpr::star(a0));
    auto cd = std::make_shared<CompiledDict>(compile(e.expr));
    auto cd0 = std::make_shared<CompiledDict>(compile(a0));
    auto cd1 = std::make_shared<CompiledDict>(compile(a1));
    add_member_fact(e, cd, "(011)", false);
    add_member_fact(e, cd, "011(0)", true);
    add_member_fact(e, cd, "011011(0)", true);
    add_member_fact(e, cd, "(0)", true);
    e.checks.push_back({"omega-power equals A1^inf \\ A0^inf on small lassos", [cd, cd0, cd1] {
                          for (const Lasso& l : enumerate_lassos(Alphabet(2), 6)) {
                            bool want = member_lasso(*cd1, l) && !member_lasso(*cd0, l);
                            if (member_lasso(*cd, l) != want) return false;
                          }
                          return true;
                        }});
    entries.push_back(std::move(e));
  }

  {  // (6) dual-D3: difference of star closures plus a star closure
    CorpusEntry e{"dual_d3_example",
                  "(star(A2) \\ star(A1)) | star(A0) with A0={00}, A1={00,01}, A2={00,01,10,100}",
                  nullptr, {}};
    auto a0 = fin(two, {"00"});
    auto a1 = fin(two, {"00", "01"});
    auto a2 = fin(two, {"00", "01", "10", "100"});
    e.expr = uni(DictExpr::diff(DictExpr::star(a2), DictExpr::star(a1)), DictExpr::star(a0));
    auto cd = std::make_shared<CompiledDict>(compile(e.expr));
    auto cd0 = std::make_shared<CompiledDict>(compile(a0));
    auto cd1 = std::make_shared<CompiledDict>(compile(a1));
    auto cd2 = std::make_shared<CompiledDict>(compile(a2));
    add_member_fact(e, cd, "(0)", true);
    add_member_fact(e, cd, "(10)", true);
    e.checks.push_back(
        {"omega-power equals (A2^inf \\ A1^inf) | A0^inf on small lassos", [cd, cd0, cd1, cd2] {
           for (const Lasso& l : enumerate_lassos(Alphabet(2), 6)) {
             bool want = (member_lasso(*cd2, l) && !member_lasso(*cd1, l)) || member_lasso(*cd0, l);
             if (member_lasso(*cd, l) != want) return false;
           }
           return true;
         }});
    entries.push_back(std::move(e));
  }

  {  // (7) dual-D2 over sigma-2 sets: ext(11) | {0}
    CorpusEntry e{"dual_d2_sigma2_example", "ext(11) | {0}", nullptr, {}};
    e.expr = uni(ext(two, "11"), fin(two, {"0"}));
    auto cd = std::make_shared<CompiledDict>(compile(e.expr));
    add_member_fact(e, cd, "(0)", true);
    add_member_fact(e, cd, "(01)", false);
    add_member_fact(e, cd, "(1)", true);
    add_member_fact(e, cd, "0(1)", true);
    add_member_fact(e, cd, "(011)", true);
    add_identity_fact(
        e, "matches the closed-form intersection on small lassos", cd, [](const Lasso& l) {
          // ({0^inf} | some 0^p 11 cylinder) and (eventually zero or 11 recurs)
          std::uint64_t z = leading_zeros(l, 64);
          bool zero_inf = is_zero_tail(l) && z >= l.head().size();
          bool starts = zero_inf || (l.letter(z) == 1 && l.letter(z + 1) == 1);
          const Word& v = l.cycle();
          bool recur11 = false;
          for (std::size_t i = 0; i < v.size(); ++i)
            recur11 |= v[i] == 1 && v[(i + 1) % v.size()] == 1;
          return starts && (is_zero_tail(l) || recur11);
        });
    entries.push_back(std::move(e));
  }

  {  // (8) the oracle dictionary: prefixes keep twice as many 1s as letters
    CorpusEntry e{"finkel_oracle",
                  "oracle dictionary; closed omega-power with no finite generator", nullptr, {}};
    auto d = std::make_shared<OracleDictionary>(finkel_dictionary());
    auto word_fact = [&](const char* w, bool expected) {
      e.checks.push_back({std::string("word ") + w + (expected ? " in" : " not in") + " A",
                          [d, w = Word::parse(w), expected] { return d->contains(w) == expected; }});
    };
    word_fact("1", true);
    word_fact("0", false);
    word_fact("10", true);
    word_fact("11", true);
    word_fact("100", false);
    word_fact("101100", true);
    e.checks.push_back(
        {"growing-block stream decomposes only at block ends (window 30)", [d] {
           // 1 0 1^2 0^2 1^3 0^3 ... : block k covers positions k(k-1)..k(k+1)-1
           OmegaStream beta([](std::uint64_t k) {
             std::uint64_t b = 1;
             while (b * (b + 1) <= k) ++b;
             return k - b * (b - 1) < b ? 1 : 0;
           });
           std::vector<std::uint64_t> cuts;
           for (std::uint64_t cut = 1; cut <= 30; ++cut) {
             Word first = beta.prefix(cut);
             if (d->contains(first) && oracle_covers(*d, beta, cut, 30)) cuts.push_back(cut);
           }
           return cuts == std::vector<std::uint64_t>{2, 6, 12, 20, 30};
         }});
    entries.push_back(std::move(e));
  }

  {  // (9) the rank family A_p plus the three summary poles
    CorpusEntry e{"rank_family", "A_p = {00} | ext(0^{2q}1), q <= p | ext(0^{2p+1}); rank p at "
                  "0^{2p-1}1^inf",
                  nullptr, {}};
    for (int p = 1; p <= 6; ++p) {
      DictExprPtr ap = fin(two, {"00"});
      for (int q = 0; q <= p; ++q) {
        Word base;
        for (int i = 0; i < 2 * q; ++i) base.append(0);
        base.append(1);
        ap = uni(ap, DictExpr::ext(two, base));
      }
      Word deep;
      for (int i = 0; i < 2 * p + 1; ++i) deep.append(0);
      ap = uni(ap, DictExpr::ext(two, deep));
      if (p == 2) e.expr = ap;
      Word head;
      for (int i = 0; i < 2 * p - 1; ++i) head.append(0);
      Lasso alpha(head, Word{1});
      e.checks.push_back({"rank of the canonical escape lasso is " + std::to_string(p),
                          [ap, alpha, p] {
                            RankResult r = rank_lasso(ap, alpha);
                            return !r.member && r.rank == static_cast<std::uint32_t>(p);
                          }});
    }
    e.checks.push_back({"rank summary poles: full, empty, single word", [] {
                          auto full = rank_summary(FiniteDict::of(Alphabet(2), {Word{0}, Word{1}}));
                          auto empty = rank_summary(FiniteDict::of(Alphabet(2), {Word{}}));
                          auto point = rank_summary(FiniteDict::of(Alphabet(2), {Word{0}}));
                          return full.kind == RankSummary::Kind::Zero &&
                                 empty.kind == RankSummary::Kind::One &&
                                 point.kind == RankSummary::Kind::Omega;
                        }});
    entries.push_back(std::move(e));
  }

  {  // (11) found by enumeration: a finite dictionary with a proper clopen
     // omega-power, answering whether that class is inhabited at this scale
    CorpusEntry e{"finite_clopen_example",
                  "{0,01,11,111}: a finite dictionary whose omega-power is clopen and proper",
                  nullptr, {}};
    FiniteDict d = FiniteDict::of(two, {Word::parse("0"), Word::parse("01"), Word::parse("11"),
                                        Word::parse("111")});
    e.expr = d.expr();
    auto cd = std::make_shared<CompiledDict>(compile(e.expr));
    e.checks.push_back({"classified clopen", [d] { return topo_class(d) == TopoClass::Clopen; }});
    e.checks.push_back({"not universal and not empty",
                        [d] { return !is_universal(d) && !d.nonempty_words().empty(); }});
    add_identity_fact(e, "omega-power equals N_0 | N_11 on small lassos", cd,
                      [](const Lasso& l) {
                        return l.letter(0) == 0 || (l.letter(0) == 1 && l.letter(1) == 1);
                      });
    entries.push_back(std::move(e));
  }

  {  // (10) the strict two-word inclusion witness
    CorpusEntry e{"inclusion_pair", "{01,0}^inf strictly inside {0,10}^inf", nullptr, {}};
    FiniteDict a = FiniteDict::of(two, {Word::parse("01"), Word::parse("0")});
    FiniteDict b = FiniteDict::of(two, {Word::parse("0"), Word::parse("10")});
    e.expr = a.expr();
    e.checks.push_back({"{01,0}^inf included in {0,10}^inf", [a, b] { return included(a, b); }});
    e.checks.push_back(
        {"{0,10}^inf not included in {01,0}^inf", [a, b] { return !included(b, a); }});
    e.checks.push_back({"generator lengths satisfy |t1|+|t2| <= |s1|+|s2|", [a, b] {
                          return b.words[0].size() + b.words[1].size() <=
                                 a.words[0].size() + a.words[1].size();
                        }});
    entries.push_back(std::move(e));
  }

  return entries;
}

inline std::vector<CorpusOutcome> run_corpus() {
  std::vector<CorpusOutcome> out;
  for (const CorpusEntry& e : corpus())
    for (const CorpusCheck& c : e.checks) out.push_back({e.name, c.what, c.run()});
  return out;
}

}  // namespace opow
