#include <catch2/catch_amalgamated.hpp>

#include "opow/engine.hpp"
#include "opow/rank.hpp"

#include "oracles.hpp"

using namespace opow;

namespace {
Alphabet two(2);
Word W(const char* s) { return Word::parse(s); }
Lasso L(const char* s) { return Lasso::parse(s); }
FiniteDict FD(std::initializer_list<const char*> ws) {
  std::vector<Word> v;
  for (const char* w : ws) v.push_back(W(w));
  return FiniteDict::of(two, v);
}
}  // namespace

TEST_CASE("omega acceptor basics") {
  auto all = compile(DictExpr::finite(two, {W("0"), W("1")}));
  CHECK(member_lasso(all, L("(0)")));
  CHECK(member_lasso(all, L("(01)")));
  CHECK(member_lasso(all, L("110(100)")));

  auto zero = compile(DictExpr::finite(two, {W("0")}));
  CHECK(member_lasso(zero, L("(0)")));
  CHECK_FALSE(member_lasso(zero, L("1(0)")));
  CHECK_FALSE(member_lasso(zero, L("(1)")));

  auto none = compile(DictExpr::finite(two, {Word{}}));
  CHECK_FALSE(member_lasso(none, L("(0)")));
  CHECK_FALSE(member_lasso(none, L("(1)")));
}

TEST_CASE("membership on the open example") {
  auto lit0 = DictExpr::letter(two, 0);
  auto lit1 = DictExpr::letter(two, 1);
  auto e = DictExpr::unite(
      DictExpr::ext(two, W("0")),
      DictExpr::concat(lit1, DictExpr::concat(DictExpr::star(lit0),
                                              DictExpr::concat(lit1, DictExpr::star(lit1)))));
  auto cd = compile(e);
  CHECK_FALSE(member_lasso(cd, L("1(0)")));
  CHECK(member_lasso(cd, L("(1)")));
  CHECK(member_lasso(cd, L("(100)")));
}

TEST_CASE("member_positions cross-checks member_lasso") {
  auto zero = compile(DictExpr::finite(two, {W("0")}));
  CHECK(member_positions(zero, L("(0)")));
  CHECK_FALSE(member_positions(zero, L("1(0)")));
  auto d = compile(DictExpr::finite(two, {W("00"), W("01")}));
  CHECK(member_positions(d, L("0(01)")) == member_lasso(d, L("0(01)")));
}

TEST_CASE("run_safety") {
  SafetyAutomaton sa = SafetyAutomaton::build(FD({"0"}));
  OmegaStream s([](std::uint64_t k) { return k == 0 ? 1 : 0; });
  RunResult r = run_safety(sa, s, 100);
  CHECK(r == RunResult{true, 1});

  SafetyAutomaton all = SafetyAutomaton::build(FD({"0", "1"}));
  CHECK(run_safety(all, s, 100) == RunResult{false, 100});

  SafetyAutomaton phi0 = SafetyAutomaton::build(FD({"10100"}));
  RunResult r2 = run_safety(phi0, alpha0(), 1000);
  CHECK(r2.dead);
  CHECK(r2.step <= 20);
}

TEST_CASE("safety automaton accepts exactly the omega-power of finite dicts") {
  auto pool = testing::all_words(two, 1, 3);
  auto lassos = testing::lasso_family(two, 2, 3);
  for (const FiniteDict& d : testing::dict_family(two, pool, 2)) {
    SafetyAutomaton sa = SafetyAutomaton::build(d);
    auto cd = compile(d.expr());
    OmegaAcceptor acc = build_omega(cd);
    for (const Lasso& l : lassos)
      CHECK(safety_accepts_lasso(sa, l) == member_lasso(acc, l));
  }
}

TEST_CASE("is_universal") {
  CHECK(is_universal(FD({"0", "1"})));
  CHECK(is_universal(FD({"0", "10", "11"})));
  CHECK_FALSE(is_universal(FD({"0", "11"})));
  CHECK_FALSE(is_universal(FiniteDict::of(two, {Word{}})));
}

TEST_CASE("universality matches sampled membership") {
  auto pool = testing::all_words(two, 1, 3);
  auto lassos = enumerate_lassos(two, 4);  // every ω-word with |u|+|v| <= 4
  for (const FiniteDict& d : testing::dict_family(two, pool, 3)) {
    bool uni = is_universal(d);
    bool all = true;
    auto cd = compile(d.expr());
    OmegaAcceptor acc = build_omega(cd);
    for (const Lasso& l : lassos) all = all && member_lasso(acc, l);
    CHECK(uni == all);
  }
}

TEST_CASE("membership routes agree on wider lassos") {
  auto pool = testing::all_words(two, 1, 3);
  auto lassos = testing::lasso_family(two, 4, 4);
  for (const FiniteDict& d : testing::dict_family(two, pool, 2)) {
    auto cd = compile(d.expr());
    OmegaAcceptor acc = build_omega(cd);
    for (const Lasso& l : lassos) {
      bool a = member_lasso(acc, l);
      CHECK(a == member_positions(cd, l));
      CHECK(a == testing::brute_member(d, l));
    }
  }
}

TEST_CASE("topo_class") {
  CHECK(topo_class(FiniteDict::of(two, {Word{}})) == TopoClass::Empty);
  CHECK(topo_class(FiniteDict::of(two, {})) == TopoClass::Empty);
  CHECK(topo_class(FD({"0", "1"})) == TopoClass::Full);
  CHECK(topo_class(FD({"0"})) == TopoClass::ClosedNotOpen);
  CHECK(topo_class(FD({"0", "01", "11"})) == TopoClass::ClosedNotOpen);
}

TEST_CASE("a finite dictionary can have a proper clopen omega-power") {
  // {0,01,11,111} generates exactly N_0 | N_11 (runs of 1s of length >= 2
  // split into 11s and 111s; every first word forces a 0 or 11 start).
  FiniteDict d = FD({"0", "01", "11", "111"});
  CHECK(topo_class(d) == TopoClass::Clopen);
  CHECK(rank_summary(d).kind == RankSummary::Kind::FiniteClopen);
  CHECK(rank_summary(d).lower_bound == 1);
  auto cd = compile(d.expr());
  for (const Lasso& l : enumerate_lassos(two, 6)) {
    bool in_cylinders = l.letter(0) == 0 || (l.letter(0) == 1 && l.letter(1) == 1);
    CHECK(member_lasso(cd, l) == in_cylinders);
  }
}

TEST_CASE("equivalence is an equivalence relation, inclusion a preorder") {
  auto pool = testing::all_words(two, 1, 2);
  auto dicts = testing::dict_family(two, pool, 2);
  for (const FiniteDict& a : dicts) {
    CHECK(included(a, a));
    for (const FiniteDict& b : dicts) {
      CHECK(equivalent(a, b) == equivalent(b, a));
      for (const FiniteDict& c : dicts)
        if (included(a, b) && included(b, c)) CHECK(included(a, c));
    }
  }
}

TEST_CASE("included and equivalent") {
  FiniteDict a = FD({"01", "0"});
  FiniteDict b = FD({"0", "10"});
  CHECK(included(a, b));
  CHECK_FALSE(included(b, a));
  CHECK(included(a, a));
  CHECK(equivalent(FD({"0"}), FD({"0", "00"})));
  CHECK_FALSE(equivalent(FD({"0", "01"}), FD({"0", "10"})));
  CHECK(equivalent(a, a));
}

TEST_CASE("minimal_generator") {
  CHECK(minimal_generator(FD({"0", "00"})).words == std::vector<Word>{W("0")});
  CHECK(minimal_generator(FD({"0", "1"})).words == std::vector<Word>{W("0"), W("1")});
  CHECK(minimal_generator(FiniteDict::of(two, {Word{}})).words.empty());
}

TEST_CASE("minimal_generator output is minimal and equivalent") {
  auto pool = testing::all_words(two, 1, 3);
  for (const FiniteDict& d : testing::dict_family(two, pool, 3)) {
    FiniteDict m = minimal_generator(d);
    FiniteDict base = FiniteDict::of(two, d.nonempty_words());
    CHECK(equivalent(m, base));
    for (std::size_t i = 0; i < m.words.size(); ++i) {
      std::vector<Word> fewer = m.words;
      fewer.erase(fewer.begin() + i);
      CHECK_FALSE(equivalent(FiniteDict::of(two, fewer), base));
    }
  }
}

TEST_CASE("greedy_decompose") {
  auto d = compile(DictExpr::finite(two, {W("0"), W("01")}));
  CHECK(greedy_decompose(d, L("(01)"), 2) == std::vector<Word>{W("01"), W("01")});

  auto zero = compile(DictExpr::finite(two, {W("0")}));
  CHECK(greedy_decompose(zero, L("(0)"), 3) == std::vector<Word>{W("0"), W("0"), W("0")});

  auto all = compile(DictExpr::finite(two, {W("0"), W("1")}));
  CHECK(greedy_decompose(all, L("(10)"), 2) == std::vector<Word>{W("1"), W("0")});

  CHECK_THROWS_AS(greedy_decompose(zero, L("(1)"), 1), std::invalid_argument);
}

TEST_CASE("greedy_decompose is self-consistent under shifting") {
  auto pool = testing::all_words(two, 1, 3);
  auto lassos = testing::lasso_family(two, 1, 2);
  for (const FiniteDict& fd : testing::dict_family(two, pool, 2)) {
    auto cd = compile(fd.expr());
    OmegaAcceptor acc = build_omega(cd);
    for (const Lasso& l : lassos) {
      if (!member_lasso(acc, l)) continue;
      auto chunks = greedy_decompose(cd, l, 3);
      REQUIRE(chunks.size() == 3);
      // chunks concatenate to a prefix and stay in the dictionary
      Word glued = chunks[0] + chunks[1] + chunks[2];
      CHECK(l.prefix(glued.size()) == glued);
      for (const Word& c : chunks) CHECK(cd.contains(c));
      // re-running on the shifted remainder reproduces the tail
      auto tail = greedy_decompose(cd, l.shift(chunks[0].size()), 2);
      CHECK(std::vector<Word>(chunks.begin() + 1, chunks.end()) == tail);
    }
  }
}
