#include <catch2/catch_amalgamated.hpp>

#include "opow/rank.hpp"

#include "oracles.hpp"

using namespace opow;

namespace {
Alphabet two(2);
Word W(const char* s) { return Word::parse(s); }
Lasso L(const char* s) { return Lasso::parse(s); }

// A_p = {00} ∪ ext(0^{2q}1) for q ≤ p ∪ ext(0^{2p+1})
DictExprPtr rank_family(int p) {
  DictExprPtr e = DictExpr::finite(two, {W("00")});
  for (int q = 0; q <= p; ++q) {
    Word base;
    for (int i = 0; i < 2 * q; ++i) base.append(0);
    base.append(1);
    e = DictExpr::unite(e, DictExpr::ext(two, base));
  }
  Word deep;
  for (int i = 0; i < 2 * p + 1; ++i) deep.append(0);
  return DictExpr::unite(e, DictExpr::ext(two, deep));
}

Lasso escape(int p) {
  Word head;
  for (int i = 0; i < 2 * p - 1; ++i) head.append(0);
  return Lasso(head, Word{1});
}
}  // namespace

TEST_CASE("position graph shapes") {
  auto zero = compile(DictExpr::finite(two, {W("0")}));
  PositionGraph g = position_graph(zero, L("(0)"));
  REQUIRE(g.count() == 1);
  CHECK(g.succ[0] == std::vector<int>{0});  // self loop

  PositionGraph g2 = position_graph(zero, L("1(0)"));
  REQUIRE(g2.count() == 2);
  CHECK(g2.succ[0].empty());

  auto a2 = compile(rank_family(2));
  PositionGraph g3 = position_graph(a2, L("000(1)"));
  CHECK(g3.count() == 4);
}

TEST_CASE("rank of the escape lassos") {
  for (int p = 1; p <= 4; ++p) {
    RankResult r = rank_lasso(rank_family(p), escape(p));
    CHECK_FALSE(r.member);
    CHECK(r.rank == static_cast<std::uint32_t>(p));
  }
}

TEST_CASE("rank edge cases") {
  auto none = compile(DictExpr::finite(two, {Word{}}));
  CHECK(rank_lasso(none, L("(0)")) == RankResult{false, 1});
  CHECK(rank_lasso(none, L("01(10)")) == RankResult{false, 1});

  auto all = compile(DictExpr::finite(two, {W("0"), W("1")}));
  CHECK(rank_lasso(all, L("(0)")).member);
  CHECK(rank_lasso(all, L("10(110)")).member);
}

TEST_CASE("e_level") {
  auto none = compile(DictExpr::finite(two, {Word{}}));
  CHECK(e_level(none, L("(0)"), 0));

  auto a2 = compile(rank_family(2));
  CHECK_FALSE(e_level(a2, L("000(1)"), 0));
  CHECK(e_level(a2, L("000(1)"), 1));
  CHECK(e_level(a2, L("000(1)"), 2));

  auto all = compile(DictExpr::finite(two, {W("0"), W("1")}));
  for (int k = 0; k <= 3; ++k) CHECK_FALSE(e_level(all, L("(01)"), k));
}

TEST_CASE("finite level sets stratify the rank") {
  auto pool = testing::all_words(two, 1, 3);
  auto lassos = testing::lasso_family(two, 2, 2);
  for (const FiniteDict& fd : testing::dict_family(two, pool, 2)) {
    auto cd = compile(fd.expr());
    for (const Lasso& l : lassos) {
      RankResult r = rank_lasso(cd, l);
      if (r.member) continue;
      for (int k = 0; k <= 5; ++k)
        CHECK(e_level(cd, l, k) == (r.rank <= static_cast<std::uint32_t>(k) + 1));
    }
  }
}

TEST_CASE("rank drops strictly along edges") {
  auto check_drop = [](const CompiledDict& cd, const Lasso& l) {
    RankResult r = rank_lasso(cd, l);
    if (r.member) return;
    PositionGraph g = position_graph(cd, l);
    int c0 = g.initial();
    for (std::size_t i = 0; i < g.succ[c0].size(); ++i) {
      Lasso shifted = l.shift(g.match_len[c0][i]);
      RankResult rs = rank_lasso(cd, shifted);
      REQUIRE_FALSE(rs.member);
      CHECK(rs.rank < r.rank);
    }
  };
  auto a3 = compile(rank_family(3));
  check_drop(a3, escape(3));
  auto small = compile(DictExpr::finite(two, {W("00"), W("01")}));
  check_drop(small, L("0(01)"));
}

TEST_CASE("equivalent dictionaries may have different ranks") {
  // Dropping the word 00 from the p=2 family keeps the ω-power but lowers
  // the rank at the escape lasso from 2 to 1.
  auto a = rank_family(2);
  auto b = DictExpr::diff(a, DictExpr::finite(two, {W("00")}));
  auto ca = compile(a);
  auto cb = compile(b);
  for (const Lasso& l : enumerate_lassos(two, 6))
    CHECK(member_lasso(ca, l) == member_lasso(cb, l));
  CHECK(rank_lasso(ca, escape(2)) == RankResult{false, 2});
  CHECK(rank_lasso(cb, escape(2)) == RankResult{false, 1});
}

TEST_CASE("rank summaries") {
  CHECK(rank_summary(FiniteDict::of(two, {W("0"), W("1")})).kind == RankSummary::Kind::Zero);
  CHECK(rank_summary(FiniteDict::of(two, {Word{}})).kind == RankSummary::Kind::One);
  CHECK(rank_summary(FiniteDict::of(two, {W("0")})).kind == RankSummary::Kind::Omega);
}

TEST_CASE("membership routes agree on extension dictionaries") {
  auto a2 = compile(rank_family(2));
  for (const Lasso& l : enumerate_lassos(two, 5))
    CHECK(member_lasso(a2, l) == member_positions(a2, l));
}
