#include <catch2/catch_amalgamated.hpp>

#include "opow/corpus.hpp"
#include "opow/dict.hpp"

#include "oracles.hpp"

using namespace opow;

namespace {
Alphabet two(2);
Word W(const char* s) { return Word::parse(s); }
FiniteDict FD(std::initializer_list<const char*> ws) {
  std::vector<Word> v;
  for (const char* w : ws) v.push_back(W(w));
  return FiniteDict::of(two, v);
}
}  // namespace

TEST_CASE("compile finite sets") {
  auto cd = compile(DictExpr::finite(two, {W("010"), W("011")}));
  CHECK(cd.contains(W("010")));
  CHECK_FALSE(cd.contains(W("01")));
}

TEST_CASE("compile extension sets, non-strict") {
  auto cd = compile(DictExpr::ext(two, W("11")));
  CHECK(cd.contains(W("11")));
  CHECK(cd.contains(W("110")));
  CHECK_FALSE(cd.contains(W("1")));
}

TEST_CASE("compile star difference") {
  auto a0 = DictExpr::finite(two, {W("010"), W("011")});
  auto a1 = DictExpr::finite(
      two, {W("010"), W("011"), W("00"), W("000"), W("100"), W("110"), W("1000"), W("1100")});
  auto cd = compile(DictExpr::diff(DictExpr::star(a1), DictExpr::star(a0)));
  CHECK_FALSE(cd.contains(W("010")));
  CHECK(cd.contains(W("00010")));  // 000·10? no: 00·010 ∈ star(A1), not in star(A0)
}

TEST_CASE("oracle dictionary membership") {
  OracleDictionary fk = finkel_dictionary();
  CHECK(fk.contains(W("1")));
  CHECK_FALSE(fk.contains(W("0")));
  CHECK(fk.contains(Word{}));
  auto cd = compile(DictExpr::finite(two, {Word{}}));
  CHECK(cd.contains(Word{}));
}

TEST_CASE("compiled membership agrees with structural evaluation") {
  auto lit0 = DictExpr::letter(two, 0);
  auto lit1 = DictExpr::letter(two, 1);
  std::vector<DictExprPtr> exprs = {
      DictExpr::finite(two, {W("0"), W("01"), W("110")}),
      DictExpr::ext(two, W("01")),
      DictExpr::star(DictExpr::finite(two, {W("01"), W("0")})),
      DictExpr::diff(DictExpr::star(DictExpr::finite(two, {W("0"), W("10")})),
                     DictExpr::finite(two, {W("010")})),
      DictExpr::concat(lit1, DictExpr::concat(DictExpr::star(lit0),
                                              DictExpr::concat(lit1, DictExpr::star(lit1)))),
      DictExpr::unite(DictExpr::ext(two, W("0")), DictExpr::ext(two, W("11"))),
  };
  auto words = testing::all_words(two, 0, 8);
  for (const auto& e : exprs) {
    auto cd = compile(e);
    for (const Word& w : words) CHECK(cd.contains(w) == testing::eval_expr(*e, w));
  }
}

TEST_CASE("is_antichain") {
  CHECK(is_antichain(FD({"1", "001", "0001"})));
  CHECK_FALSE(is_antichain(FD({"0", "01"})));
  CHECK(is_antichain(FiniteDict::of(two, {})));
}

TEST_CASE("chain_decomposition") {
  auto parts = chain_decomposition(FD({"0", "00", "01"}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == std::vector<Word>{W("0"), W("00")});
  CHECK(parts[1] == std::vector<Word>{W("01")});

  CHECK(chain_decomposition(FD({"0"})) == std::vector<std::vector<Word>>{{W("0")}});

  auto split = chain_decomposition(FD({"1", "001"}));
  REQUIRE(split.size() == 2);
}

TEST_CASE("chain_decomposition is a partition into chains") {
  auto pool = testing::all_words(two, 1, 3);
  for (const FiniteDict& d : testing::dict_family(two, pool, 3)) {
    auto parts = chain_decomposition(d);
    std::size_t total = 0;
    for (const auto& part : parts) {
      total += part.size();
      for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j)
          CHECK(compatible(part[i], part[j]));
    }
    CHECK(total == d.words.size());
    if (is_antichain(d))
      for (const auto& part : parts) CHECK(part.size() <= 1);
  }
}

TEST_CASE("is_code") {
  CHECK(is_code(FD({"0", "01"})));
  CHECK_FALSE(is_code(FD({"0", "10", "010"})));
  CHECK(is_code(FD({"01", "10"})));
  CHECK_THROWS_AS(is_code(FiniteDict::of(two, {Word{}, W("0")})), std::invalid_argument);
}

TEST_CASE("non-commuting pairs are codes") {
  for (const Word& s1 : testing::all_words(two, 1, 5))
    for (const Word& s2 : testing::all_words(two, 1, 5)) {
      if (s1 == s2 || commutes(s1, s2)) continue;
      CHECK(is_code(FiniteDict::of(two, {s1, s2})));
    }
}

TEST_CASE("dictionary file parsing") {
  std::string text = R"(# toy dictionaries
alphabet 2
A0 = { 010, 011 }
B = ext(11)
C = star(A0)
D = C \ B
E = A0 | B
F = re(1 0* 1 1*)
G = cat(B, F)
H = ext(A0)
main = F
)";
  DictFile f = parse_dict_file(text);
  CHECK(f.alphabet.size == 2);
  auto cd = compile(f.main);
  CHECK(cd.contains(W("1011")));
  CHECK(cd.contains(W("11")));
  CHECK_FALSE(cd.contains(W("10")));

  auto cdC = compile(f.defs.at("C"));
  CHECK(cdC.contains(Word{}));
  CHECK(cdC.contains(W("010011")));
  auto cdH = compile(f.defs.at("H"));
  CHECK(cdH.contains(W("0101")));
  CHECK(cdH.contains(W("011")));
  CHECK_FALSE(cdH.contains(W("00")));

  CHECK_THROWS_AS(parse_dict_file("alphabet 2\nA = { 0 }\n"), std::invalid_argument);  // no main
  CHECK_THROWS_AS(parse_dict_file("A = { 0 }\nmain = A\n"), std::invalid_argument);  // no alphabet
  CHECK_THROWS_AS(parse_dict_file("alphabet 2\nmain = re(2)\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dict_file("alphabet 2\nmain = X\n"), std::invalid_argument);
}

TEST_CASE("re() round-trips through the compiler") {
  DictFile f = parse_dict_file("alphabet 2\nmain = re((1 0 1)* 1 1 1 (0 | 1)*)\n");
  auto cd = compile(f.main);
  CHECK(cd.contains(W("111")));
  CHECK(cd.contains(W("101111")));
  CHECK(cd.contains(W("1011011110")));
  CHECK_FALSE(cd.contains(W("10")));
  CHECK_FALSE(cd.contains(W("101")));
}

TEST_CASE("try_finite") {
  auto fin = try_finite(DictExpr::star(DictExpr::finite(two, {W("0")})));
  CHECK_FALSE(fin.has_value());
  auto f2 = try_finite(DictExpr::diff(DictExpr::finite(two, {W("0"), W("10")}),
                                      DictExpr::finite(two, {W("10")})));
  REQUIRE(f2.has_value());
  CHECK(f2->words == std::vector<Word>{W("0")});
}
