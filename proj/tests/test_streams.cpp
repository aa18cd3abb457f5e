#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "opow/streams.hpp"

#include "oracles.hpp"

using namespace opow;

namespace {

// Two representations denote the same ω-word iff they agree on a prefix of
// length |u|+|u'| + 2·lcm(|v|,|v'|).
bool same_omega_word(const Word& u, const Word& v, const Word& u2, const Word& v2) {
  auto letter = [](const Word& head, const Word& cyc, std::uint64_t k) {
    if (k < head.size()) return head[static_cast<std::size_t>(k)];
    return cyc[static_cast<std::size_t>((k - head.size()) % cyc.size())];
  };
  std::uint64_t bound = u.size() + u2.size() + 2 * std::lcm(v.size(), v2.size());
  for (std::uint64_t k = 0; k < bound; ++k)
    if (letter(u, v, k) != letter(u2, v2, k)) return false;
  return true;
}

}  // namespace

TEST_CASE("lasso literals") {
  // parsing canonicalizes: 0(10)^∞ and (01)^∞ are the same ω-word
  CHECK(Lasso::parse("0(10)") == Lasso::parse("(01)"));
  CHECK(Lasso::parse("0(10)").str() == "(01)");
  Lasso l = Lasso::parse("1(0)");
  CHECK(l.head() == Word::parse("1"));
  CHECK(l.cycle() == Word::parse("0"));
  CHECK(Lasso::parse("(1)").str() == "(1)");
  CHECK_THROWS_AS(Lasso::parse("01"), std::invalid_argument);
  CHECK_THROWS_AS(Lasso::parse("0()"), std::invalid_argument);
}

TEST_CASE("lasso_normalize canonical forms") {
  // 010(10)^∞ = (01)^∞; the shortest-head representation has an empty head.
  Lasso a = lasso_normalize(Word::parse("010"), Word::parse("10"));
  CHECK(a.head() == Word{});
  CHECK(a.cycle() == Word::parse("01"));

  Lasso b = lasso_normalize(Word{}, Word::parse("0101"));
  CHECK(b.head() == Word{});
  CHECK(b.cycle() == Word::parse("01"));

  Lasso c = lasso_normalize(Word{}, Word::parse("0"));
  CHECK(c.head() == Word{});
  CHECK(c.cycle() == Word::parse("0"));

  CHECK_THROWS_AS(lasso_normalize(Word::parse("0"), Word{}), std::invalid_argument);
}

TEST_CASE("normalization is a congruence for denoted ω-words") {
  auto words = testing::all_words(Alphabet(2), 0, 3);
  for (const Word& u : words)
    for (const Word& v : words) {
      if (v.empty()) continue;
      for (const Word& u2 : words)
        for (const Word& v2 : words) {
          if (v2.empty()) continue;
          bool same = same_omega_word(u, v, u2, v2);
          CHECK((Lasso(u, v) == Lasso(u2, v2)) == same);
        }
    }
}

TEST_CASE("lasso_shift") {
  CHECK(lasso_shift(Lasso::parse("(01)"), 1) == Lasso::parse("(10)"));
  Lasso a = Lasso::parse("01(10)");
  CHECK(lasso_shift(a, 0) == a);
  CHECK(lasso_shift(Lasso::parse("1(0)"), 5) == Lasso::parse("(0)"));
}

TEST_CASE("shift composes additively") {
  for (const Lasso& l : testing::lasso_family(Alphabet(2), 2, 3))
    for (std::uint64_t j = 0; j <= 4; ++j)
      for (std::uint64_t k = 0; k <= 4; ++k)
        CHECK(lasso_shift(l, j + k) == lasso_shift(lasso_shift(l, j), k));
}

TEST_CASE("lasso letters and prefixes") {
  Lasso l = Lasso::parse("0(10)");
  CHECK(l.prefix(5) == Word::parse("01010"));
  CHECK(l.letter(0) == 0);
  CHECK(l.letter(4) == 0);
}

TEST_CASE("alpha0 prefixes") {
  OmegaStream a0 = alpha0();
  CHECK(a0.prefix(2) == Word::parse("10"));
  CHECK(a0.prefix(5) == Word::parse("10100"));
  CHECK(a0.prefix(9) == Word::parse("101001000"));
}

TEST_CASE("alpha0 zero-runs strictly increase") {
  OmegaStream a0 = alpha0();
  Word w = a0.prefix(300);
  std::vector<int> runs;
  int run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) {
      ++run;
    } else if (run > 0) {
      runs.push_back(run);
      run = 0;
    }
  }
  REQUIRE(runs.size() >= 10);
  for (std::size_t i = 0; i < runs.size(); ++i) CHECK(runs[i] == static_cast<int>(i) + 1);
}

TEST_CASE("alpha0 letter function is consistent at distant indices") {
  OmegaStream a0 = alpha0();
  // Segment m starts with the only 1 in it.
  for (std::uint64_t m : {1ull, 2ull, 17ull, 123ull, 4096ull}) {
    CHECK(a0.letter(alpha0_segment_start(m)) == 1);
    CHECK(a0.letter(alpha0_segment_start(m) + 1) == 0);
    CHECK(a0.letter(alpha0_segment_start(m) + m) == 0);
  }
}
