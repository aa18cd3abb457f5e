#include <catch2/catch_amalgamated.hpp>

#include "opow/corpus.hpp"

using namespace opow;

TEST_CASE("corpus has the expected entries") {
  auto entries = corpus();
  CHECK(entries.size() >= 10);
  for (const CorpusEntry& e : entries) CHECK_FALSE(e.checks.empty());
}

TEST_CASE("every corpus expectation holds") {
  for (const CorpusOutcome& o : run_corpus()) {
    INFO(o.entry << ": " << o.what);
    CHECK(o.pass);
  }
}
