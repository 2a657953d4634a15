#include "negbeta/oracle/oracle.hpp"

#include <doctest.h>

using namespace negbeta;

// The oracle is checked against hand-derived facts only, never against the
// optimized modules.

namespace {

ShiftSpec golden() { return ShiftSpec::one_sided(EvPeriodicSeq({2}, {1})); }

}  // namespace

TEST_CASE("oracle basics on golden") {
  const auto g = golden();
  CHECK(oracle::naive_admissible(g, Word{2, 2}) == Admissibility::Yes);
  CHECK(oracle::naive_admissible(g, Word{2, 1, 2}) == Admissibility::No);
  CHECK(oracle::naive_words(g, 3).size() == 7);
  CHECK(oracle::naive_per(g, 1) == std::vector<Word>{{1}, {2}});
  CHECK(oracle::naive_per(g, 2) == std::vector<Word>{{1, 1}, {2, 2}});
}

TEST_CASE("oracle suffix-prefix scan") {
  CHECK(oracle::naive_k(Word{3, 2, 3, 2, 1}, Word{1, 3, 2, 3}) == 3);
  CHECK(oracle::naive_k(Word{3, 2, 3, 2, 1}, Word{2, 2}) == 0);
  CHECK(oracle::naive_k(Word{2, 1, 1}, Word{2, 1, 1, 1, 1}) == 0);
}

TEST_CASE("oracle followers and extensions") {
  const auto g = golden();
  // After 21 only 1 may follow.
  CHECK(oracle::naive_followers(g, Word{2, 1}, 1) == std::set<Word>{{1}});
  CHECK(oracle::naive_followers(g, Word{1}, 1) == std::set<Word>{{1}, {2}});
  const auto two = ShiftSpec::from_beta(BetaValue::exact(2), 64);
  CHECK(oracle::naive_extendable(two, Word{3, 1}, 8) == false);
  CHECK(oracle::naive_extendable(two, Word{1, 2, 3}, 8));
}

TEST_CASE("oracle C membership and split") {
  const auto g = golden();
  CHECK(oracle::naive_in_c(g, 2, Word{1, 1, 1}));
  CHECK_FALSE(oracle::naive_in_c(g, 2, Word{2}));
  CHECK(oracle::naive_split(g, 1, Word{2, 1, 1, 1, 1}) == std::pair<Word, Word>{{}, {2, 1, 1, 1, 1}});
}
