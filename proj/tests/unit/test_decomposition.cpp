#include "negbeta/decomposition.hpp"
#include "negbeta/error.hpp"
#include "negbeta/oracle/oracle.hpp"

#include <doctest.h>

using namespace negbeta;

namespace {

ShiftSpec golden() { return ShiftSpec::one_sided(EvPeriodicSeq({2}, {1}), "golden"); }
ShiftSpec beta_41_16() { return ShiftSpec::from_beta(BetaValue::exact(Rational(41, 16)), 256); }

}  // namespace

TEST_CASE("C and G membership against the oracle") {
  const auto spec = beta_41_16();
  const auto g = build_graph(spec, 24);
  for (std::size_t L = 1; L <= 4; ++L) {
    for (std::size_t n = 1; n <= 6; ++n) {
      std::vector<Word> expected;
      for (const auto& w : oracle::naive_words(spec, n))
        if (oracle::naive_in_c(spec, L, w)) expected.push_back(w);
      CHECK(c_words(g, L, n) == expected);
      CHECK(c_count(g, L, n) == expected.size());
      for (const auto& w : oracle::naive_words(spec, n)) {
        CHECK(split(g, L, w) == oracle::naive_split(spec, L, w));
        const auto [u, v] = split(g, L, w);
        CHECK(in_g(g, L, u));
        CHECK((v.empty() || in_c(g, L, v)));
      }
    }
  }
}

TEST_CASE("C counts") {
  const auto g = build_graph(beta_41_16(), 24);
  std::vector<Integer> c1, c2;
  for (std::size_t n = 1; n <= 6; ++n) {
    c1.push_back(c_count(g, 1, n));
    c2.push_back(c_count(g, 2, n));
  }
  CHECK(c1 == std::vector<Integer>{1, 2, 3, 5, 8, 12});
  CHECK(c2 == std::vector<Integer>{1, 1, 1, 1, 1, 2});
  const auto gold = build_graph(golden(), 24);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(c_count(gold, 2, n) == 1);
  CHECK(split(gold, 1, Word{2, 1, 1, 1, 1}) == std::pair<Word, Word>{{}, {2, 1, 1, 1, 1}});
}

TEST_CASE("entropy profile selects L") {
  const auto p = c_entropy_profile(build_graph(golden(), 40), 6, 16, 0.3);
  CHECK(p.selected == 2u);
  const auto q = c_entropy_profile(build_graph(beta_41_16(), 40), 6, 14, 0.3);
  CHECK(q.selected == 2u);
  CHECK(c_profile_csv(p).rfind("L,n,count,estimate\n", 0) == 0);
  CHECK_THROWS_AS(select_l_hat(p, -1.0), Error);
}

TEST_CASE("count matrix bound") {
  const auto gold = build_graph(golden(), 40);
  const auto r = bound_check(gold, 4, 4);
  CHECK(r.L == 6);
  CHECK(r.all_hold());
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].bound == 8);
  CHECK(r.rows[1].bound == 512);
  const auto s = bound_check(build_graph(beta_41_16(), 20), 2, 4);
  CHECK(s.L == 4);
  CHECK(s.all_hold());
  CHECK(s.rows[0].bound == 6);
}

TEST_CASE("gap and G(M)") {
  const auto g = build_graph(beta_41_16(), 20);
  CHECK(t_gap(g, 4, 2) == 4);
  CHECK(in_g_m(g, 2, 4, Word{1, 3, 2, 3, 2, 1}));
  CHECK_FALSE(in_g_m(g, 2, 3, Word{1, 3, 2, 3, 2, 1}));
}

TEST_CASE("glue by shortest paths") {
  const auto spec = beta_41_16();
  const auto g = build_graph(spec, 20);
  const auto r = glue(spec, g, 2, 4, {{2, 1}, {1, 3}});
  CHECK(r.route == GlueResult::Route::ShortestPath);
  CHECK(r.t == 4);
  CHECK(r.admissible);
  for (const auto& c : r.connectors) CHECK(c.size() == r.t);
  CHECK(periodic_admissible(spec, r.block));
}

TEST_CASE("glue falls back to a search when V_0 is unreachable") {
  const auto spec = golden();
  const auto g = build_graph(spec, 24);
  const auto r = glue(spec, g, 2, 4, {{2, 1}, {1, 2, 2}, {2}});
  CHECK(r.route == GlueResult::Route::Search);
  CHECK(r.admissible);
  CHECK(periodic_admissible(spec, r.block));
  const auto sampled = sample_gm_words(g, 2, 4, 10, 8, 1);
  CHECK_FALSE(sampled.empty());
  for (const auto& w : sampled) CHECK(in_g_m(g, 2, 4, w));
  CHECK(glue(spec, g, 2, 4, sampled).admissible);
}

TEST_CASE("glue rejects words outside G(M)") {
  const auto spec = beta_41_16();
  const auto g = build_graph(spec, 20);
  CHECK_THROWS_AS(glue(spec, g, 2, 0, {{3, 2, 3}}), Error);
}
