#include "negbeta/error.hpp"
#include "negbeta/graph.hpp"
#include "negbeta/oracle/oracle.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

using namespace negbeta;

namespace {

ShiftSpec golden() { return ShiftSpec::one_sided(EvPeriodicSeq({2}, {1}), "golden"); }
ShiftSpec beta_41_16() { return ShiftSpec::from_beta(BetaValue::exact(Rational(41, 16)), 256); }

}  // namespace

TEST_CASE("k_of") {
  const Word b{3, 2, 3, 2, 1, 3, 3};
  CHECK(k_of(b, Word{3, 2, 3, 2}) == 4);
  CHECK(k_of(b, Word{3, 2, 1}) == 0);
  CHECK(k_of(b, Word{}) == 0);
  CHECK(k_of(b, Word{1, 3, 2, 3}) == 3);
  CHECK(k_of(b, Word{3, 2, 3, 2, 1, 3, 3}) == 7);
  CHECK(k_of(b, Word{3, 2, 3, 2, 1, 3, 3, 2}) == 2);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    Word w(rng() % 20);
    for (auto& d : w) d = 1 + static_cast<Digit>(rng() % 3);
    CHECK(k_of(b, w) == oracle::naive_k(b, w));
  }
}

TEST_CASE("golden slice") {
  const auto g = build_graph(golden(), 8);
  CHECK(g.bprefix() == Word{2, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(g.edge(0, 1) == Edge{0, 0, 1, false});
  CHECK(g.edge(0, 2) == Edge{0, 1, 2, true});
  CHECK(g.edge(1, 2) == Edge{1, 1, 2, false});
  CHECK_FALSE(g.edge(2, 2).has_value());
  CHECK(g.edge(3, 2) == Edge{3, 1, 2, false});
  // Every vertex other than V_0 is cut off from it.
  const auto d = distances_to_v0(g);
  CHECK(d[0] == 0u);
  for (std::size_t i = 1; i < d.size(); ++i) CHECK_FALSE(d[i].has_value());
  CHECK_THROWS_AS(shortest_path_to_v0(g, 1), Error);
  CHECK(gap_scan(g, 4) == 6u);
  CHECK(gap_scan(g, 1) == 2u);
}

TEST_CASE("walks accept exactly the admissible words") {
  const auto spec = golden();
  const auto g = build_graph(spec, 12);
  CHECK(walk(g, Word{2, 2}).accepted);
  const auto r = walk(g, Word{2, 1, 2});
  CHECK_FALSE(r.accepted);
  CHECK(r.rejected_at == 2);
  CHECK(path_count(g, 2) == 4);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(path_words(g, n) == oracle::naive_words(spec, n));
}

TEST_CASE("41/16 slice") {
  const auto spec = beta_41_16();
  const auto g = build_graph(spec, 8);
  CHECK(g.bprefix() == Word{3, 2, 3, 2, 1, 3, 3, 2, 3});
  const auto w = walk(g, Word{3, 2, 3, 2, 1});
  CHECK(w.accepted);
  CHECK(w.vertices == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
  std::vector<std::string> paths;
  for (std::size_t i = 1; i <= 6; ++i) paths.push_back(format_word(shortest_path_to_v0(g, i).labels));
  CHECK(paths == std::vector<std::string>{"21", "1", "321", "1321", "321", "21"});
  CHECK(gap_scan(g, 1) == 2u);
  CHECK(gap_scan(g, 2) == 4u);
  std::vector<Integer> counts;
  for (std::size_t n = 1; n <= 6; ++n) counts.push_back(path_count(g, n));
  CHECK(counts == std::vector<Integer>{3, 8, 21, 55, 142, 364});
  const auto big = build_graph(spec, 16);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(path_words(big, n) == oracle::naive_words(spec, n));
}

TEST_CASE("walks that leave the slice are reported") {
  const auto g = build_graph(golden(), 3);
  CHECK_THROWS_AS(walk(g, Word{2, 1, 1, 1, 1}), Error);
  CHECK_THROWS_AS(build_graph(ShiftSpec::from_beta(BetaValue::exact(2), 20), 4), Error);
  CHECK_THROWS_AS(build_graph(ShiftSpec::one_sided(BoundSequence(Word{2, 1, 1})), 4), Error);
}

TEST_CASE("follower sets depend only on the vertex") {
  const auto spec = beta_41_16();
  auto r = follower_equiv_check(spec, Word{1, 3, 2}, Word{3, 2}, 8);
  CHECK(r.equal);
  CHECK(r.k_first == 2);
  r = follower_equiv_check(spec, Word{3}, Word{3, 2}, 6);
  CHECK_FALSE(r.equal);
  CHECK(r.counterexample.has_value());
  CHECK(oracle::naive_followers(spec, Word{1, 3, 2}, 5) == oracle::naive_followers(spec, Word{3, 2}, 5));
}

TEST_CASE("export") {
  const auto g = build_graph(golden(), 2);
  const auto dot = graph_to_dot(g);
  CHECK(dot.find("V0 -> V1 [label=\"2\"];") != std::string::npos);
  CHECK(dot.find("V2 -> V3 [label=\"1\", style=dashed];") != std::string::npos);
  CHECK(dot == graph_to_dot(build_graph(golden(), 2)));
  CHECK(graph_to_json(g).find("\"K\"") != std::string::npos);
}

TEST_CASE("b-sequence parsing") {
  auto b = parse_b_sequence("2|1");
  REQUIRE(b.is_exact());
  CHECK(b.prefix(3) == Word{2, 1, 1});
  b = parse_b_sequence("3 2 3 2 1 3 3");
  CHECK_FALSE(b.is_exact());
  CHECK(b.known_length() == 7u);
  const std::string path = "negbeta_test_b.txt";
  {
    std::ofstream f(path);
    f << "# 41/16\n3232133\n";
  }
  CHECK(load_b_file(path).prefix(7) == Word{3, 2, 3, 2, 1, 3, 3});
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_b_sequence("2|"), Error);
}
