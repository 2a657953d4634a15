#pragma once

#include "negbeta/arith.hpp"
#include "negbeta/language.hpp"
#include "negbeta/word.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace negbeta {

/// Longest suffix of w equal to a prefix of b (0 if none).
std::size_t k_of(WordView bprefix, WordView w);

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;  // dst > K leaves the slice
  Digit label = 0;
  bool spine = false;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertices V_0..V_K of the presentation with all their out-edges.
class GraphSlice {
 public:
  GraphSlice(std::size_t K, Word bprefix, std::vector<std::vector<Edge>> out);

  std::size_t K() const { return K_; }
  std::size_t vertex_count() const { return K_ + 1; }
  /// b_1..b_{K+1}.
  const Word& bprefix() const { return bprefix_; }
  /// Out-edges of V_i sorted by label.
  std::span<const Edge> out_edges(std::size_t i) const { return out_.at(i); }
  std::optional<Edge> edge(std::size_t i, Digit a) const;
  std::vector<Edge> edges() const;
  bool complete(std::size_t i) const { return i <= K_; }
  bool inside(std::size_t v) const { return v <= K_; }

 private:
  std::size_t K_;
  Word bprefix_;
  std::vector<std::vector<Edge>> out_;
};

/// One-sided specs only; needs K + 2 symbols of b.
GraphSlice build_graph(const ShiftSpec& spec, std::size_t K);

struct WalkResult {
  bool accepted = false;
  std::vector<std::size_t> vertices;  // visited vertices, start included
  std::size_t rejected_at = 0;        // 0-based position of the unmatched symbol
};

/// Throws TruncationInsufficient if the walk leaves the slice.
WalkResult walk(const GraphSlice& g, WordView w, std::size_t start = 0);

struct FollowerReport {
  bool equal = true;
  std::size_t k_first = 0;
  std::size_t k_second = 0;
  std::size_t followers_first = 0;
  std::size_t followers_second = 0;
  std::optional<Word> counterexample;
};

/// Compares {u : |u| = depth, wu admissible} for the two words.
FollowerReport follower_equiv_check(const ShiftSpec& spec, WordView w, WordView w2, std::size_t depth);

struct PathWord {
  std::size_t length = 0;
  Word labels;
};

/// Shortest path from V_i to V_0, lexicographically least label word among
/// the shortest. Throws TruncationInsufficient when none exists in the slice.
PathWord shortest_path_to_v0(const GraphSlice& g, std::size_t i);

/// Shortest-path lengths to V_0 for every vertex (nullopt if unreachable).
std::vector<std::optional<std::size_t>> distances_to_v0(const GraphSlice& g);

/// Least L such that no vertex V_k, L <= k <= K, has an edge to V_j with
/// 0 <= k - j <= N. Only certified inside the slice.
std::optional<std::size_t> gap_scan(const GraphSlice& g, std::size_t N);

/// Number of labelled paths of length n starting at `from`.
Integer path_count(const GraphSlice& g, std::size_t n, std::size_t from = 0);

/// Labels of all length-n paths starting at `from`, lexicographic.
std::vector<Word> path_words(const GraphSlice& g, std::size_t n, std::size_t from = 0);

std::string graph_to_dot(const GraphSlice& g);
std::string graph_to_json(const GraphSlice& g);

/// "2|1" (eventually periodic) or a plain digit prefix, whitespace or comma separated.
BoundSequence parse_b_sequence(std::string_view text);
BoundSequence load_b_file(const std::string& path);

}  // namespace negbeta
