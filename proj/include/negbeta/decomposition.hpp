#pragma once

#include "negbeta/arith.hpp"
#include "negbeta/graph.hpp"
#include "negbeta/language.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace negbeta {

// C^(L): words b_L w where w labels a path from V_L that stays at V_L or above.
// G^(L): words whose walk from V_0 ends below V_L.

bool in_c(const GraphSlice& g, std::size_t L, WordView x);
bool in_g(const GraphSlice& g, std::size_t L, WordView w);

std::vector<Word> c_words(const GraphSlice& g, std::size_t L, std::size_t n);
Integer c_count(const GraphSlice& g, std::size_t L, std::size_t n);

struct CProfileRow {
  std::size_t L = 0;
  std::size_t n = 0;
  Integer count;
  double estimate = 0;  // (1/n) log count, 0 for an empty set
};

struct CProfile {
  std::size_t Lmax = 0;
  std::size_t nmax = 0;
  std::vector<CProfileRow> rows;
  std::optional<double> epsilon;
  std::optional<std::size_t> selected;  // L̂(ε)
};

/// Estimates for 1 <= L <= Lmax, 1 <= n <= nmax.
CProfile c_entropy_table(const GraphSlice& g, std::size_t Lmax, std::size_t nmax);
/// Least L whose estimates for n >= nmax/2 are all <= ε; throws NoLFound.
std::size_t select_l_hat(const CProfile& profile, double epsilon);
CProfile c_entropy_profile(const GraphSlice& g, std::size_t Lmax, std::size_t nmax, double epsilon);
/// Pairs (L, n) where the estimate at L+1 exceeds the one at L.
std::vector<std::pair<std::size_t, std::size_t>> profile_monotonicity_violations(const CProfile& profile);
std::string c_profile_csv(const CProfile& profile);

/// Path counts in the graph restricted to V_{L-1}, V_L, ... with no edge
/// back into V_{L-1}. Index i stands for V_{L-1+i}; a_0^(n) = #C^(L)_n.
struct CountMatrix {
  std::size_t L = 0;
  std::size_t n = 0;
  std::vector<std::vector<Integer>> a;  // rows only for vertices whose paths stay in the slice
  std::vector<Integer> row_sums;
};

CountMatrix count_matrix(const GraphSlice& g, std::size_t L, std::size_t n);

struct BoundRow {
  std::size_t q = 0;
  std::size_t n = 0;  // qN + 1
  Integer count;      // a_1^(qN+1)
  Integer bound;      // (bN)^(2q-3)
  bool holds = false;
};

struct BoundReport {
  std::size_t N = 0;
  std::size_t L = 0;
  Digit b = 0;
  bool high_region_nonempty = false;
  bool monotone = true;  // a_1^(n) <= a_1^(n+1) over the scanned range
  std::vector<BoundRow> rows;
  bool all_hold() const;
};

/// Checks a_1^(qN+1) <= (bN)^(2q-3) for 2 <= q <= qmax with L from gap_scan(N).
BoundReport bound_check(const GraphSlice& g, std::size_t N, std::size_t qmax);

/// w = u v with u in G^(L) and v empty or in C^(L).
std::pair<Word, Word> split(const GraphSlice& g, std::size_t L, WordView w);

/// w in G^(L)(M): split(w) = (u, v) with |v| <= M.
bool in_g_m(const GraphSlice& g, std::size_t L, std::size_t M, WordView w);

/// max over i <= M+L-1 of the shortest path length from V_i to V_0.
std::size_t t_gap(const GraphSlice& g, std::size_t M, std::size_t L);

struct GlueResult {
  enum class Route { ShortestPath, Search };

  std::vector<Word> words;
  std::vector<Word> connectors;
  std::size_t t = 0;
  Word glued;  // w^1 v^1 ... v^{m-1} w^m
  Word block;  // w^1 v^1 ... w^m v^m
  Route route = Route::ShortestPath;
  std::size_t least_period = 0;
  bool admissible = false;  // every rotation r satisfies r^∞ in the shift
};

const char* to_string(GlueResult::Route r) noexcept;

struct GlueOptions {
  std::size_t max_search_gap = 12;
};

/// Connectors from shortest paths to V_0 padded by the V_0 self-loop; when
/// V_0 is unreachable and b is eventually periodic, a search for the least
/// common connector length.
GlueResult glue(const ShiftSpec& spec, const GraphSlice& g, std::size_t L, std::size_t M,
                const std::vector<Word>& words, GlueOptions opts = {});

/// Same-length connector search alone.
std::optional<GlueResult> glue_search(const ShiftSpec& spec, const GraphSlice& g, const std::vector<Word>& words,
                                      std::size_t max_gap);

std::string glue_to_json(const GlueResult& r);

/// Distinct random words of G^(L)(M) from random walks of length <= max_len.
std::vector<Word> sample_gm_words(const GraphSlice& g, std::size_t L, std::size_t M, std::size_t count,
                                  std::size_t max_len, std::uint64_t seed);

}  // namespace negbeta
