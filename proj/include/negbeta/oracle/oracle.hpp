#pragma once

// Brute-force reference implementations used by the test suites. Nothing here
// calls into the optimized modules beyond reading the raw bound sequences.

#include "negbeta/language.hpp"
#include "negbeta/word.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace negbeta::oracle {

struct OracleConfig {
  std::size_t max_depth = 16;
  std::size_t extension = 20;
  std::uint64_t seed = 20240607;
};

/// Literal per-suffix comparison against the bound prefixes.
Admissibility naive_admissible(const ShiftSpec& spec, WordView w);

/// Longest suffix of w equal to a prefix of b, by direct scan.
std::size_t naive_k(WordView b, WordView w);

/// Every word of A^n that passes naive_admissible (lexicographic order).
std::vector<Word> naive_words(const ShiftSpec& spec, std::size_t n);

/// Every block of A^n whose rotations all repeat to points of the shift.
std::vector<Word> naive_per(const ShiftSpec& spec, std::size_t n);

/// {u in A^depth : wu admissible}.
std::set<Word> naive_followers(const ShiftSpec& spec, WordView w, std::size_t depth);

/// Does w extend by `extension` further symbols to an admissible word?
bool naive_extendable(const ShiftSpec& spec, WordView w, std::size_t extension);

/// x in C^(L): x starts with b_L and every vertex k(b_1..b_{L-1} x_1..x_j), j >= 1, is >= L.
bool naive_in_c(const ShiftSpec& spec, std::size_t L, WordView x);

/// Split at the last prefix whose vertex is below L.
std::pair<Word, Word> naive_split(const ShiftSpec& spec, std::size_t L, WordView w);

}  // namespace negbeta::oracle
