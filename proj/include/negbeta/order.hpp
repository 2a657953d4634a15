#pragma once

#include "negbeta/word.hpp"

#include <cstddef>

namespace negbeta {

// Alternating order: x ≺ y when, at the first index i (1-based) where they
// differ, (-1)^i (y_i - x_i) < 0. At odd positions the larger digit wins, at
// even positions the smaller digit wins.

enum class Order { LT, EQ, GT };

/// Result of comparing a finite word against the truncation of a longer
/// sequence. EqAtPrefix means the word agrees with the truncation.
enum class PrefixOrder { LT, EqAtPrefix, GT };

const char* to_string(Order o) noexcept;
const char* to_string(PrefixOrder o) noexcept;

/// Order of digit x against y when they are the first difference at 1-based `position`.
Order digit_order(std::size_t position, Digit x, Digit y) noexcept;

/// Throws LengthMismatch when |u| != |v|.
Order alt_cmp(WordView u, WordView v);

/// Exact: a difference, if any, occurs before max(preperiods) + lcm(periods).
Order alt_cmp_seq(const EvPeriodicSeq& s, const EvPeriodicSeq& t);

/// u against the first |u| symbols of s.
PrefixOrder alt_cmp_prefix(WordView u, const EvPeriodicSeq& s);

/// u against v truncated to |u|; requires |v| >= |u|.
PrefixOrder alt_cmp_prefix(WordView u, WordView v);

struct ShiftMaximality {
  enum class Status { Yes, No, UndecidedAtPrefix };
  Status status = Status::Yes;
  std::size_t witness = 0;  // shift k with σ^k(b) ≻ b when status == No

  bool yes() const { return status == Status::Yes; }
};

const char* to_string(ShiftMaximality::Status s) noexcept;

/// b_1 is the largest digit and σ^k(b) ⪯ b for every k >= 1.
ShiftMaximality is_alt_shift_maximal(const EvPeriodicSeq& b);

/// Prefix form: returns No on a decided violation, Yes only when every shift
/// comparison is decided strictly inside the prefix.
ShiftMaximality is_alt_shift_maximal(WordView prefix);

}  // namespace negbeta
