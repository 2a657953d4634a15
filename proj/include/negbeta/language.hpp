#pragma once

#include "negbeta/arith.hpp"
#include "negbeta/numeric.hpp"
#include "negbeta/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace negbeta {

/// Upper (or lower) bound sequence: either exactly eventually periodic or a
/// finite certified prefix of an unknown infinite sequence.
class BoundSequence {
 public:
  BoundSequence(EvPeriodicSeq seq);  // NOLINT
  explicit BoundSequence(Word prefix);

  bool is_exact() const { return std::holds_alternative<EvPeriodicSeq>(data_); }
  const EvPeriodicSeq* periodic() const { return std::get_if<EvPeriodicSeq>(&data_); }
  /// nullopt for exact sequences.
  std::optional<std::size_t> known_length() const;
  bool knows(std::size_t i) const;
  /// 0-based; throws PrefixTooShort beyond a finite prefix.
  Digit at(std::size_t i) const;
  Word prefix(std::size_t n) const;
  /// Exact sequences: n symbols; prefixes: min(n, known length) symbols.
  Word available(std::size_t n) const;
  Digit first() const { return at(0); }
  std::string str() const;

 private:
  std::variant<EvPeriodicSeq, Word> data_;
};

/// Defining data of Σ: alphabet {1..b}, upper bound b = d_{-β}(1), and the
/// lower bound (1 b_1..b_{n-1} (b_n - 1))^∞ in the odd-period case.
class ShiftSpec {
 public:
  /// Σ_b for an alternately shift maximal b (UndecidedAtPrefix is tolerated for prefixes).
  static ShiftSpec one_sided(BoundSequence upper, std::string origin = {});
  /// Odd-period case: `upper` must be purely periodic with odd period and b_n >= 2.
  static ShiftSpec two_sided(EvPeriodicSeq upper, std::string origin = {});
  /// Classifies d_{-β}(1) within `horizon` steps and builds the matching spec;
  /// without a detected cycle the certified prefix of length `horizon` is used.
  static ShiftSpec from_beta(const BetaValue& beta, std::size_t horizon);

  int alphabet() const { return alphabet_; }
  const BoundSequence& upper() const { return upper_; }
  const std::optional<EvPeriodicSeq>& lower() const { return lower_; }
  bool two_sided() const { return lower_.has_value(); }
  const std::string& origin() const { return origin_; }
  std::string describe() const;

 private:
  ShiftSpec(int alphabet, BoundSequence upper, std::optional<EvPeriodicSeq> lower, std::string origin)
      : alphabet_(alphabet), upper_(std::move(upper)), lower_(std::move(lower)), origin_(std::move(origin)) {}

  int alphabet_;
  BoundSequence upper_;
  std::optional<EvPeriodicSeq> lower_;
  std::string origin_;
};

/// Failure-function automaton over a finite pattern. State k means the
/// longest suffix of the input read so far that equals pattern[0..k).
class BoundMatcher {
 public:
  explicit BoundMatcher(Word pattern);

  std::size_t size() const { return pattern_.size(); }
  const Word& pattern() const { return pattern_; }
  /// Longest proper border of pattern[0..k), for 1 <= k <= size().
  std::size_t border(std::size_t k) const { return border_[k]; }
  /// Throws PrefixTooShort when the answer could exceed the pattern.
  std::size_t next(std::size_t state, Digit a) const;

 private:
  Word pattern_;
  std::vector<std::size_t> border_;
};

enum class Admissibility { Yes, No, Undetermined };

const char* to_string(Admissibility a) noexcept;

/// Incremental membership test. Only suffixes that still tie with a prefix of
/// the bound can be decided by the next symbol, and those are exactly the
/// border chain of the matcher state.
class AdmissibilityChecker {
 public:
  struct State {
    std::uint32_t upper = 0;
    std::uint32_t lower = 0;
    friend bool operator==(const State&, const State&) = default;
    friend auto operator<=>(const State&, const State&) = default;
  };

  enum class Verdict { Ok, Reject, Undetermined };

  /// Good for words up to `max_len` symbols.
  AdmissibilityChecker(const ShiftSpec& spec, std::size_t max_len);

  Verdict advance(State& state, Digit a) const;
  Admissibility check(WordView w) const;
  int alphabet() const { return alphabet_; }

 private:
  int alphabet_;
  BoundMatcher upper_;
  bool upper_exact_;
  std::optional<BoundMatcher> lower_;
};

Admissibility is_admissible(const ShiftSpec& spec, WordView w);

/// Admissible words of length n in standard lexicographic order.
/// Throws SpecPrefixTooShort when a prefix spec cannot decide length n.
std::vector<Word> enumerate_words(const ShiftSpec& spec, std::size_t n);

struct CountRow {
  std::size_t n = 0;
  Integer words;
  std::optional<Integer> periodic;
  bool exact = true;
};

struct CountTable {
  std::vector<CountRow> rows;
};

/// #L_n for n = 1..nmax and #Per(n) for n = 1..per_nmax (default nmax).
CountTable count_words(const ShiftSpec& spec, std::size_t nmax, std::optional<std::size_t> per_nmax = {});

/// Period-n blocks w with every rotation r satisfying lower ⪯ r^∞ ⪯ upper.
std::vector<Word> per_points(const ShiftSpec& spec, std::size_t n);
Integer per_count(const ShiftSpec& spec, std::size_t n);

/// Is w^∞ in the shift? Exact for eventually periodic bounds; throws
/// HorizonExhausted when a prefix bound ties to its end.
bool periodic_admissible(const ShiftSpec& spec, WordView block);

struct EntropyRow {
  std::size_t n = 0;
  double words = 0;                 // (1/n) log #L_n
  std::optional<double> periodic;   // (1/n) log #Per(n), when positive
};

std::vector<EntropyRow> entropy_profile(const CountTable& counts);

/// Least n <= nmax such that some admissible word starts with v and has w at
/// offset n (positions n+1..n+|w|).
std::optional<std::size_t> mixing_witness(const ShiftSpec& spec, WordView v, WordView w, std::size_t nmax);

std::string count_table_csv(const CountTable& counts);

}  // namespace negbeta
