#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace negbeta {

using Digit = int;
using Word = std::vector<Digit>;
using WordView = std::span<const Digit>;

/// Digits concatenated ("2112"), or comma separated when any digit exceeds 9.
std::string format_word(WordView w);

/// Parses "2112", "2 1 1 2" or "10,11,3". A single run of decimal digits is
/// read one digit per symbol.
Word parse_word(std::string_view text);

Word repeat(WordView w, std::size_t times);
Word constant_word(Digit d, std::size_t length);
Word concat(WordView a, WordView b);
bool is_constant(WordView w, Digit d);

/// Eventually periodic sequence preperiod·period^∞, stored canonically:
/// the period is primitive and the preperiod cannot be shortened by rotating
/// the period. Two sequences are equal iff their canonical forms are equal.
class EvPeriodicSeq {
 public:
  EvPeriodicSeq(Word preperiod, Word period);

  static EvPeriodicSeq periodic(Word period) { return EvPeriodicSeq({}, std::move(period)); }

  const Word& preperiod() const { return preperiod_; }
  const Word& period() const { return period_; }
  bool purely_periodic() const { return preperiod_.empty(); }

  /// 0-based symbol access.
  Digit at(std::size_t i) const;
  Word prefix(std::size_t n) const;
  Digit max_digit() const;

  /// "PRE|PER" notation, e.g. "2|1" for 21^∞.
  std::string str() const;

  friend bool operator==(const EvPeriodicSeq&, const EvPeriodicSeq&) = default;

 private:
  Word preperiod_;
  Word period_;
};

}  // namespace negbeta
