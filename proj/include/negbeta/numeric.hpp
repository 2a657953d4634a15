#pragma once

#include "negbeta/arith.hpp"
#include "negbeta/word.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace negbeta {

/// A base β > 1, either an exact rational or a dyadic enclosure that can be
/// recomputed at any precision from its source.
class BetaValue {
 public:
  using Source = std::function<Interval(int bits)>;

  static BetaValue exact(Rational beta);
  static BetaValue enclosure(std::string label, Source source, int bits);
  /// Dyadic enclosure of a rational; useful to cross-check interval mode.
  static BetaValue rational_enclosure(const Rational& beta, int bits);
  /// Largest root of x^2 = p x + q.
  static BetaValue quadratic(const Integer& p, const Integer& q, int bits);
  static BetaValue golden(int bits) { return quadratic(1, 1, bits); }

  bool is_exact() const { return !source_; }
  const Interval& value() const { return value_; }
  /// 0 in exact mode.
  int precision_bits() const { return bits_; }
  const std::string& label() const { return label_; }
  const std::optional<std::pair<Integer, Integer>>& quadratic_coefficients() const { return quadratic_; }

  /// Same number enclosed at a different precision. Exact values return themselves.
  BetaValue refined(int bits) const;

  /// ⌊β⌋; throws AmbiguousDigit when an enclosure straddles an integer.
  Integer floor_beta() const;
  /// Largest digit ⌊β⌋+1.
  Digit max_digit() const;

 private:
  BetaValue() = default;

  Interval value_;
  int bits_ = 0;
  Source source_;
  std::string label_;
  std::optional<std::pair<Integer, Integer>> quadratic_;
};

/// Points of [0,1]; exact when lo == hi.
using UnitPoint = Interval;

struct StepResult {
  Digit digit;
  UnitPoint next;
};

/// One application of T(x) = -βx + ⌊βx⌋ + 1 on (0,1]; the digit is ⌊βx⌋ + 1.
StepResult step(const BetaValue& beta, const UnitPoint& x);

struct ExtendedStepResult {
  std::optional<Digit> digit;  // empty for x = 0
  UnitPoint next;
};

/// The extension to [0,1] sending 0 to 1.
ExtendedStepResult step_extended(const BetaValue& beta, const UnitPoint& x);

struct CertifiedDigits {
  enum class Status { Complete, PrecisionExhausted };

  Word digits;
  std::size_t certified = 0;
  Status status = Status::Complete;
  std::size_t exhausted_at = 0;  // index of the first uncertifiable digit
  int precision_bits = 0;        // precision that produced the result (0 = exact)
};

struct ExpandOptions {
  int max_precision_bits = 8192;
};

/// First n digits of d_{-β}(x). Interval inputs double their precision on an
/// ambiguous digit until the cap, then report PrecisionExhausted.
CertifiedDigits expand(const BetaValue& beta, const UnitPoint& x, std::size_t n, ExpandOptions opts = {});

struct D1Classification {
  enum class Kind { PeriodicOdd, PeriodicEven, EventuallyPeriodic, NoCycleDetected };

  Kind kind = Kind::NoCycleDetected;
  std::size_t preperiod = 0;
  std::size_t period = 0;
  std::size_t horizon = 0;
  Word preperiod_digits;
  Word period_digits;
};

const char* to_string(D1Classification::Kind k) noexcept;

/// Detects an exact repetition in the orbit of 1. Rationals and quadratic
/// integers are tracked exactly; other enclosures never certify a cycle and
/// report NoCycleDetected after certifying `horizon` digits.
D1Classification classify_d1(const BetaValue& beta, std::size_t horizon);

enum class GoldenSide { AtOrAbove, Below };

const char* to_string(GoldenSide s) noexcept;

/// Decides d_{-β}(1) ≺ 21^∞ (i.e. β below the golden ratio) from a certified
/// digit prefix, falling back to exact algebra when the prefix ties.
GoldenSide golden_test(const BetaValue& beta, std::size_t prefix_len = 64);

/// Σ -s_i / (-β)^i. A finite word yields the partial sum widened by the tail
/// bound (⌊β⌋+1) / (β^m (β - 1)).
Interval psi_value(const BetaValue& beta, WordView prefix);
/// Exact closed form for an eventually periodic digit sequence.
Interval psi_value(const BetaValue& beta, const EvPeriodicSeq& seq);

/// Interval of the unit line with explicit endpoint closure.
struct Span {
  Rational lo;
  Rational hi;
  bool lo_closed = false;
  bool hi_closed = false;

  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
  friend bool operator==(const Span&, const Span&) = default;
};

using SpanSet = std::vector<Span>;

/// Sorted, merged representation.
SpanSet normalize(SpanSet spans);

/// Image of a union of spans under the extended transformation (exact β only).
SpanSet image_extended(const BetaValue& beta, const SpanSet& spans);

bool is_full_unit(const SpanSet& spans);

/// Least n <= nmax with T^n(I) = (0,1]; nullopt is a search bound, not a refutation.
std::optional<std::size_t> leo_witness(const BetaValue& beta, const Span& interval, std::size_t nmax);

}  // namespace negbeta
