#pragma once

#include "negbeta/language.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace negbeta {

/// The zero-entropy target {1^∞} ∪ {1^k 2^∞ : k >= 1} ∪ {2^∞}.
std::vector<Word> x_language(std::size_t n);
bool in_x_language(WordView w);

class SlidingBlockCode {
 public:
  enum class Kind { Case1, Case2, Custom };

  /// Φ(w) = 1 iff w = 1^window.
  static SlidingBlockCode case1(std::size_t k);
  /// Φ(w) = 2 iff w is one of the cyclic b-blocks of length 3n.
  static SlidingBlockCode case2(const Word& period);
  static SlidingBlockCode custom(std::size_t window, std::function<Digit(WordView)> phi);

  Kind kind() const { return kind_; }
  std::size_t window() const { return window_; }
  /// k for Case 1, the period n for Case 2.
  std::size_t parameter() const { return parameter_; }
  const std::set<Word>& detectors() const { return detectors_; }
  Digit phi(WordView block) const;
  std::string describe() const;

 private:
  SlidingBlockCode() = default;

  Kind kind_ = Kind::Custom;
  std::size_t window_ = 0;
  std::size_t parameter_ = 0;
  std::set<Word> detectors_;
  std::function<Digit(WordView)> custom_;
};

/// Needs d ≺ 21^∞ and d starting with 2 1^k 2, k even, k >= 2.
SlidingBlockCode build_case1_code(const ShiftSpec& spec);
/// Needs the two-sided spec of a periodic d with odd period and b_n != 1.
SlidingBlockCode build_case2_code(const ShiftSpec& spec);
/// Case 2 for two-sided specs, Case 1 otherwise; PreconditionFailed if neither applies.
SlidingBlockCode build_code(const ShiftSpec& spec);

/// Sliding-window image, of length |w| - window + 1.
Word apply_code(const SlidingBlockCode& code, WordView w);

enum class ClaimStatus { Pass, Fail, Inconclusive, Skipped };
const char* to_string(ClaimStatus s) noexcept;

struct ClaimResult {
  std::string id;
  std::size_t depth = 0;
  ClaimStatus status = ClaimStatus::Skipped;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;
  std::string detail;
};

struct SurjectivityWitness {
  std::size_t k = 0;  // target 1^k 2^∞; k = SIZE_MAX stands for 1^∞
  Word target;
  std::optional<Word> preimage;
};

struct FactorReport {
  std::string code;
  std::size_t depth = 0;
  std::vector<ClaimResult> claims;
  std::vector<SurjectivityWitness> witnesses;
  double x_entropy_estimate = 0;
  bool passed() const;
  const ClaimResult* claim(const std::string& id) const;
};

FactorReport verify_factor(const SlidingBlockCode& code, const ShiftSpec& spec, std::size_t depth);

/// Words w != 1^|w| (admissible, |w| <= max_len) with w 1^n still admissible.
struct OnesSuffixResult {
  std::size_t checked = 0;
  std::vector<Word> exceptions;
};
OnesSuffixResult check_ones_suffix_claim(const ShiftSpec& spec, std::size_t n, std::size_t max_len);

/// Admissible words of length len starting with `block`.
std::vector<Word> admissible_extensions(const ShiftSpec& spec, WordView block, std::size_t len);

std::string factor_report_json(const FactorReport& r);

}  // namespace negbeta
