#include "negbeta/language.hpp"

#include "negbeta/error.hpp"
#include "negbeta/order.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace negbeta {

BoundSequence::BoundSequence(EvPeriodicSeq seq) : data_(std::move(seq)) {}

BoundSequence::BoundSequence(Word prefix) : data_(std::move(prefix)) {
  if (std::get<Word>(data_).empty()) throw Error(ErrorKind::InvalidInput, "empty bound prefix");
}

std::optional<std::size_t> BoundSequence::known_length() const {
  if (const auto* w = std::get_if<Word>(&data_)) return w->size();
  return std::nullopt;
}

bool BoundSequence::knows(std::size_t i) const {
  const auto len = known_length();
  return !len || i < *len;
}

Digit BoundSequence::at(std::size_t i) const {
  if (const auto* s = periodic()) return s->at(i);
  const auto& w = std::get<Word>(data_);
  if (i >= w.size())
    throw Error(ErrorKind::PrefixTooShort,
                "bound prefix has " + std::to_string(w.size()) + " symbols, index " + std::to_string(i) + " needed");
  return w[i];
}

Word BoundSequence::prefix(std::size_t n) const {
  if (const auto* s = periodic()) return s->prefix(n);
  const auto& w = std::get<Word>(data_);
  if (n > w.size())
    throw Error(ErrorKind::PrefixTooShort,
                "bound prefix has " + std::to_string(w.size()) + " symbols, " + std::to_string(n) + " needed");
  return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
}

Word BoundSequence::available(std::size_t n) const {
  if (const auto* s = periodic()) return s->prefix(n);
  return prefix(std::min(n, std::get<Word>(data_).size()));
}

std::string BoundSequence::str() const {
  if (const auto* s = periodic()) return s->str();
  return format_word(std::get<Word>(data_)) + "...";
}

ShiftSpec ShiftSpec::one_sided(BoundSequence upper, std::string origin) {
  const Digit b = upper.first();
  if (b < 1) throw Error(ErrorKind::InvalidInput, "digits must be >= 1");
  if (const auto* s = upper.periodic()) {
    if (auto m = is_alt_shift_maximal(*s); !m.yes())
      throw Error(ErrorKind::InvalidInput,
                  s->str() + " is not alternately shift maximal (shift " + std::to_string(m.witness) + ")");
  } else {
    const Word w = upper.prefix(*upper.known_length());
    if (auto m = is_alt_shift_maximal(w); m.status == ShiftMaximality::Status::No)
      throw Error(ErrorKind::InvalidInput,
                  format_word(w) + " is not alternately shift maximal (shift " + std::to_string(m.witness) + ")");
  }
  return ShiftSpec(b, std::move(upper), std::nullopt, std::move(origin));
}

ShiftSpec ShiftSpec::two_sided(EvPeriodicSeq upper, std::string origin) {
  if (!upper.purely_periodic() || upper.period().size() % 2 == 0)
    throw Error(ErrorKind::NotOddPeriodic, upper.str() + " is not periodic with odd period");
  if (auto m = is_alt_shift_maximal(upper); !m.yes())
    throw Error(ErrorKind::InvalidInput, upper.str() + " is not alternately shift maximal");
  const Word& p = upper.period();
  if (p.back() < 2) throw Error(ErrorKind::InvalidInput, "last digit of the period must be >= 2");
  Word low{1};
  low.insert(low.end(), p.begin(), p.end() - 1);
  low.push_back(p.back() - 1);
  const Digit b = upper.at(0);
  return ShiftSpec(b, BoundSequence(std::move(upper)), EvPeriodicSeq::periodic(std::move(low)), std::move(origin));
}

ShiftSpec ShiftSpec::from_beta(const BetaValue& beta, std::size_t horizon) {
  const auto cls = classify_d1(beta, horizon);
  using K = D1Classification::Kind;
  switch (cls.kind) {
    case K::PeriodicOdd: return two_sided(EvPeriodicSeq::periodic(cls.period_digits), beta.label());
    case K::PeriodicEven:
    case K::EventuallyPeriodic:
      return one_sided(BoundSequence(EvPeriodicSeq(cls.preperiod_digits, cls.period_digits)), beta.label());
    case K::NoCycleDetected: break;
  }
  auto d = expand(beta, Interval(Rational(1)), horizon);
  if (d.certified == 0) throw Error(ErrorKind::PrecisionExhausted, "no digit of d(1) could be certified");
  d.digits.resize(d.certified);
  return one_sided(BoundSequence(std::move(d.digits)), beta.label());
}

std::string ShiftSpec::describe() const {
  std::string s = "upper=" + upper_.str();
  if (lower_) s += " lower=" + lower_->str();
  if (!origin_.empty()) s += " beta=" + origin_;
  return s;
}

BoundMatcher::BoundMatcher(Word pattern) : pattern_(std::move(pattern)), border_(pattern_.size() + 1, 0) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < pattern_.size(); ++i) {
    while (k > 0 && pattern_[i] != pattern_[k]) k = border_[k];
    if (pattern_[i] == pattern_[k]) ++k;
    border_[i + 1] = k;
  }
}

std::size_t BoundMatcher::next(std::size_t state, Digit a) const {
  while (true) {
    if (state >= pattern_.size())
      throw Error(ErrorKind::PrefixTooShort, "matcher needs symbol " + std::to_string(state + 1) + " of the bound");
    if (pattern_[state] == a) return state + 1;
    if (state == 0) return 0;
    state = border_[state];
  }
}

const char* to_string(Admissibility a) noexcept {
  switch (a) {
    case Admissibility::Yes: return "Yes";
    case Admissibility::No: return "No";
    case Admissibility::Undetermined: return "Undetermined";
  }
  return "?";
}

namespace {

Word matcher_pattern(const BoundSequence& seq, std::size_t max_len) { return seq.available(max_len + 1); }

}  // namespace

AdmissibilityChecker::AdmissibilityChecker(const ShiftSpec& spec, std::size_t max_len)
    : alphabet_(spec.alphabet()),
      upper_(matcher_pattern(spec.upper(), max_len)),
      upper_exact_(spec.upper().is_exact()) {
  if (spec.lower()) lower_.emplace(spec.lower()->prefix(max_len + 1));
}

AdmissibilityChecker::Verdict AdmissibilityChecker::advance(State& state, Digit a) const {
  if (a < 1 || a > alphabet_) return Verdict::Reject;
  bool undetermined = false;
  std::optional<std::size_t> next_upper;
  for (std::size_t j = state.upper;; j = upper_.border(j)) {
    if (j >= upper_.size()) {
      if (upper_exact_) throw Error(ErrorKind::PrefixTooShort, "checker used beyond its configured length");
      undetermined = true;
    } else {
      const Digit b = upper_.pattern()[j];
      if (digit_order(j + 1, a, b) == Order::GT) return Verdict::Reject;
      if (b == a && !next_upper) next_upper = j + 1;
    }
    if (j == 0) break;
  }
  std::optional<std::size_t> next_lower;
  if (lower_) {
    for (std::size_t j = state.lower;; j = lower_->border(j)) {
      if (j >= lower_->size()) throw Error(ErrorKind::PrefixTooShort, "checker used beyond its configured length");
      const Digit c = lower_->pattern()[j];
      if (digit_order(j + 1, a, c) == Order::LT) return Verdict::Reject;
      if (c == a && !next_lower) next_lower = j + 1;
      if (j == 0) break;
    }
  }
  if (undetermined) return Verdict::Undetermined;
  state.upper = static_cast<std::uint32_t>(next_upper.value_or(0));
  state.lower = static_cast<std::uint32_t>(next_lower.value_or(0));
  return Verdict::Ok;
}

Admissibility AdmissibilityChecker::check(WordView w) const {
  State s;
  bool undetermined = false;
  for (Digit a : w) {
    switch (advance(s, a)) {
      case Verdict::Reject: return Admissibility::No;
      case Verdict::Undetermined:
        // Longer suffixes cannot be followed, but shorter ones may still reject.
        undetermined = true;
        break;
      case Verdict::Ok: break;
    }
    if (undetermined) break;
  }
  if (!undetermined) return Admissibility::Yes;
  // Fall back to an explicit scan of every suffix for a decided violation.
  const Word up = upper_.pattern();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto suffix = w.subspan(i);
    const std::size_t len = std::min(suffix.size(), up.size());
    for (std::size_t k = 0; k < len; ++k) {
      if (suffix[k] != up[k]) {
        if (digit_order(k + 1, suffix[k], up[k]) == Order::GT) return Admissibility::No;
        break;
      }
    }
  }
  return Admissibility::Undetermined;
}

Admissibility is_admissible(const ShiftSpec& spec, WordView w) {
  return AdmissibilityChecker(spec, w.size()).check(w);
}

namespace {

template <class Visit>
void dfs_words(const AdmissibilityChecker& chk, std::size_t n, Word& cur, AdmissibilityChecker::State st,
               Visit&& visit) {
  if (cur.size() == n) {
    visit(cur);
    return;
  }
  for (Digit a = 1; a <= chk.alphabet(); ++a) {
    auto next = st;
    switch (chk.advance(next, a)) {
      case AdmissibilityChecker::Verdict::Reject: continue;
      case AdmissibilityChecker::Verdict::Undetermined:
        throw Error(ErrorKind::SpecPrefixTooShort,
                    "bound prefix too short to decide words of length " + std::to_string(n));
      case AdmissibilityChecker::Verdict::Ok: break;
    }
    cur.push_back(a);
    dfs_words(chk, n, cur, next, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_words(const ShiftSpec& spec, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "word length must be >= 1");
  AdmissibilityChecker chk(spec, n);
  std::vector<Word> out;
  Word cur;
  dfs_words(chk, n, cur, {}, [&](const Word& w) { out.push_back(w); });
  return out;
}

bool periodic_admissible(const ShiftSpec& spec, WordView block) {
  if (block.empty()) throw Error(ErrorKind::InvalidInput, "empty period block");
  const std::size_t n = block.size();
  Word rot(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) rot[i] = block[(s + i) % n];
    const auto seq = EvPeriodicSeq::periodic(rot);
    if (const auto* up = spec.upper().periodic()) {
      if (alt_cmp_seq(seq, *up) == Order::GT) return false;
    } else {
      const Word up_prefix = spec.upper().prefix(*spec.upper().known_length());
      Word mine(up_prefix.size());
      for (std::size_t i = 0; i < mine.size(); ++i) mine[i] = rot[i % n];
      switch (alt_cmp_prefix(mine, up_prefix)) {
        case PrefixOrder::GT: return false;
        case PrefixOrder::LT: break;
        case PrefixOrder::EqAtPrefix:
          throw Error(ErrorKind::HorizonExhausted,
                      "periodic point (" + format_word(rot) + ")^inf ties with the bound prefix");
      }
    }
    if (spec.lower() && alt_cmp_seq(seq, *spec.lower()) == Order::LT) return false;
  }
  return true;
}

std::vector<Word> per_points(const ShiftSpec& spec, std::size_t n) {
  std::vector<Word> out;
  for (auto& w : enumerate_words(spec, n))
    if (periodic_admissible(spec, w)) out.push_back(std::move(w));
  return out;
}

Integer per_count(const ShiftSpec& spec, std::size_t n) { return Integer(per_points(spec, n).size()); }

CountTable count_words(const ShiftSpec& spec, std::size_t nmax, std::optional<std::size_t> per_nmax) {
  if (nmax == 0) throw Error(ErrorKind::InvalidInput, "nmax must be >= 1");
  const std::size_t pmax = per_nmax.value_or(nmax);
  AdmissibilityChecker chk(spec, nmax);
  using State = AdmissibilityChecker::State;
  std::map<State, Integer> layer{{State{}, Integer(1)}};
  CountTable table;
  for (std::size_t n = 1; n <= nmax; ++n) {
    std::map<State, Integer> next;
    for (const auto& [st, count] : layer) {
      for (Digit a = 1; a <= chk.alphabet(); ++a) {
        State s = st;
        const auto v = chk.advance(s, a);
        if (v == AdmissibilityChecker::Verdict::Reject) continue;
        if (v == AdmissibilityChecker::Verdict::Undetermined)
          throw Error(ErrorKind::SpecPrefixTooShort,
                      "bound prefix too short to count words of length " + std::to_string(n));
        next[s] += count;
      }
    }
    layer = std::move(next);
    CountRow row;
    row.n = n;
    for (const auto& [st, count] : layer) row.words += count;
    if (n <= pmax) {
      try {
        row.periodic = per_count(spec, n);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::HorizonExhausted && e.kind() != ErrorKind::SpecPrefixTooShort) throw;
        row.exact = false;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<EntropyRow> entropy_profile(const CountTable& counts) {
  std::vector<EntropyRow> out;
  for (const auto& r : counts.rows) {
    EntropyRow e;
    e.n = r.n;
    e.words = r.words > 0 ? log_of(r.words) / static_cast<double>(r.n) : 0.0;
    if (r.periodic && *r.periodic > 0) e.periodic = log_of(*r.periodic) / static_cast<double>(r.n);
    out.push_back(e);
  }
  return out;
}

namespace {

bool fill_constrained(const AdmissibilityChecker& chk, const std::vector<std::optional<Digit>>& slots, std::size_t i,
                      AdmissibilityChecker::State st) {
  if (i == slots.size()) return true;
  const Digit lo = slots[i] ? *slots[i] : 1;
  const Digit hi = slots[i] ? *slots[i] : chk.alphabet();
  for (Digit a = lo; a <= hi; ++a) {
    auto next = st;
    const auto v = chk.advance(next, a);
    if (v == AdmissibilityChecker::Verdict::Reject) continue;
    if (v == AdmissibilityChecker::Verdict::Undetermined)
      throw Error(ErrorKind::SpecPrefixTooShort, "bound prefix too short for the mixing search");
    if (fill_constrained(chk, slots, i + 1, next)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::size_t> mixing_witness(const ShiftSpec& spec, WordView v, WordView w, std::size_t nmax) {
  if (is_admissible(spec, v) != Admissibility::Yes || is_admissible(spec, w) != Admissibility::Yes)
    throw Error(ErrorKind::InvalidInput, "mixing witness needs admissible words");
  for (std::size_t n = 0; n <= nmax; ++n) {
    const std::size_t len = std::max(v.size(), n + w.size());
    std::vector<std::optional<Digit>> slots(len);
    for (std::size_t i = 0; i < v.size(); ++i) slots[i] = v[i];
    bool clash = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto& s = slots[n + i];
      if (s && *s != w[i]) clash = true;
      s = w[i];
    }
    if (clash) continue;
    AdmissibilityChecker chk(spec, len);
    if (fill_constrained(chk, slots, 0, {})) return n;
  }
  return std::nullopt;
}

std::string count_table_csv(const CountTable& counts) {
  std::ostringstream os;
  os << "n,count_L,count_Per,exact\n";
  for (const auto& r : counts.rows)
    os << r.n << ',' << r.words.str() << ',' << (r.periodic ? r.periodic->str() : "") << ','
       << (r.exact ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace negbeta
