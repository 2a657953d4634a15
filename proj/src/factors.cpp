#include "negbeta/factors.hpp"

#include "negbeta/error.hpp"
#include "negbeta/order.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace negbeta {

std::vector<Word> x_language(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
  std::vector<Word> out;
  for (std::size_t i = n + 1; i-- > 0;) {
    Word w(n, 2);
    std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i), 1);
    out.push_back(std::move(w));
  }
  return out;
}

bool in_x_language(WordView w) {
  bool seen_two = false;
  for (Digit d : w) {
    if (d == 2)
      seen_two = true;
    else if (d != 1 || seen_two)
      return false;
  }
  return true;
}

SlidingBlockCode SlidingBlockCode::case1(std::size_t k) {
  SlidingBlockCode c;
  c.kind_ = Kind::Case1;
  c.parameter_ = k;
  c.window_ = k + 1;
  return c;
}

SlidingBlockCode SlidingBlockCode::case2(const Word& period) {
  if (period.empty()) throw Error(ErrorKind::InvalidInput, "empty period");
  SlidingBlockCode c;
  c.kind_ = Kind::Case2;
  const std::size_t n = period.size();
  c.parameter_ = n;
  c.window_ = 3 * n;
  for (std::size_t i = 0; i < n; ++i) {
    Word block(3 * n);
    for (std::size_t j = 0; j < 3 * n; ++j) block[j] = period[(i + j) % n];
    c.detectors_.insert(std::move(block));
  }
  return c;
}

SlidingBlockCode SlidingBlockCode::custom(std::size_t window, std::function<Digit(WordView)> phi) {
  if (window == 0) throw Error(ErrorKind::InvalidInput, "window must be >= 1");
  SlidingBlockCode c;
  c.window_ = window;
  c.custom_ = std::move(phi);
  return c;
}

Digit SlidingBlockCode::phi(WordView block) const {
  switch (kind_) {
    case Kind::Case1: return is_constant(block, 1) ? 1 : 2;
    case Kind::Case2: return detectors_.count(Word(block.begin(), block.end())) ? 2 : 1;
    case Kind::Custom: return custom_(block);
  }
  return 0;
}

std::string SlidingBlockCode::describe() const {
  switch (kind_) {
    case Kind::Case1: return "case1(k=" + std::to_string(parameter_) + ",window=" + std::to_string(window_) + ")";
    case Kind::Case2: return "case2(n=" + std::to_string(parameter_) + ",window=" + std::to_string(window_) + ")";
    case Kind::Custom: return "custom(window=" + std::to_string(window_) + ")";
  }
  return "?";
}

SlidingBlockCode build_case1_code(const ShiftSpec& spec) {
  const EvPeriodicSeq golden({2}, {1});
  const auto& up = spec.upper();
  bool below = false;
  if (const auto* s = up.periodic()) {
    below = alt_cmp_seq(*s, golden) == Order::LT;
  } else {
    switch (alt_cmp_prefix(up.prefix(*up.known_length()), golden)) {
      case PrefixOrder::LT: below = true; break;
      case PrefixOrder::GT: break;
      case PrefixOrder::EqAtPrefix:
        throw Error(ErrorKind::Undecidable, "bound prefix ties with 21^inf");
    }
  }
  if (!below) throw Error(ErrorKind::PreconditionFailed, "d = " + up.str() + " is not below 21^inf");
  if (up.at(0) != 2) throw Error(ErrorKind::PatternMismatch, "d does not start with 2");
  std::size_t k = 0;
  while (up.at(k + 1) == 1) ++k;
  if (up.at(k + 1) != 2) throw Error(ErrorKind::PatternMismatch, "d is not of the form 2 1^k 2");
  if (k % 2 == 1) throw Error(ErrorKind::OddK, "d starts with 2 1^k 2 for odd k=" + std::to_string(k));
  if (k < 2) throw Error(ErrorKind::PreconditionFailed, "d starts with 2 1^k 2 for k=" + std::to_string(k) + " < 2");
  return SlidingBlockCode::case1(k);
}

SlidingBlockCode build_case2_code(const ShiftSpec& spec) {
  const auto* up = spec.upper().periodic();
  if (!spec.two_sided() || !up || !up->purely_periodic() || up->period().size() % 2 == 0)
    throw Error(ErrorKind::NotOddPeriodic, "d = " + spec.upper().str() + " is not periodic with odd period");
  if (up->period().back() == 1) throw Error(ErrorKind::PreconditionFailed, "b_n = 1");
  return SlidingBlockCode::case2(up->period());
}

SlidingBlockCode build_code(const ShiftSpec& spec) {
  if (spec.two_sided()) return build_case2_code(spec);
  try {
    return build_case1_code(spec);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PreconditionFailed) throw;
    throw Error(ErrorKind::PreconditionFailed,
                std::string(e.what()) + "; d is not periodic with odd period either, so no factor construction applies");
  }
}

Word apply_code(const SlidingBlockCode& code, WordView w) {
  const std::size_t m = code.window();
  if (w.size() < m)
    throw Error(ErrorKind::TooShort, "word of length " + std::to_string(w.size()) + " shorter than window " +
                                         std::to_string(m));
  Word out(w.size() - m + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = code.phi(w.subspan(i, m));
  return out;
}

const char* to_string(ClaimStatus s) noexcept {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Inconclusive: return "inconclusive";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

bool FactorReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const ClaimResult& c) {
    return c.status == ClaimStatus::Fail || c.status == ClaimStatus::Inconclusive;
  });
}

const ClaimResult* FactorReport::claim(const std::string& id) const {
  for (const auto& c : claims)
    if (c.id == id) return &c;
  return nullptr;
}

OnesSuffixResult check_ones_suffix_claim(const ShiftSpec& spec, std::size_t n, std::size_t max_len) {
  OnesSuffixResult r;
  const Word ones(n, 1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& w : enumerate_words(spec, len)) {
      if (is_constant(w, 1)) continue;
      ++r.checked;
      const auto v = is_admissible(spec, concat(w, ones));
      if (v == Admissibility::Undetermined)
        throw Error(ErrorKind::SpecPrefixTooShort, "cannot decide " + format_word(w) + " 1^n");
      if (v == Admissibility::Yes) r.exceptions.push_back(w);
    }
  }
  return r;
}

namespace {

void extend_all(const AdmissibilityChecker& chk, AdmissibilityChecker::State st, std::size_t len, Word& cur,
                std::vector<Word>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (Digit a = 1; a <= chk.alphabet(); ++a) {
    auto next = st;
    const auto v = chk.advance(next, a);
    if (v == AdmissibilityChecker::Verdict::Reject) continue;
    if (v == AdmissibilityChecker::Verdict::Undetermined)
      throw Error(ErrorKind::SpecPrefixTooShort, "bound prefix too short for the extension search");
    cur.push_back(a);
    extend_all(chk, next, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> admissible_extensions(const ShiftSpec& spec, WordView block, std::size_t len) {
  if (len < block.size()) throw Error(ErrorKind::InvalidInput, "extension shorter than the block");
  const AdmissibilityChecker chk(spec, len);
  AdmissibilityChecker::State st;
  for (Digit a : block) {
    const auto v = chk.advance(st, a);
    if (v == AdmissibilityChecker::Verdict::Reject) return {};
    if (v == AdmissibilityChecker::Verdict::Undetermined)
      throw Error(ErrorKind::SpecPrefixTooShort, "bound prefix too short for the extension search");
  }
  std::vector<Word> out;
  Word cur(block.begin(), block.end());
  extend_all(chk, st, len, cur, out);
  return out;
}

namespace {

template <class Fn>
ClaimResult run_claim(std::string id, std::size_t depth, Fn&& body) {
  ClaimResult c;
  c.id = std::move(id);
  c.depth = depth;
  try {
    body(c);
    if (c.status == ClaimStatus::Skipped && !c.counterexample) c.status = ClaimStatus::Pass;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::SpecPrefixTooShort:
      case ErrorKind::PrefixTooShort:
      case ErrorKind::HorizonExhausted:
      case ErrorKind::Undecidable:
        c.status = ClaimStatus::Inconclusive;
        c.detail = e.what();
        break;
      default: throw;
    }
  }
  return c;
}

void fail(ClaimResult& c, std::string example) {
  if (!c.counterexample) c.counterexample = std::move(example);
  c.status = ClaimStatus::Fail;
}

}  // namespace

FactorReport verify_factor(const SlidingBlockCode& code, const ShiftSpec& spec, std::size_t depth) {
  const std::size_t m = code.window();
  if (depth < m) throw Error(ErrorKind::InvalidInput, "depth must be at least the window");
  FactorReport r;
  r.code = code.describe();
  r.depth = depth;

  std::map<std::size_t, std::vector<Word>> words;
  bool enumerated = true;
  std::string enum_error;
  try {
    for (std::size_t len = m; len <= depth; ++len) words[len] = enumerate_words(spec, len);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SpecPrefixTooShort) throw;
    enumerated = false;
    enum_error = e.what();
  }
  const auto need_words = [&] {
    if (!enumerated) throw Error(ErrorKind::SpecPrefixTooShort, enum_error);
  };

  r.claims.push_back(run_claim("image_in_X", depth, [&](ClaimResult& c) {
    need_words();
    for (const auto& [len, ws] : words)
      for (const auto& w : ws) {
        ++c.checked;
        const Word img = apply_code(code, w);
        if (!in_x_language(img)) fail(c, format_word(w) + " -> " + format_word(img));
      }
  }));

  r.claims.push_back(run_claim("monotone_2", depth, [&](ClaimResult& c) {
    need_words();
    for (const auto& [len, ws] : words)
      for (const auto& w : ws) {
        ++c.checked;
        const Word img = apply_code(code, w);
        const auto two = std::find(img.begin(), img.end(), 2);
        if (std::find(two, img.end(), 1) != img.end()) fail(c, format_word(w) + " -> " + format_word(img));
      }
  }));

  r.claims.push_back(run_claim("equivariance", depth, [&](ClaimResult& c) {
    need_words();
    for (const auto& [len, ws] : words) {
      if (len < m + 1) continue;
      for (const auto& w : ws) {
        ++c.checked;
        const Word lhs = apply_code(code, WordView(w).subspan(1));
        const Word full = apply_code(code, w);
        const Word rhs(full.begin() + 1, full.end());
        if (lhs != rhs) fail(c, format_word(w));
      }
    }
  }));

  if (code.kind() == SlidingBlockCode::Kind::Case1) {
    r.claims.push_back(run_claim("ones_suffix_inadmissible", depth, [&](ClaimResult& c) {
      const auto res = check_ones_suffix_claim(spec, m, depth - m);
      c.checked = res.checked;
      if (!res.exceptions.empty()) fail(c, format_word(res.exceptions.front()));
      c.detail = "w 1^" + std::to_string(m) + " for admissible w != 1^|w|, |w| <= " + std::to_string(depth - m);
    }));
  }

  if (code.kind() == SlidingBlockCode::Kind::Case2) {
    const std::size_t n = code.parameter();
    const Word& period = spec.upper().periodic()->period();
    r.claims.push_back(run_claim("last_digit_not_one", depth, [&](ClaimResult& c) {
      c.checked = 1;
      if (period.back() == 1) fail(c, format_word(period));
    }));
    r.claims.push_back(run_claim("singleton_cylinder", depth, [&](ClaimResult& c) {
      for (std::size_t i = 0; i < n; ++i) {
        Word block(3 * n);
        for (std::size_t j = 0; j < 3 * n; ++j) block[j] = period[(i + j) % n];
        for (std::size_t len = 3 * n; len <= depth; ++len) {
          const auto ext = admissible_extensions(spec, block, len);
          c.checked += ext.size();
          Word forced(len);
          for (std::size_t j = 0; j < len; ++j) forced[j] = period[(i + j) % n];
          if (ext.size() != 1 || ext.front() != forced)
            fail(c, format_word(block) + " has " + std::to_string(ext.size()) + " extensions of length " +
                        std::to_string(len));
        }
      }
    }));
    r.claims.push_back(run_claim("ones_prefix_not_detector", depth, [&](ClaimResult& c) {
      for (std::size_t j = 1; j <= 3 * n; ++j) {
        Word probe(j, 1);
        for (std::size_t t = 0; t < 3 * n - j; ++t) probe.push_back(period[t % n]);
        for (const auto& det : code.detectors()) {
          ++c.checked;
          if (probe == det) fail(c, "j=" + std::to_string(j) + " " + format_word(probe));
        }
      }
    }));
  }

  r.claims.push_back(run_claim("surjectivity", depth, [&](ClaimResult& c) {
    need_words();
    const std::size_t img_len = depth - m + 1;
    std::map<Word, Word> preimage;
    for (const auto& w : words.at(depth)) preimage.emplace(apply_code(code, w), w);
    const std::size_t kmax = std::min(depth / 2, img_len - 1);
    std::vector<std::pair<std::size_t, Word>> targets;
    targets.emplace_back(std::numeric_limits<std::size_t>::max(), Word(img_len, 1));
    for (std::size_t k = 0; k <= kmax; ++k) {
      Word t(img_len, 2);
      std::fill(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k), 1);
      targets.emplace_back(k, std::move(t));
    }
    for (auto& [k, t] : targets) {
      ++c.checked;
      SurjectivityWitness wit{k, t, std::nullopt};
      if (auto it = preimage.find(t); it != preimage.end())
        wit.preimage = it->second;
      else
        fail(c, format_word(t));
      r.witnesses.push_back(std::move(wit));
    }
    c.detail = "targets 1^" + std::to_string(img_len) + " and 1^k 2^* for k <= " + std::to_string(kmax);
  }));

  if (code.kind() == SlidingBlockCode::Kind::Case1) {
    // 1^{k+n-1} d maps to 1^k 2^∞.
    r.claims.push_back(run_claim("ones_then_d_witness", depth, [&](ClaimResult& c) {
      const std::size_t img_len = depth - m + 1;
      const std::size_t kmax = std::min(depth / 2, img_len - 1);
      for (std::size_t k = 1; k <= kmax; ++k) {
        ++c.checked;
        Word w(k + m - 1, 1);
        const Word d = spec.upper().prefix(depth - w.size());
        w.insert(w.end(), d.begin(), d.end());
        Word expect(img_len, 2);
        std::fill(expect.begin(), expect.begin() + static_cast<std::ptrdiff_t>(k), 1);
        if (is_admissible(spec, w) != Admissibility::Yes || apply_code(code, w) != expect)
          fail(c, format_word(w));
      }
    }));
  }

  r.x_entropy_estimate = std::log(static_cast<double>(depth + 1)) / static_cast<double>(depth);
  return r;
}

std::string factor_report_json(const FactorReport& r) {
  nlohmann::ordered_json j;
  j["code"] = r.code;
  j["depth"] = r.depth;
  j["passed"] = r.passed();
  auto& cs = j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : r.claims) {
    nlohmann::ordered_json e;
    e["claim_id"] = c.id;
    e["depth"] = c.depth;
    e["status"] = to_string(c.status);
    e["checked"] = c.checked;
    if (c.counterexample) e["counterexample"] = *c.counterexample;
    if (!c.detail.empty()) e["detail"] = c.detail;
    cs.push_back(std::move(e));
  }
  auto& ws = j["surjectivity_witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json e;
    e["target"] = format_word(w.target);
    e["k"] = w.k == std::numeric_limits<std::size_t>::max() ? nlohmann::ordered_json("inf")
                                                             : nlohmann::ordered_json(w.k);
    e["preimage"] = w.preimage ? nlohmann::ordered_json(format_word(*w.preimage)) : nlohmann::ordered_json();
    ws.push_back(std::move(e));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r.x_entropy_estimate);
  j["x_entropy_estimate"] = buf;
  return j.dump(2);
}

}  // namespace negbeta
