#include "negbeta/numeric.hpp"

#include "negbeta/error.hpp"
#include "negbeta/order.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace negbeta {

namespace mp = boost::multiprecision;

namespace {

void require_above_one(const Interval& v, const std::string& label) {
  if (v.lo <= 1) throw Error(ErrorKind::DomainError, "beta must exceed 1 (" + label + ")");
}

Interval clamp_unit(Interval v) {
  if (v.lo < 0) v.lo = 0;
  if (v.hi > 1) v.hi = 1;
  return v;
}

}  // namespace

BetaValue BetaValue::exact(Rational beta) {
  BetaValue b;
  b.value_ = Interval(beta);
  b.label_ = to_string(beta);
  require_above_one(b.value_, b.label_);
  return b;
}

BetaValue BetaValue::enclosure(std::string label, Source source, int bits) {
  if (bits < 2) throw Error(ErrorKind::InvalidInput, "precision must be at least 2 bits");
  BetaValue b;
  b.value_ = source(bits);
  b.bits_ = bits;
  b.source_ = std::move(source);
  b.label_ = std::move(label);
  require_above_one(b.value_, b.label_);
  return b;
}

BetaValue BetaValue::rational_enclosure(const Rational& beta, int bits) {
  return enclosure(to_string(beta) + "~", [beta](int p) { return round_outward(Interval(beta), p); }, bits);
}

BetaValue BetaValue::quadratic(const Integer& p, const Integer& q, int bits) {
  const Integer disc = p * p + 4 * q;
  if (disc < 0) throw Error(ErrorKind::InvalidInput, "quadratic has no real root");
  auto source = [p, disc](int prec) {
    const Integer scale = Integer(1) << prec;
    const Integer scaled = disc * scale * scale;
    const Integer s = mp::sqrt(scaled);
    const Integer denom = Integer(2) * scale;
    if (s * s == scaled) return Interval(Rational(p * scale + s, denom));
    return Interval(Rational(p * scale + s, denom), Rational(p * scale + s + 1, denom));
  };
  std::string label = (p == 1 && q == 1) ? "golden" : "root(x^2=" + p.str() + "x+" + q.str() + ")";
  BetaValue b = enclosure(std::move(label), source, bits);
  b.quadratic_ = std::make_pair(p, q);
  return b;
}

BetaValue BetaValue::refined(int bits) const {
  if (is_exact()) return *this;
  BetaValue b = *this;
  b.value_ = source_(bits);
  b.bits_ = bits;
  return b;
}

Integer BetaValue::floor_beta() const {
  Integer lo = floor_of(value_.lo), hi = floor_of(value_.hi);
  if (lo != hi) throw Error(ErrorKind::AmbiguousDigit, "enclosure of beta straddles an integer");
  return lo;
}

Digit BetaValue::max_digit() const { return static_cast<Digit>(floor_beta()) + 1; }

StepResult step(const BetaValue& beta, const UnitPoint& x) {
  if (x.lo < 0 || x.hi > 1) throw Error(ErrorKind::DomainError, "x outside [0,1]");
  if (x.hi == 0) throw Error(ErrorKind::DomainError, "x = 0 is outside (0,1]; use step_extended");
  if (x.lo == 0) throw Error(ErrorKind::AmbiguousDigit, "enclosure of x touches 0");
  const Interval y = beta.value() * x;
  const Integer lo = floor_of(y.lo);
  if (lo != floor_of(y.hi)) throw Error(ErrorKind::AmbiguousDigit, "beta*x straddles a partition point");
  const Digit digit = static_cast<Digit>(lo) + 1;
  Interval next = Interval(Rational(digit)) - y;
  if (!beta.is_exact()) next = clamp_unit(round_outward(next, beta.precision_bits()));
  return {digit, std::move(next)};
}

ExtendedStepResult step_extended(const BetaValue& beta, const UnitPoint& x) {
  if (x.lo < 0 || x.hi > 1) throw Error(ErrorKind::DomainError, "x outside [0,1]");
  if (x.exact() && x.lo == 0) return {std::nullopt, Interval(Rational(1))};
  auto r = step(beta, x);
  return {r.digit, std::move(r.next)};
}

namespace {

// Runs n steps; returns the index of the first ambiguous digit, or n.
std::size_t run_orbit(const BetaValue& beta, UnitPoint x, std::size_t n, Word& digits) {
  digits.clear();
  for (std::size_t i = 0; i < n; ++i) {
    try {
      auto r = step(beta, x);
      digits.push_back(r.digit);
      x = std::move(r.next);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::AmbiguousDigit) throw;
      return i;
    }
  }
  return n;
}

}  // namespace

CertifiedDigits expand(const BetaValue& beta, const UnitPoint& x, std::size_t n, ExpandOptions opts) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "expand needs n >= 1");
  CertifiedDigits out;
  if (beta.is_exact()) {
    const std::size_t got = run_orbit(beta, x, n, out.digits);
    if (got != n) throw Error(ErrorKind::AmbiguousDigit, "exact orbit hit an ambiguous point");
    out.certified = n;
    return out;
  }
  BetaValue cur = beta;
  while (true) {
    const std::size_t got = run_orbit(cur, x, n, out.digits);
    out.precision_bits = cur.precision_bits();
    if (got == n) {
      out.certified = n;
      return out;
    }
    if (cur.precision_bits() * 2 > opts.max_precision_bits) {
      out.certified = got;
      out.status = CertifiedDigits::Status::PrecisionExhausted;
      out.exhausted_at = got;
      return out;
    }
    cur = cur.refined(cur.precision_bits() * 2);
  }
}

const char* to_string(D1Classification::Kind k) noexcept {
  using K = D1Classification::Kind;
  switch (k) {
    case K::PeriodicOdd: return "PeriodicOdd";
    case K::PeriodicEven: return "PeriodicEven";
    case K::EventuallyPeriodic: return "EventuallyPeriodic";
    case K::NoCycleDetected: return "NoCycleDetected";
  }
  return "?";
}

namespace {

// r + s·β with β^2 = pβ + q, kept exactly.
struct QuadElem {
  Rational r, s;
  bool operator<(const QuadElem& o) const { return r != o.r ? r < o.r : s < o.s; }
};

class QuadField {
 public:
  QuadField(Integer p, Integer q, double approx) : p_(std::move(p)), q_(std::move(q)), approx_(approx) {
    disc_ = p_ * p_ + 4 * q_;
  }

  QuadElem times_beta(const QuadElem& x) const { return {x.s * Rational(q_), x.r + x.s * Rational(p_)}; }

  int sign(const QuadElem& x) const {
    // r + sβ = (2r + sp)/2 + (s/2)√disc
    const Rational a = 2 * x.r + x.s * Rational(p_);
    const Rational& b = x.s;
    const int sa = a.sign(), sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const Rational lhs = a * a, rhs = b * b * Rational(disc_);
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
  }

  Integer floor_of(const QuadElem& x) const {
    Integer m(static_cast<long long>(std::floor(to_double(x.r) + to_double(x.s) * approx_)));
    while (sign({x.r - Rational(m), x.s}) < 0) --m;
    while (sign({x.r - Rational(m + 1), x.s}) >= 0) ++m;
    return m;
  }

 private:
  Integer p_, q_, disc_;
  double approx_;
};

template <class Key>
bool record_orbit_point(std::map<Key, std::size_t>& seen, const Key& x, const Word& digits, std::size_t i,
                        D1Classification& out) {
  auto it = seen.find(x);
  if (it == seen.end()) return false;
  const std::size_t j = it->second;
  out.preperiod = j;
  out.period = i + 1 - j;
  out.preperiod_digits.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(j));
  out.period_digits.assign(digits.begin() + static_cast<std::ptrdiff_t>(j), digits.end());
  if (j == 0)
    out.kind = out.period % 2 == 1 ? D1Classification::Kind::PeriodicOdd : D1Classification::Kind::PeriodicEven;
  else
    out.kind = D1Classification::Kind::EventuallyPeriodic;
  return true;
}

}  // namespace

D1Classification classify_d1(const BetaValue& beta, std::size_t horizon) {
  if (horizon == 0) throw Error(ErrorKind::InvalidInput, "horizon must be >= 1");
  D1Classification out;
  out.horizon = horizon;
  if (const auto& pq = beta.quadratic_coefficients()) {
    const QuadField field(pq->first, pq->second, to_double(beta.value().midpoint()));
    std::map<QuadElem, std::size_t> seen;
    QuadElem x{Rational(1), Rational(0)};
    Word digits;
    for (std::size_t i = 0; i < horizon; ++i) {
      seen.emplace(x, i);
      const QuadElem bx = field.times_beta(x);
      const Integer f = field.floor_of(bx);
      digits.push_back(static_cast<Digit>(f) + 1);
      x = {Rational(f + 1) - bx.r, -bx.s};
      if (record_orbit_point(seen, x, digits, i, out)) return out;
    }
    return out;
  }
  if (!beta.is_exact()) {
    auto d = expand(beta, Interval(Rational(1)), horizon);
    if (d.status == CertifiedDigits::Status::PrecisionExhausted)
      throw Error(ErrorKind::PrecisionExhausted, "could not certify digit " + std::to_string(d.exhausted_at));
    return out;
  }
  std::map<Rational, std::size_t> seen;
  Rational x = 1;
  Word digits;
  for (std::size_t i = 0; i < horizon; ++i) {
    seen.emplace(x, i);
    auto r = step(beta, Interval(x));
    digits.push_back(r.digit);
    x = r.next.lo;
    if (record_orbit_point(seen, x, digits, i, out)) return out;
  }
  return out;
}

const char* to_string(GoldenSide s) noexcept { return s == GoldenSide::Below ? "Below" : "AtOrAbove"; }

GoldenSide golden_test(const BetaValue& beta, std::size_t prefix_len) {
  const auto d = expand(beta, Interval(Rational(1)), prefix_len);
  const EvPeriodicSeq golden_d({2}, {1});
  const WordView cert(d.digits.data(), d.certified);
  switch (alt_cmp_prefix(cert, golden_d)) {
    case PrefixOrder::LT: return GoldenSide::Below;
    case PrefixOrder::GT: return GoldenSide::AtOrAbove;
    case PrefixOrder::EqAtPrefix: break;
  }
  if (const auto& q = beta.quadratic_coefficients(); q && q->first == 1 && q->second == 1)
    return GoldenSide::AtOrAbove;
  // β >= φ  <=>  β^2 - β - 1 >= 0 for β > 1
  const auto& v = beta.value();
  if (v.lo * v.lo - v.lo - 1 >= 0) return GoldenSide::AtOrAbove;
  if (v.hi * v.hi - v.hi - 1 < 0) return GoldenSide::Below;
  throw Error(ErrorKind::Undecidable, "prefix of length " + std::to_string(d.certified) +
                                          " ties with 21^inf and the enclosure contains the golden ratio");
}

namespace {

Interval power(const Interval& r, std::size_t e) {
  Interval out(Rational(1));
  for (std::size_t i = 0; i < e; ++i) out = out * r;
  return out;
}

Interval tail_digit_bound(const BetaValue& beta) {
  return Interval(Rational(floor_of(beta.value().hi) + 1));
}

}  // namespace

Interval psi_value(const BetaValue& beta, WordView prefix) {
  const Interval b = beta.value();
  const Interval r = -(Interval(Rational(1)) / b);  // 1/(-β)
  Interval sum(Rational(0));
  Interval rp(Rational(1));
  for (Digit s : prefix) {
    rp = rp * r;
    sum = sum - Interval(Rational(s)) * rp;
  }
  // tail ≤ B / (β^m (β - 1)), evaluated at the lower end of β for a safe bound
  const Rational blo = b.lo;
  Rational tail = tail_digit_bound(beta).hi / (blo - 1);
  for (std::size_t i = 0; i < prefix.size(); ++i) tail /= blo;
  Interval out(sum.lo - tail, sum.hi + tail);
  if (!beta.is_exact()) out = round_outward(out, beta.precision_bits());
  return out;
}

Interval psi_value(const BetaValue& beta, const EvPeriodicSeq& seq) {
  const Interval b = beta.value();
  const Interval one(Rational(1));
  const Interval r = -(one / b);
  auto block_sum = [&](const Word& w) {
    Interval sum(Rational(0));
    Interval rp(Rational(1));
    for (Digit s : w) {
      rp = rp * r;
      sum = sum + Interval(Rational(s)) * rp;
    }
    return sum;
  };
  const Interval pre = block_sum(seq.preperiod());
  const Interval per = block_sum(seq.period());
  const Interval rpre = power(r, seq.preperiod().size());
  const Interval rper = power(r, seq.period().size());
  Interval out = -(pre + rpre * per / (one - rper));
  if (!beta.is_exact()) out = round_outward(out, beta.precision_bits());
  return out;
}

SpanSet normalize(SpanSet spans) {
  spans.erase(std::remove_if(spans.begin(), spans.end(), [](const Span& s) { return s.empty(); }), spans.end());
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  SpanSet out;
  for (auto& s : spans) {
    if (!out.empty()) {
      Span& last = out.back();
      const bool touches = s.lo < last.hi || (s.lo == last.hi && (last.hi_closed || s.lo_closed));
      if (touches) {
        if (s.hi > last.hi || (s.hi == last.hi && s.hi_closed)) {
          last.hi_closed = (s.hi == last.hi) ? (last.hi_closed || s.hi_closed) : s.hi_closed;
          last.hi = s.hi;
        }
        continue;
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

Span intersect(const Span& a, const Span& b) {
  Span out;
  if (a.lo > b.lo) {
    out.lo = a.lo, out.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    out.lo = b.lo, out.lo_closed = b.lo_closed;
  } else {
    out.lo = a.lo, out.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    out.hi = a.hi, out.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    out.hi = b.hi, out.hi_closed = b.hi_closed;
  } else {
    out.hi = a.hi, out.hi_closed = a.hi_closed && b.hi_closed;
  }
  return out;
}

}  // namespace

SpanSet image_extended(const BetaValue& beta, const SpanSet& spans) {
  if (!beta.is_exact()) throw Error(ErrorKind::InvalidInput, "interval images need an exact rational beta");
  const Rational b = beta.value().lo;
  const Integer fb = beta.floor_beta();
  const auto cells = static_cast<std::size_t>(fb) + 1;
  SpanSet out;
  for (const Span& s : spans) {
    if (s.empty()) continue;
    if (s.lo < 0 || s.hi > 1) throw Error(ErrorKind::DomainError, "span outside [0,1]");
    if (s.lo == 0 && s.lo_closed) out.push_back({1, 1, true, true});
    for (std::size_t i = 1; i <= cells; ++i) {
      // I_1 = (0, 1/β), I_i = [(i-1)/β, i/β), I_last = [⌊β⌋/β, 1]
      Span cell{Rational(i - 1) / b, i == cells ? Rational(1) : Rational(i) / b, i > 1, i == cells};
      Span piece = intersect(s, cell);
      if (piece.empty()) continue;
      const Rational d(i);
      out.push_back({d - b * piece.hi, d - b * piece.lo, piece.hi_closed, piece.lo_closed});
    }
  }
  return normalize(std::move(out));
}

bool is_full_unit(const SpanSet& spans) {
  return spans.size() == 1 && spans[0].lo == 0 && !spans[0].lo_closed && spans[0].hi == 1 && spans[0].hi_closed;
}

std::optional<std::size_t> leo_witness(const BetaValue& beta, const Span& interval, std::size_t nmax) {
  if (!(interval.hi > interval.lo)) throw Error(ErrorKind::InvalidInput, "interval must have positive length");
  SpanSet cur = normalize({interval});
  for (std::size_t n = 0; n <= nmax; ++n) {
    if (is_full_unit(cur)) return n;
    if (n < nmax) cur = image_extended(beta, cur);
  }
  return std::nullopt;
}

}  // namespace negbeta
