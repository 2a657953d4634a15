#include "negbeta/order.hpp"

#include "negbeta/error.hpp"

#include <algorithm>
#include <numeric>

namespace negbeta {

const char* to_string(Order o) noexcept {
  switch (o) {
    case Order::LT: return "LT";
    case Order::EQ: return "EQ";
    case Order::GT: return "GT";
  }
  return "?";
}

const char* to_string(PrefixOrder o) noexcept {
  switch (o) {
    case PrefixOrder::LT: return "LT";
    case PrefixOrder::EqAtPrefix: return "EqAtPrefix";
    case PrefixOrder::GT: return "GT";
  }
  return "?";
}

const char* to_string(ShiftMaximality::Status s) noexcept {
  switch (s) {
    case ShiftMaximality::Status::Yes: return "Yes";
    case ShiftMaximality::Status::No: return "No";
    case ShiftMaximality::Status::UndecidedAtPrefix: return "UndecidedAtPrefix";
  }
  return "?";
}

Order digit_order(std::size_t position, Digit x, Digit y) noexcept {
  if (x == y) return Order::EQ;
  const bool odd = position % 2 == 1;
  return (odd == (x < y)) ? Order::LT : Order::GT;
}

Order alt_cmp(WordView u, WordView v) {
  if (u.size() != v.size())
    throw Error(ErrorKind::LengthMismatch, "alt_cmp on words of lengths " + std::to_string(u.size()) + " and " +
                                               std::to_string(v.size()));
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) return digit_order(i + 1, u[i], v[i]);
  return Order::EQ;
}

Order alt_cmp_seq(const EvPeriodicSeq& s, const EvPeriodicSeq& t) {
  const std::size_t pre = std::max(s.preperiod().size(), t.preperiod().size());
  const std::size_t per = std::lcm(s.period().size(), t.period().size());
  for (std::size_t i = 0; i < pre + per; ++i) {
    const Digit a = s.at(i), b = t.at(i);
    if (a != b) return digit_order(i + 1, a, b);
  }
  return Order::EQ;
}

namespace {

PrefixOrder to_prefix(Order o) {
  return o == Order::LT ? PrefixOrder::LT : PrefixOrder::GT;
}

}  // namespace

PrefixOrder alt_cmp_prefix(WordView u, const EvPeriodicSeq& s) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Digit b = s.at(i);
    if (u[i] != b) return to_prefix(digit_order(i + 1, u[i], b));
  }
  return PrefixOrder::EqAtPrefix;
}

PrefixOrder alt_cmp_prefix(WordView u, WordView v) {
  if (v.size() < u.size()) throw Error(ErrorKind::LengthMismatch, "prefix comparison against a shorter word");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) return to_prefix(digit_order(i + 1, u[i], v[i]));
  return PrefixOrder::EqAtPrefix;
}

ShiftMaximality is_alt_shift_maximal(const EvPeriodicSeq& b) {
  using S = ShiftMaximality::Status;
  // Shifts beyond pre + per - 1 repeat earlier ones.
  const std::size_t distinct = b.preperiod().size() + b.period().size();
  for (std::size_t k = 1; k < distinct; ++k) {
    Word pre;
    Word per;
    if (k < b.preperiod().size()) {
      pre.assign(b.preperiod().begin() + static_cast<std::ptrdiff_t>(k), b.preperiod().end());
      per = b.period();
    } else {
      const std::size_t r = (k - b.preperiod().size()) % b.period().size();
      per.assign(b.period().begin() + static_cast<std::ptrdiff_t>(r), b.period().end());
      per.insert(per.end(), b.period().begin(), b.period().begin() + static_cast<std::ptrdiff_t>(r));
    }
    if (alt_cmp_seq(EvPeriodicSeq(std::move(pre), std::move(per)), b) == Order::GT) return {S::No, k};
  }
  // σ^k(b) ⪯ b at position 1 already forces b_1 to be the largest digit.
  return {S::Yes, 0};
}

ShiftMaximality is_alt_shift_maximal(WordView prefix) {
  using S = ShiftMaximality::Status;
  if (prefix.empty()) throw Error(ErrorKind::InvalidInput, "empty sequence");
  bool tie = false;
  for (std::size_t k = 1; k < prefix.size(); ++k) {
    const auto r = alt_cmp_prefix(prefix.subspan(k), prefix);
    if (r == PrefixOrder::GT) return {S::No, k};
    if (r == PrefixOrder::EqAtPrefix) tie = true;
  }
  if (tie) return {S::UndecidedAtPrefix, 0};
  return {S::Yes, 0};
}

}  // namespace negbeta
