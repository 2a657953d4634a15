#include "negbeta/arith.hpp"

#include "negbeta/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace negbeta {

namespace mp = boost::multiprecision;

Integer floor_of(const Rational& r) {
  Integer num = mp::numerator(r);
  const Integer den = mp::denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil_of(const Rational& r) { return -floor_of(-r); }

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  const Integer den = mp::denominator(r);
  if (den == 1) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(ErrorKind::InvalidInput, "empty number in '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw Error(ErrorKind::InvalidInput, "bad number '" + std::string(whole) + "'");
  Integer z = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw Error(ErrorKind::InvalidInput, "bad number '" + std::string(whole) + "'");
    z = z * 10 + (s[i] - '0');
  }
  return neg ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer p = parse_integer(text.substr(0, slash), text);
    Integer q = parse_integer(text.substr(slash + 1), text);
    if (q == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    digits += frac;
    if (digits.empty() || digits == "-" || digits == "+")
      throw Error(ErrorKind::InvalidInput, "bad decimal '" + std::string(text) + "'");
    Integer p = parse_integer(digits, text);
    Integer q = mp::pow(Integer(10), static_cast<unsigned>(frac.size()));
    return Rational(p, q);
  }
  return Rational(parse_integer(text, text));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

double log_of(const Integer& z) {
  if (z <= 0) throw Error(ErrorKind::DomainError, "log of non-positive integer");
  const auto bits = mp::msb(z);
  if (bits < 900) return std::log(z.convert_to<double>());
  const auto shift = bits - 64;
  Integer top = z >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw Error(ErrorKind::InvalidInput, "interval with lower > upper");
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.exact() && b.exact()) return Interval(a.lo * b.lo);
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Error(ErrorKind::DomainError, "interval division by a range containing 0");
  return a * Interval(1 / b.hi, 1 / b.lo);
}

bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }

Interval round_outward(const Interval& a, int bits) {
  const Integer scale = Integer(1) << bits;
  Rational lo(floor_of(a.lo * scale), scale);
  Rational hi(ceil_of(a.hi * scale), scale);
  return {lo, hi};
}

}  // namespace negbeta
