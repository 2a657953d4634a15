#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace negbeta {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "p/q", "p", and finite decimals such as "1.3" (read exactly as 13/10).
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

/// Natural log of a positive big integer without overflowing double.
double log_of(const Integer& z);

/// Closed interval with exact rational endpoints. A degenerate interval
/// (lo == hi) represents an exact value.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational value) : lo(value), hi(std::move(value)) {}  // NOLINT
  Interval(Rational l, Rational h);

  bool exact() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
bool operator==(const Interval& a, const Interval& b);

/// Smallest dyadic interval with 2^-bits grid endpoints enclosing `a`.
Interval round_outward(const Interval& a, int bits);

}  // namespace negbeta
