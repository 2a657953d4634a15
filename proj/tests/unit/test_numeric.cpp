#include "negbeta/error.hpp"
#include "negbeta/numeric.hpp"

#include <doctest.h>

using namespace negbeta;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("13/10") == q(13, 10));
  CHECK(parse_rational("1.3") == q(13, 10));
  CHECK(parse_rational("2") == q(2));
  CHECK(parse_rational("-0.25") == q(-1, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(to_string(q(26, 20)) == "13/10");
}

TEST_CASE("interval arithmetic") {
  const Interval a(q(1), q(2)), b(q(-1), q(3));
  CHECK((a + b) == Interval(q(0), q(5)));
  CHECK((a * b) == Interval(q(-2), q(6)));
  CHECK(-a == Interval(q(-2), q(-1)));
  CHECK_THROWS_AS(a / b, Error);
  const Interval r = round_outward(Interval(q(1, 3)), 8);
  CHECK(r.contains(q(1, 3)));
  CHECK(r.width() <= q(1, 256));
}

TEST_CASE("step") {
  const auto two = BetaValue::exact(2);
  auto r = step(two, Interval(q(1)));
  CHECK(r.digit == 3);
  CHECK(r.next == Interval(q(1)));

  r = step(BetaValue::exact(q(13, 10)), Interval(q(1)));
  CHECK(r.digit == 2);
  CHECK(r.next == Interval(q(7, 10)));

  const auto g = BetaValue::golden(64);
  r = step(g, Interval(q(1)));
  CHECK(r.digit == 2);
  CHECK(to_double(r.next.midpoint()) == doctest::Approx(0.381966).epsilon(1e-6));
  CHECK(r.next.width() < q(1, 1000000));

  CHECK_THROWS_AS(step(two, Interval(q(3, 2))), Error);
  CHECK_THROWS_AS(step(two, Interval(q(0))), Error);
}

TEST_CASE("step_extended") {
  const auto two = BetaValue::exact(2);
  auto e = step_extended(two, Interval(q(0)));
  CHECK_FALSE(e.digit.has_value());
  CHECK(e.next == Interval(q(1)));
  e = step_extended(two, Interval(q(1, 3)));
  CHECK(e.digit == 1);
  CHECK(e.next == Interval(q(1, 3)));
  e = step_extended(BetaValue::exact(q(13, 10)), Interval(q(7, 10)));
  CHECK(e.digit == 1);
  CHECK(e.next == Interval(q(9, 100)));
}

TEST_CASE("expand") {
  auto d = expand(BetaValue::exact(2), Interval(q(1)), 5);
  CHECK(d.digits == Word{3, 3, 3, 3, 3});
  CHECK(d.certified == 5);
  d = expand(BetaValue::exact(q(13, 10)), Interval(q(1)), 4);
  CHECK(d.digits == Word{2, 1, 1, 2});
  d = expand(BetaValue::golden(64), Interval(q(1)), 6);
  CHECK(d.digits == Word{2, 1, 1, 1, 1, 1});
  CHECK(d.status == CertifiedDigits::Status::Complete);
  d = expand(BetaValue::exact(q(5, 2)), Interval(q(1)), 8);
  CHECK(d.digits == Word{3, 2, 2, 1, 2, 1, 1, 1});
  d = expand(BetaValue::exact(q(41, 16)), Interval(q(1)), 7);
  CHECK(d.digits == Word{3, 2, 3, 2, 1, 3, 3});
}

TEST_CASE("expand shift-commutes with step") {
  for (auto beta : {q(13, 10), q(5, 2), q(41, 16), q(17, 7)}) {
    const auto b = BetaValue::exact(beta);
    for (auto x : {q(1), q(1, 3), q(5, 7)}) {
      const auto full = expand(b, Interval(x), 21);
      const auto next = step(b, Interval(x)).next;
      const auto tail = expand(b, next, 20);
      CHECK(Word(full.digits.begin() + 1, full.digits.end()) == tail.digits);
    }
  }
}

TEST_CASE("interval mode agrees with exact mode and refines monotonically") {
  const auto exact = expand(BetaValue::exact(q(13, 10)), Interval(q(1)), 30);
  const auto coarse = expand(BetaValue::rational_enclosure(q(13, 10), 64), Interval(q(1)), 30);
  const auto fine = expand(BetaValue::rational_enclosure(q(13, 10), 128), Interval(q(1)), 30);
  CHECK(coarse.digits == exact.digits);
  CHECK(fine.digits == exact.digits);
  CHECK(fine.certified == 30);
}

TEST_CASE("precision exhaustion is reported") {
  // beta * 3/7 = 1 sits on a cell boundary that no dyadic enclosure of 7/3 can resolve.
  ExpandOptions opts;
  opts.max_precision_bits = 64;
  const auto d = expand(BetaValue::rational_enclosure(q(7, 3), 16), Interval(q(3, 7)), 3, opts);
  CHECK(d.status == CertifiedDigits::Status::PrecisionExhausted);
  CHECK(d.certified == 0);
}

TEST_CASE("digit range") {
  for (auto beta : {q(13, 10), q(5, 2), q(41, 16), q(7, 2)}) {
    const auto b = BetaValue::exact(beta);
    const auto d = expand(b, Interval(q(1)), 50);
    CHECK(d.digits.front() == b.max_digit());
    for (Digit x : d.digits) {
      CHECK(x >= 1);
      CHECK(x <= b.max_digit());
    }
  }
}

TEST_CASE("classify_d1") {
  auto c = classify_d1(BetaValue::exact(2), 10);
  CHECK(c.kind == D1Classification::Kind::PeriodicOdd);
  CHECK(c.period == 1);
  CHECK(c.period_digits == Word{3});
  c = classify_d1(BetaValue::exact(q(13, 10)), 1000);
  CHECK(c.kind == D1Classification::Kind::NoCycleDetected);
  CHECK(c.horizon == 1000);
  c = classify_d1(BetaValue::golden(64), 10);
  CHECK(c.kind == D1Classification::Kind::EventuallyPeriodic);
  CHECK(c.preperiod_digits == Word{2});
  CHECK(c.period_digits == Word{1});
  c = classify_d1(BetaValue::rational_enclosure(q(5, 2), 128), 20);
  CHECK(c.kind == D1Classification::Kind::NoCycleDetected);
  CHECK_THROWS_AS(classify_d1(BetaValue::exact(2), 0), Error);
}

TEST_CASE("golden_test") {
  CHECK(golden_test(BetaValue::exact(q(13, 10))) == GoldenSide::Below);
  CHECK(golden_test(BetaValue::exact(2)) == GoldenSide::AtOrAbove);
  CHECK(golden_test(BetaValue::golden(64)) == GoldenSide::AtOrAbove);
  CHECK(golden_test(BetaValue::exact(q(8, 5))) == GoldenSide::Below);
  CHECK(golden_test(BetaValue::exact(q(13, 8))) == GoldenSide::AtOrAbove);
}

TEST_CASE("psi_value") {
  for (auto beta : {q(13, 10), q(2), q(5, 2)}) {
    const auto b = BetaValue::exact(beta);
    CHECK(psi_value(b, EvPeriodicSeq::periodic({1})) == Interval(1 / (beta + 1)));
  }
  CHECK(psi_value(BetaValue::exact(2), EvPeriodicSeq::periodic({3})) == Interval(q(1)));
  CHECK(psi_value(BetaValue::exact(q(13, 10)), Word{2, 1, 1, 2}).contains(q(1)));
}

TEST_CASE("psi brackets the expanded point within the tail bound") {
  for (auto beta : {q(13, 10), q(5, 2), q(41, 16)}) {
    const auto b = BetaValue::exact(beta);
    for (auto x : {q(1), q(2, 3), q(1, 7)}) {
      for (std::size_t m : {5u, 20u, 40u}) {
        const auto d = expand(b, Interval(x), m);
        const auto iv = psi_value(b, d.digits);
        CHECK(iv.contains(x));
        Rational pw = 1;
        for (std::size_t i = 0; i < m; ++i) pw *= beta;
        const Rational bound = Rational(b.max_digit()) / (pw * (beta - 1));
        CHECK(iv.width() <= 2 * bound);
      }
    }
  }
}

TEST_CASE("extended image and leo witness") {
  const auto two = BetaValue::exact(2);
  CHECK(leo_witness(two, Span{q(0), q(1), false, true}, 5) == 0u);
  CHECK(leo_witness(two, Span{q(2, 5), q(3, 5), false, false}, 20) == 3u);
  // Below the golden ratio the orbit of (0.9, 1) settles on a proper invariant union.
  CHECK_FALSE(leo_witness(BetaValue::exact(q(13, 10)), Span{q(9, 10), q(1), false, false}, 200).has_value());
  const auto img = image_extended(BetaValue::exact(q(13, 10)), {Span{q(9, 10), q(1), false, false}});
  REQUIRE(img.size() == 1);
  CHECK(img[0] == Span{q(7, 10), q(83, 100), false, false});
  CHECK(leo_witness(BetaValue::exact(q(5, 2)), Span{q(9, 10), q(1), false, false}, 50).has_value());
  CHECK(is_full_unit(normalize({Span{q(0), q(1, 2), false, true}, Span{q(1, 2), q(1), false, true}})));
}
