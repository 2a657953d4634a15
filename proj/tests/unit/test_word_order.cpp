#include "negbeta/error.hpp"
#include "negbeta/order.hpp"
#include "negbeta/word.hpp"

#include <doctest.h>

#include <random>

using namespace negbeta;

TEST_CASE("words format and parse") {
  CHECK(format_word(Word{2, 1, 1, 2}) == "2112");
  CHECK(format_word(Word{10, 3}) == "10,3");
  CHECK(parse_word("2112") == Word{2, 1, 1, 2});
  CHECK(parse_word("2 1, 1 2") == Word{2, 1, 1, 2});
  CHECK(parse_word("10,11,3") == Word{10, 11, 3});
  CHECK(parse_word("") == Word{});
  CHECK_THROWS_AS(parse_word("2a1"), Error);
}

TEST_CASE("eventually periodic sequences are canonical") {
  CHECK(EvPeriodicSeq({}, {1, 2, 1, 2}) == EvPeriodicSeq({}, {1, 2}));
  CHECK(EvPeriodicSeq({2, 1}, {1}) == EvPeriodicSeq({2}, {1}));
  CHECK(EvPeriodicSeq({3, 1, 2}, {1, 2}) == EvPeriodicSeq({3}, {1, 2}));
  const EvPeriodicSeq g({2}, {1});
  CHECK(g.str() == "2|1");
  CHECK(g.prefix(5) == Word{2, 1, 1, 1, 1});
  CHECK(g.at(0) == 2);
  CHECK(g.at(100) == 1);
  CHECK(g.max_digit() == 2);
  CHECK_THROWS_AS(EvPeriodicSeq({1}, {}), Error);
}

TEST_CASE("alt_cmp on words") {
  CHECK(alt_cmp(Word{1}, Word{2}) == Order::LT);
  CHECK(alt_cmp(Word{2, 2}, Word{2, 1}) == Order::LT);
  CHECK(alt_cmp(Word{3, 2, 3, 2}, Word{3, 2, 3, 2}) == Order::EQ);
  CHECK_THROWS_AS(alt_cmp(Word{1}, Word{1, 2}), Error);
}

TEST_CASE("alt_cmp_seq on eventually periodic sequences") {
  CHECK(alt_cmp_seq(EvPeriodicSeq::periodic({1, 2}), EvPeriodicSeq::periodic({1})) == Order::LT);
  CHECK(alt_cmp_seq(EvPeriodicSeq({2}, {1}), EvPeriodicSeq({2}, {1})) == Order::EQ);
  // Index 2 is even and 3 > 2, so 3^∞ lies below (32)^∞.
  CHECK(alt_cmp_seq(EvPeriodicSeq::periodic({3}), EvPeriodicSeq::periodic({3, 2})) == Order::LT);
  // The difference may sit beyond both periods.
  CHECK(alt_cmp_seq(EvPeriodicSeq({2, 1, 1}, {1, 2}), EvPeriodicSeq({2}, {1})) == Order::GT);
}

TEST_CASE("alt_cmp_prefix") {
  const EvPeriodicSeq g({2}, {1});
  CHECK(alt_cmp_prefix(Word{2, 1, 1}, g) == PrefixOrder::EqAtPrefix);
  CHECK(alt_cmp_prefix(Word{2, 1, 2}, g) == PrefixOrder::GT);
  CHECK(alt_cmp_prefix(Word{2, 2}, g) == PrefixOrder::LT);
  CHECK_THROWS_AS(alt_cmp_prefix(Word{2, 2}, Word{2}), Error);
}

TEST_CASE("alternately shift maximal") {
  CHECK(is_alt_shift_maximal(EvPeriodicSeq({2}, {1})).yes());
  CHECK(is_alt_shift_maximal(EvPeriodicSeq::periodic({3})).yes());
  const auto no = is_alt_shift_maximal(EvPeriodicSeq({1}, {2}));
  CHECK(no.status == ShiftMaximality::Status::No);
  CHECK(no.witness == 1);
  CHECK(is_alt_shift_maximal(Word{3, 2, 3, 2, 1, 3, 3}).status != ShiftMaximality::Status::No);
  CHECK(is_alt_shift_maximal(Word{2, 1, 1, 2}).status == ShiftMaximality::Status::UndecidedAtPrefix);
  CHECK(is_alt_shift_maximal(Word{2, 1, 1, 1}).status == ShiftMaximality::Status::Yes);
  CHECK(is_alt_shift_maximal(Word{3, 1}).status == ShiftMaximality::Status::Yes);
  CHECK(is_alt_shift_maximal(Word{2, 2, 1}).status == ShiftMaximality::Status::No);
}

TEST_CASE("alternating order is a total order on random words") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> digit(1, 3);
  auto random_word = [&] {
    Word w(6);
    for (auto& d : w) d = digit(rng);
    return w;
  };
  for (int i = 0; i < 10000; ++i) {
    const Word a = random_word(), b = random_word(), c = random_word();
    const Order ab = alt_cmp(a, b), ba = alt_cmp(b, a);
    CHECK(((ab == Order::EQ) == (a == b)));
    if (ab == Order::LT) CHECK(ba == Order::GT);
    if (ab == Order::LT && alt_cmp(b, c) == Order::LT) CHECK(alt_cmp(a, c) == Order::LT);
  }
}

TEST_CASE("sequence comparison agrees with truncations") {
  const std::vector<EvPeriodicSeq> seqs{EvPeriodicSeq({2}, {1}),    EvPeriodicSeq::periodic({1, 2}),
                                        EvPeriodicSeq::periodic({2}), EvPeriodicSeq({2, 1, 1, 2}, {2, 1}),
                                        EvPeriodicSeq::periodic({1}), EvPeriodicSeq({2, 1}, {1, 2, 2})};
  for (const auto& s : seqs)
    for (const auto& t : seqs) {
      const Order o = alt_cmp_seq(s, t);
      if (o == Order::EQ) continue;
      CHECK(alt_cmp(s.prefix(30), t.prefix(30)) == o);
    }
}
