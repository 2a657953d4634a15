#include "negbeta/error.hpp"
#include "negbeta/measures.hpp"
#include "negbeta/oracle/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace negbeta;

namespace {

ShiftSpec golden() { return ShiftSpec::one_sided(EvPeriodicSeq({2}, {1}), "golden"); }

}  // namespace

TEST_CASE("mu_n on golden period 6") {
  const auto mu = mu_n(golden(), 6, 3);
  CHECK(mu.per_count == 17);
  CHECK(mu.mass(Word{}) == 1);
  CHECK(mu.mass(Word{2}) == Rational(8, 17));
  CHECK(mu.mass(Word{1, 1}) == Rational(6, 17));
  CHECK(mu.mass(Word{2, 1, 2}) == 0);
  CHECK(check_normalization(mu));
  CHECK(check_kolmogorov(mu));
  CHECK(check_shift_invariance(mu));
  CHECK(mu.support(2).size() == 4);
}

TEST_CASE("masses match a direct count over the oracle's periodic points") {
  const auto spec = ShiftSpec::from_beta(BetaValue::exact(Rational(41, 16)), 256);
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto pts = oracle::naive_per(spec, n);
    const auto mu = mu_n(spec, n, 2);
    CHECK(mu.per_count == pts.size());
    for (const auto& w : mu.support(2)) {
      std::size_t hits = 0;
      for (const auto& p : pts)
        if (p[0] == w[0] && p[1 % n] == w[1]) ++hits;
      CHECK(mu.mass(w) == Rational(hits, pts.size()));
    }
  }
}

TEST_CASE("rotation averaging changes nothing") {
  const auto spec = golden();
  for (std::size_t n : {5u, 8u}) {
    const auto a = mu_n(spec, n, 3);
    const auto b = mu_n_rotation_averaged(spec, n, 3);
    CHECK(b.rotation_averaged);
    for (std::size_t k = 0; k <= 3; ++k)
      for (const auto& w : a.support(k)) CHECK(a.mass(w) == b.mass(w));
  }
}

TEST_CASE("Per(n) always contains 1^n") {
  for (const auto& spec : {golden(), ShiftSpec::from_beta(BetaValue::exact(2), 64)}) {
    for (std::size_t n = 1; n <= 6; ++n) CHECK(periodic_admissible(spec, Word(n, 1)));
  }
  CHECK_THROWS_AS(mu_n(golden(), 0, 1), Error);
}

TEST_CASE("topological entropy estimate") {
  const auto h = htop_estimate(golden(), 18);
  CHECK(h.value == doctest::Approx(0.516702).epsilon(1e-5));
  CHECK(h.words.size() == 18);
  CHECK(std::abs(h.last_delta) < 0.01);
}

TEST_CASE("Gibbs ratios") {
  const auto mu = mu_n(golden(), 12, 4);
  const double h = std::log((1 + std::sqrt(5.0)) / 2);
  const auto r = gibbs_check(mu, {{2, 1}, {1, 1, 2}}, h);
  CHECK_FALSE(r.lower_bound_failure);
  CHECK(r.max_ratio > 0);
  REQUIRE(r.min_ratio.has_value());
  CHECK(*r.min_ratio > 0);
  CHECK(r.implied_K >= 1);
  const auto bad = gibbs_check(mu, {{2, 1, 2}}, h);
  CHECK(bad.lower_bound_failure);
  CHECK(std::isinf(bad.implied_K));
}

TEST_CASE("weak-star diagnostic") {
  const auto t = weakstar_diagnostic(golden(), {4, 6, 8}, 2);
  REQUIRE(t.rows.size() == 3);
  CHECK_FALSE(t.rows[0].max_deviation.has_value());
  CHECK(*t.rows[1].max_deviation == doctest::Approx(0.0392157).epsilon(1e-5));
  CHECK(*t.rows[2].max_deviation < *t.rows[1].max_deviation);
  CHECK(t.masses[1][0] == Rational(6, 17));
  CHECK(weakstar_csv(t).rfind("n,per_count,max_deviation,mass_11,mass_12,mass_21,mass_22\n", 0) == 0);
}

TEST_CASE("measure entropy and json") {
  const auto mu = mu_n(golden(), 10, 3);
  const double e = measure_entropy_estimate(mu, 3);
  CHECK(e > 0);
  CHECK(e <= std::log(2.0));
  CHECK_THROWS_AS(measure_entropy_estimate(mu, 4), Error);
  CHECK(measure_to_json(mu).find("\"per_count\"") != std::string::npos);
}
