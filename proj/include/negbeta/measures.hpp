#pragma once

#include "negbeta/arith.hpp"
#include "negbeta/language.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace negbeta {

/// Uniform probability on the period-n points, with exact cylinder counts
/// for every word of length <= m.
struct EmpiricalMeasure {
  std::size_t n = 0;
  std::size_t m = 0;
  int alphabet = 0;
  Integer per_count;
  bool rotation_averaged = false;
  std::map<Word, Integer> counts;  // nonzero cylinder counts, empty word included
  Integer denominator;             // per_count, times n when rotation averaged

  Rational mass(WordView w) const;
  /// Cylinders of length k with positive mass.
  std::vector<Word> support(std::size_t k) const;
};

/// μ_n[w] = #{x in Per(n) : x starts with w} / #Per(n). Throws EmptyPer.
EmpiricalMeasure mu_n(const ShiftSpec& spec, std::size_t n, std::size_t m);
/// Occurrences of w over all n rotations of every period block.
EmpiricalMeasure mu_n_rotation_averaged(const ShiftSpec& spec, std::size_t n, std::size_t m);

bool check_normalization(const EmpiricalMeasure& mu);
/// μ[w] = Σ_a μ[wa] for |w| < m.
bool check_kolmogorov(const EmpiricalMeasure& mu);
/// μ[w] = Σ_a μ[aw] for |w| < m.
bool check_shift_invariance(const EmpiricalMeasure& mu);

struct HtopEstimate {
  std::size_t nmax = 0;
  double value = 0;                       // (1/nmax) log #L_nmax
  std::vector<double> words;              // (1/n) log #L_n, n = 1..nmax
  std::vector<std::optional<double>> periodic;  // (1/n) log #Per(n)
  double last_delta = 0;                  // words[nmax] - words[nmax-1]
  std::optional<double> periodic_last_delta;
};

HtopEstimate htop_estimate(const ShiftSpec& spec, std::size_t nmax, std::optional<std::size_t> per_nmax = {});

struct GibbsRatio {
  Word word;
  double ratio = 0;  // μ[w] e^{|w| h}
};

struct GibbsReport {
  double h = 0;
  std::vector<GibbsRatio> upper;  // every word of positive mass
  std::vector<GibbsRatio> lower;  // the supplied G-words
  double max_ratio = 0;
  std::optional<double> min_ratio;   // over G-words
  bool lower_bound_failure = false;  // some G-word has mass 0
  double implied_K = 0;              // max(max_ratio, 1/min_ratio), infinite on failure
};

GibbsReport gibbs_check(const EmpiricalMeasure& mu, const std::vector<Word>& gwords, double h);

struct WeakStarRow {
  std::size_t n = 0;
  std::optional<Integer> per_count;  // empty when Per(n) is empty
  std::optional<double> max_deviation;  // vs the previous nonempty row
};

struct WeakStarTable {
  std::size_t m = 0;
  std::vector<Word> cylinders;
  std::vector<WeakStarRow> rows;
  std::vector<std::vector<std::optional<Rational>>> masses;  // [row][cylinder]
};

WeakStarTable weakstar_diagnostic(const ShiftSpec& spec, const std::vector<std::size_t>& ns, std::size_t m);

/// (1/m) Σ_{|w|=m} -μ[w] log μ[w].
double measure_entropy_estimate(const EmpiricalMeasure& mu, std::size_t m);

std::string measure_to_json(const EmpiricalMeasure& mu);
std::string weakstar_csv(const WeakStarTable& t);

}  // namespace negbeta
