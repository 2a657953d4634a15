#include "negbeta/measures.hpp"

#include "negbeta/error.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>
#include <memory>
#include <set>
#include <sstream>

namespace negbeta {

Rational EmpiricalMeasure::mass(WordView w) const {
  if (w.size() > m) throw Error(ErrorKind::InvalidInput, "cylinder longer than the measure table");
  const auto it = counts.find(Word(w.begin(), w.end()));
  if (it == counts.end()) return Rational(0);
  return Rational(it->second, denominator);
}

std::vector<Word> EmpiricalMeasure::support(std::size_t k) const {
  std::vector<Word> out;
  for (const auto& [w, c] : counts)
    if (w.size() == k) out.push_back(w);
  return out;
}

namespace {

EmpiricalMeasure build_measure(const ShiftSpec& spec, std::size_t n, std::size_t m, bool rotations) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "period must be >= 1");
  const auto blocks = per_points(spec, n);
  if (blocks.empty()) throw Error(ErrorKind::EmptyPer, "Per(" + std::to_string(n) + ") is empty");
  EmpiricalMeasure mu;
  mu.n = n;
  mu.m = m;
  mu.alphabet = spec.alphabet();
  mu.per_count = blocks.size();
  mu.rotation_averaged = rotations;
  mu.denominator = rotations ? mu.per_count * n : mu.per_count;
  const std::size_t shifts = rotations ? n : 1;
  Word prefix;
  for (const auto& b : blocks) {
    for (std::size_t s = 0; s < shifts; ++s) {
      prefix.clear();
      mu.counts[prefix] += 1;
      for (std::size_t k = 0; k < m; ++k) {
        prefix.push_back(b[(s + k) % n]);
        mu.counts[prefix] += 1;
      }
    }
  }
  return mu;
}

}  // namespace

EmpiricalMeasure mu_n(const ShiftSpec& spec, std::size_t n, std::size_t m) { return build_measure(spec, n, m, false); }

EmpiricalMeasure mu_n_rotation_averaged(const ShiftSpec& spec, std::size_t n, std::size_t m) {
  return build_measure(spec, n, m, true);
}

bool check_normalization(const EmpiricalMeasure& mu) {
  std::vector<Rational> totals(mu.m + 1);
  for (const auto& [w, c] : mu.counts) totals[w.size()] += Rational(c, mu.denominator);
  for (const auto& t : totals)
    if (t != 1) return false;
  return true;
}

bool check_kolmogorov(const EmpiricalMeasure& mu) {
  for (const auto& [w, c] : mu.counts) {
    if (w.size() >= mu.m) continue;
    Rational children = 0;
    Word child = w;
    child.push_back(0);
    for (Digit a = 1; a <= mu.alphabet; ++a) {
      child.back() = a;
      children += mu.mass(child);
    }
    if (children != mu.mass(w)) return false;
  }
  return true;
}

bool check_shift_invariance(const EmpiricalMeasure& mu) {
  for (const auto& [w, c] : mu.counts) {
    if (w.size() >= mu.m) continue;
    Rational parents = 0;
    Word parent{0};
    parent.insert(parent.end(), w.begin(), w.end());
    for (Digit a = 1; a <= mu.alphabet; ++a) {
      parent.front() = a;
      parents += mu.mass(parent);
    }
    if (parents != mu.mass(w)) return false;
  }
  // Words of mass 0 must have parents of mass 0; any positive parent is a key.
  for (const auto& [w, c] : mu.counts) {
    if (w.empty()) continue;
    const Word tail(w.begin() + 1, w.end());
    if (mu.counts.find(tail) == mu.counts.end()) return false;
  }
  return true;
}

HtopEstimate htop_estimate(const ShiftSpec& spec, std::size_t nmax, std::optional<std::size_t> per_nmax) {
  const auto table = count_words(spec, nmax, per_nmax);
  const auto prof = entropy_profile(table);
  HtopEstimate h;
  h.nmax = nmax;
  for (const auto& r : prof) {
    h.words.push_back(r.words);
    h.periodic.push_back(r.periodic);
  }
  h.value = h.words.back();
  if (nmax >= 2) h.last_delta = h.words[nmax - 1] - h.words[nmax - 2];
  for (std::size_t i = h.periodic.size(); i-- > 1;) {
    if (h.periodic[i] && h.periodic[i - 1]) {
      h.periodic_last_delta = *h.periodic[i] - *h.periodic[i - 1];
      break;
    }
  }
  return h;
}

GibbsReport gibbs_check(const EmpiricalMeasure& mu, const std::vector<Word>& gwords, double h) {
  GibbsReport r;
  r.h = h;
  for (const auto& [w, c] : mu.counts) {
    if (w.empty()) continue;
    const double ratio = to_double(mu.mass(w)) * std::exp(static_cast<double>(w.size()) * h);
    r.upper.push_back({w, ratio});
    r.max_ratio = std::max(r.max_ratio, ratio);
  }
  for (const auto& w : gwords) {
    const double ratio = to_double(mu.mass(w)) * std::exp(static_cast<double>(w.size()) * h);
    r.lower.push_back({w, ratio});
    if (ratio == 0) r.lower_bound_failure = true;
    if (!r.min_ratio || ratio < *r.min_ratio) r.min_ratio = ratio;
  }
  if (r.lower_bound_failure)
    r.implied_K = std::numeric_limits<double>::infinity();
  else
    r.implied_K = std::max({1.0, r.max_ratio, r.min_ratio ? 1.0 / *r.min_ratio : 1.0});
  return r;
}

WeakStarTable weakstar_diagnostic(const ShiftSpec& spec, const std::vector<std::size_t>& ns, std::size_t m) {
  WeakStarTable t;
  t.m = m;
  std::vector<std::unique_ptr<EmpiricalMeasure>> measures;
  std::set<Word> cyl;
  for (std::size_t n : ns) {
    try {
      auto mu = mu_n(spec, n, m);
      for (auto& w : mu.support(m)) cyl.insert(w);
      measures.push_back(std::make_unique<EmpiricalMeasure>(std::move(mu)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EmptyPer) throw;
      measures.push_back(nullptr);
    }
  }
  t.cylinders.assign(cyl.begin(), cyl.end());
  std::optional<std::size_t> prev;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    WeakStarRow row;
    row.n = ns[i];
    std::vector<std::optional<Rational>> masses(t.cylinders.size());
    if (measures[i]) {
      row.per_count = measures[i]->per_count;
      for (std::size_t c = 0; c < t.cylinders.size(); ++c) masses[c] = measures[i]->mass(t.cylinders[c]);
      if (prev) {
        double dev = 0;
        for (std::size_t c = 0; c < masses.size(); ++c)
          dev = std::max(dev, std::abs(to_double(*masses[c] - *t.masses[*prev][c])));
        row.max_deviation = dev;
      }
    }
    t.rows.push_back(row);
    t.masses.push_back(std::move(masses));
    if (measures[i]) prev = t.masses.size() - 1;
  }
  return t;
}

double measure_entropy_estimate(const EmpiricalMeasure& mu, std::size_t m) {
  if (m == 0 || m > mu.m) throw Error(ErrorKind::InvalidInput, "cylinder length outside the measure table");
  double sum = 0;
  for (const auto& [w, c] : mu.counts) {
    if (w.size() != m) continue;
    const double p = to_double(Rational(c, mu.denominator));
    if (p > 0) sum -= p * std::log(p);
  }
  return sum / static_cast<double>(m);
}

std::string measure_to_json(const EmpiricalMeasure& mu) {
  nlohmann::ordered_json j;
  j["n"] = mu.n;
  j["m"] = mu.m;
  j["per_count"] = mu.per_count.str();
  j["rotation_averaged"] = mu.rotation_averaged;
  auto& masses = j["masses"] = nlohmann::ordered_json::object();
  for (const auto& [w, c] : mu.counts)
    if (!w.empty()) masses[format_word(w)] = to_string(Rational(c, mu.denominator));
  return j.dump(2);
}

std::string weakstar_csv(const WeakStarTable& t) {
  std::ostringstream os;
  os << "n,per_count,max_deviation";
  for (const auto& w : t.cylinders) os << ",mass_" << format_word(w);
  os << '\n';
  char buf[32];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    os << r.n << ',' << (r.per_count ? r.per_count->str() : "empty") << ',';
    if (r.max_deviation) {
      std::snprintf(buf, sizeof buf, "%.6g", *r.max_deviation);
      os << buf;
    }
    for (const auto& m : t.masses[i]) os << ',' << (m ? to_string(*m) : "");
    os << '\n';
  }
  return os.str();
}

}  // namespace negbeta
