#include "negbeta/decomposition.hpp"

#include "negbeta/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace negbeta {

namespace {

void require_L(const GraphSlice& g, std::size_t L) {
  if (L < 1 || L > g.K())
    throw Error(ErrorKind::InvalidInput, "L must lie in [1, K]; got L=" + std::to_string(L));
}

const Edge& checked(const GraphSlice& g, const Edge& e) {
  if (!g.inside(e.dst))
    throw Error(ErrorKind::TruncationInsufficient, "walk leaves the slice (K=" + std::to_string(g.K()) + ")");
  return e;
}

}  // namespace

bool in_c(const GraphSlice& g, std::size_t L, WordView x) {
  require_L(g, L);
  if (x.empty() || x[0] != g.bprefix()[L - 1]) return false;
  std::size_t v = L;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const auto e = g.edge(v, x[i]);
    if (!e) return false;
    v = checked(g, *e).dst;
    if (v < L) return false;
  }
  return true;
}

bool in_g(const GraphSlice& g, std::size_t L, WordView w) {
  const auto r = walk(g, w);
  return r.accepted && r.vertices.back() < L;
}

namespace {

void extend_c(const GraphSlice& g, std::size_t L, std::size_t v, std::size_t n, Word& cur, std::vector<Word>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (const Edge& e : g.out_edges(v)) {
    if (e.dst < L) continue;
    checked(g, e);
    cur.push_back(e.label);
    extend_c(g, L, e.dst, n, cur, out);
    cur.pop_back();
  }
}

std::vector<Integer> restricted_step(const GraphSlice& g, std::size_t L, const std::vector<Integer>& cur) {
  std::vector<Integer> next(g.vertex_count());
  for (std::size_t v = 0; v < cur.size(); ++v) {
    if (cur[v] == 0) continue;
    for (const Edge& e : g.out_edges(v)) {
      if (e.dst < L) continue;
      next[checked(g, e).dst] += cur[v];
    }
  }
  return next;
}

// Length-`steps` path counts from `from` inside the graph restricted to
// vertices >= L, indexed by end vertex.
std::vector<Integer> restricted_counts(const GraphSlice& g, std::size_t L, std::size_t from, std::size_t steps) {
  std::vector<Integer> cur(g.vertex_count());
  cur[from] = 1;
  for (std::size_t s = 0; s < steps; ++s) cur = restricted_step(g, L, cur);
  return cur;
}

}  // namespace

std::vector<Word> c_words(const GraphSlice& g, std::size_t L, std::size_t n) {
  require_L(g, L);
  if (n == 0) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
  std::vector<Word> out;
  Word cur{g.bprefix()[L - 1]};
  extend_c(g, L, L, n, cur, out);
  return out;
}

Integer c_count(const GraphSlice& g, std::size_t L, std::size_t n) {
  require_L(g, L);
  if (n == 0) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
  Integer total = 0;
  for (const auto& c : restricted_counts(g, L, L, n - 1)) total += c;
  return total;
}

CProfile c_entropy_table(const GraphSlice& g, std::size_t Lmax, std::size_t nmax) {
  if (Lmax == 0 || nmax == 0) throw Error(ErrorKind::InvalidInput, "Lmax and nmax must be >= 1");
  require_L(g, Lmax);
  CProfile p;
  p.Lmax = Lmax;
  p.nmax = nmax;
  for (std::size_t L = 1; L <= Lmax; ++L) {
    std::vector<Integer> cur(g.vertex_count());
    cur[L] = 1;
    for (std::size_t n = 1; n <= nmax; ++n) {
      if (n > 1) cur = restricted_step(g, L, cur);
      Integer total = 0;
      for (const auto& c : cur) total += c;
      const double est = total > 0 ? log_of(total) / static_cast<double>(n) : 0.0;
      p.rows.push_back({L, n, total, est});
    }
  }
  return p;
}

std::size_t select_l_hat(const CProfile& profile, double epsilon) {
  for (std::size_t L = 1; L <= profile.Lmax; ++L) {
    bool ok = true;
    for (const auto& r : profile.rows)
      if (r.L == L && 2 * r.n >= profile.nmax && r.estimate > epsilon) ok = false;
    if (ok) return L;
  }
  throw Error(ErrorKind::NoLFound, "no L <= " + std::to_string(profile.Lmax) + " has tail estimates <= epsilon");
}

CProfile c_entropy_profile(const GraphSlice& g, std::size_t Lmax, std::size_t nmax, double epsilon) {
  CProfile p = c_entropy_table(g, Lmax, nmax);
  p.epsilon = epsilon;
  p.selected = select_l_hat(p, epsilon);
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> profile_monotonicity_violations(const CProfile& profile) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& r : profile.rows)
    for (const auto& s : profile.rows)
      if (s.L == r.L + 1 && s.n == r.n && s.count > r.count) out.emplace_back(r.L, r.n);
  return out;
}

std::string c_profile_csv(const CProfile& profile) {
  std::ostringstream os;
  os << "L,n,count,estimate\n";
  char buf[32];
  for (const auto& r : profile.rows) {
    std::snprintf(buf, sizeof buf, "%.6f", r.estimate);
    os << r.L << ',' << r.n << ',' << r.count.str() << ',' << buf << '\n';
  }
  return os.str();
}

CountMatrix count_matrix(const GraphSlice& g, std::size_t L, std::size_t n) {
  require_L(g, L);
  CountMatrix m;
  m.L = L;
  m.n = n;
  for (std::size_t v = L - 1; v + n <= g.K(); ++v) {
    // Leaving V_{L-1} is only possible along the spine, so a_0 counts C^(L)_n.
    const auto counts = restricted_counts(g, L, v, n);
    std::vector<Integer> row(counts.begin() + static_cast<std::ptrdiff_t>(L - 1), counts.end());
    Integer sum = 0;
    for (const auto& c : row) sum += c;
    m.a.push_back(std::move(row));
    m.row_sums.push_back(std::move(sum));
  }
  return m;
}

bool BoundReport::all_hold() const {
  return monotone && std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.holds; });
}

BoundReport bound_check(const GraphSlice& g, std::size_t N, std::size_t qmax) {
  if (qmax < 2) throw Error(ErrorKind::InvalidInput, "qmax must be >= 2");
  BoundReport r;
  r.N = N;
  const auto L = gap_scan(g, N);
  if (!L) throw Error(ErrorKind::TruncationInsufficient, "gap scan found no L inside the slice");
  r.L = std::max<std::size_t>(*L, 1);
  r.b = *std::max_element(g.bprefix().begin(), g.bprefix().end());
  r.high_region_nonempty = r.L <= g.K();
  const std::size_t top = qmax * N + 1;
  Integer prev = 0;
  for (std::size_t n = 1; n <= top; ++n) {
    const Integer a = c_count(g, r.L, n);
    if (a < prev) r.monotone = false;
    prev = a;
    if (n > 1 && (n - 1) % N == 0 && (n - 1) / N >= 2) {
      BoundRow row;
      row.q = (n - 1) / N;
      row.n = n;
      row.count = a;
      row.bound = boost::multiprecision::pow(Integer(r.b) * Integer(N), static_cast<unsigned>(2 * row.q - 3));
      row.holds = row.count <= row.bound;
      r.rows.push_back(std::move(row));
    }
  }
  return r;
}

std::pair<Word, Word> split(const GraphSlice& g, std::size_t L, WordView w) {
  require_L(g, L);
  const auto r = walk(g, w);
  if (!r.accepted) throw Error(ErrorKind::InvalidInput, format_word(w) + " is not admissible");
  std::size_t cut = 0;
  for (std::size_t j = 0; j < r.vertices.size(); ++j)
    if (r.vertices[j] < L) cut = j;
  return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut)),
          Word(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end())};
}

bool in_g_m(const GraphSlice& g, std::size_t L, std::size_t M, WordView w) {
  const auto r = walk(g, w);
  if (!r.accepted) return false;
  return split(g, L, w).second.size() <= M;
}

std::size_t t_gap(const GraphSlice& g, std::size_t M, std::size_t L) {
  if (L < 1) throw Error(ErrorKind::InvalidInput, "L must be >= 1");
  const auto dist = distances_to_v0(g);
  std::size_t t = 0;
  for (std::size_t i = 0; i + 1 <= M + L; ++i) {
    if (!g.inside(i) || !dist[i])
      throw Error(ErrorKind::TruncationInsufficient, "no path from V_" + std::to_string(i) + " to V_0 inside the slice");
    t = std::max(t, *dist[i]);
  }
  return t;
}

const char* to_string(GlueResult::Route r) noexcept {
  return r == GlueResult::Route::ShortestPath ? "shortest_path" : "search";
}

namespace {

std::size_t least_period(const Word& p) {
  for (std::size_t d = 1; d <= p.size(); ++d) {
    if (p.size() % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < p.size() && ok; ++i) ok = p[i] == p[i - d];
    if (ok) return d;
  }
  return p.size();
}

void finish(const ShiftSpec& spec, GlueResult& r) {
  r.glued.clear();
  r.block.clear();
  for (std::size_t i = 0; i < r.words.size(); ++i) {
    r.glued.insert(r.glued.end(), r.words[i].begin(), r.words[i].end());
    r.block.insert(r.block.end(), r.words[i].begin(), r.words[i].end());
    r.block.insert(r.block.end(), r.connectors[i].begin(), r.connectors[i].end());
    if (i + 1 < r.words.size()) r.glued.insert(r.glued.end(), r.connectors[i].begin(), r.connectors[i].end());
  }
  r.least_period = least_period(r.block);
  r.admissible = periodic_admissible(spec, r.block);
}

struct SearchState {
  const ShiftSpec& spec;
  const AdmissibilityChecker& chk;
  const std::vector<Word>& words;
  std::size_t t;
  std::vector<Word> connectors;
  Word block;
};

bool search_segment(SearchState& s, std::size_t seg, AdmissibilityChecker::State st) {
  if (seg == s.words.size()) {
    if (!periodic_admissible(s.spec, s.block)) return false;
    return true;
  }
  // Place w^seg, then choose v^seg symbol by symbol.
  const std::size_t mark = s.block.size();
  for (Digit a : s.words[seg]) {
    if (s.chk.advance(st, a) != AdmissibilityChecker::Verdict::Ok) {
      s.block.resize(mark);
      return false;
    }
    s.block.push_back(a);
  }
  auto& conn = s.connectors[seg];
  conn.clear();
  const auto fill = [&](auto& self, AdmissibilityChecker::State cur) -> bool {
    if (conn.size() == s.t) return search_segment(s, seg + 1, cur);
    for (Digit a = 1; a <= s.chk.alphabet(); ++a) {
      auto next = cur;
      if (s.chk.advance(next, a) != AdmissibilityChecker::Verdict::Ok) continue;
      conn.push_back(a);
      s.block.push_back(a);
      if (self(self, next)) return true;
      conn.pop_back();
      s.block.pop_back();
    }
    return false;
  };
  if (fill(fill, st)) return true;
  s.block.resize(mark);
  return false;
}

}  // namespace

std::optional<GlueResult> glue_search(const ShiftSpec& spec, const GraphSlice& g, const std::vector<Word>& words,
                                      std::size_t max_gap) {
  (void)g;
  if (words.empty()) throw Error(ErrorKind::InvalidInput, "nothing to glue");
  std::size_t total = 0;
  for (const auto& w : words) total += w.size();
  for (std::size_t t = 0; t <= max_gap; ++t) {
    const AdmissibilityChecker chk(spec, total + t * words.size());
    SearchState s{spec, chk, words, t, std::vector<Word>(words.size()), {}};
    if (search_segment(s, 0, {})) {
      GlueResult r;
      r.route = GlueResult::Route::Search;
      r.words = words;
      r.connectors = std::move(s.connectors);
      r.t = t;
      finish(spec, r);
      return r;
    }
  }
  return std::nullopt;
}

GlueResult glue(const ShiftSpec& spec, const GraphSlice& g, std::size_t L, std::size_t M,
                const std::vector<Word>& words, GlueOptions opts) {
  if (words.empty()) throw Error(ErrorKind::InvalidInput, "nothing to glue");
  for (const auto& w : words)
    if (!in_g_m(g, L, M, w)) throw Error(ErrorKind::NotInGM, format_word(w) + " is not in G(M)");
  const auto loop = g.edge(0, 1);
  if (!loop || loop->dst != 0) throw Error(ErrorKind::NoSelfLoop, "V_0 has no self-loop labelled 1 (b_1 = 1)");
  try {
    GlueResult r;
    r.t = t_gap(g, M, L);
    r.words = words;
    for (const auto& w : words) {
      const std::size_t end = walk(g, w).vertices.back();
      Word v = shortest_path_to_v0(g, end).labels;
      v.resize(r.t, 1);
      r.connectors.push_back(std::move(v));
    }
    finish(spec, r);
    return r;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TruncationInsufficient) throw;
    if (auto r = glue_search(spec, g, words, opts.max_search_gap)) return *r;
    throw Error(ErrorKind::TruncationInsufficient,
                std::string(e.what()) + "; connector search up to length " + std::to_string(opts.max_search_gap) +
                    " failed too");
  }
}

std::string glue_to_json(const GlueResult& r) {
  nlohmann::ordered_json j;
  j["route"] = to_string(r.route);
  auto& ws = j["words"] = nlohmann::ordered_json::array();
  for (const auto& w : r.words) ws.push_back(format_word(w));
  auto& cs = j["connectors"] = nlohmann::ordered_json::array();
  for (const auto& c : r.connectors) cs.push_back(format_word(c));
  j["t"] = r.t;
  j["glued"] = format_word(r.glued);
  j["period_block"] = format_word(r.block);
  j["period"] = r.block.size();
  j["least_period"] = r.least_period;
  j["admissible"] = r.admissible;
  return j.dump(2);
}

std::vector<Word> sample_gm_words(const GraphSlice& g, std::size_t L, std::size_t M, std::size_t count,
                                  std::size_t max_len, std::uint64_t seed) {
  if (max_len == 0) throw Error(ErrorKind::InvalidInput, "max_len must be >= 1");
  std::mt19937_64 rng(seed);
  std::set<Word> seen;
  std::vector<Word> out;
  const std::size_t attempts = 1000 * (count + 1);
  for (std::size_t a = 0; a < attempts && out.size() < count; ++a) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
    Word w;
    std::size_t v = 0;
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<Edge> options;
      for (const Edge& e : g.out_edges(v))
        if (g.inside(e.dst)) options.push_back(e);
      if (options.empty()) break;
      const Edge& e = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      w.push_back(e.label);
      v = e.dst;
    }
    if (w.empty() || !in_g_m(g, L, M, w)) continue;
    if (seen.insert(w).second) out.push_back(w);
  }
  return out;
}

}  // namespace negbeta
