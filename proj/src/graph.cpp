#include "negbeta/graph.hpp"

#include "negbeta/error.hpp"
#include "negbeta/order.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

namespace negbeta {

std::size_t k_of(WordView bprefix, WordView w) {
  if (bprefix.empty()) throw Error(ErrorKind::PrefixTooShort, "empty bound prefix");
  const BoundMatcher m(Word(bprefix.begin(), bprefix.end()));
  std::size_t k = 0;
  for (Digit a : w) k = m.next(k == m.size() ? m.border(k) : k, a);
  return k;
}

GraphSlice::GraphSlice(std::size_t K, Word bprefix, std::vector<std::vector<Edge>> out)
    : K_(K), bprefix_(std::move(bprefix)), out_(std::move(out)) {
  for (auto& v : out_) std::sort(v.begin(), v.end(), [](const Edge& a, const Edge& b) { return a.label < b.label; });
}

std::optional<Edge> GraphSlice::edge(std::size_t i, Digit a) const {
  for (const Edge& e : out_.at(i))
    if (e.label == a) return e;
  return std::nullopt;
}

std::vector<Edge> GraphSlice::edges() const {
  std::vector<Edge> all;
  for (const auto& v : out_) all.insert(all.end(), v.begin(), v.end());
  return all;
}

GraphSlice build_graph(const ShiftSpec& spec, std::size_t K) {
  if (spec.two_sided()) throw Error(ErrorKind::TwoSidedUnsupported, "graph presentation covers one-sided shifts only");
  if (const auto len = spec.upper().known_length(); len && *len < K + 2)
    throw Error(ErrorKind::PrefixTooShort, "K=" + std::to_string(K) + " needs " + std::to_string(K + 2) +
                                               " symbols of b, have " + std::to_string(*len));
  const Word b = spec.upper().prefix(K + 1);
  const AdmissibilityChecker chk(spec, K + 1);
  std::vector<std::vector<Edge>> out(K + 1);
  for (std::size_t i = 0; i <= K; ++i) {
    const Digit next = b[i];
    out[i].push_back({i, i + 1, next, true});
    for (Digit a = 1; a <= spec.alphabet(); ++a) {
      if (a == next) continue;
      // After reading b_1..b_i the matcher sits at i.
      AdmissibilityChecker::State st{static_cast<std::uint32_t>(i), 0};
      if (chk.advance(st, a) != AdmissibilityChecker::Verdict::Ok) continue;
      const bool odd = i % 2 == 1;
      if ((odd && a < next + 1) || (!odd && a > next - 1))
        throw std::logic_error("edge parity violated at V_" + std::to_string(i));
      out[i].push_back({i, st.upper, a, false});
    }
  }
  return GraphSlice(K, b, std::move(out));
}

WalkResult walk(const GraphSlice& g, WordView w, std::size_t start) {
  if (!g.inside(start)) throw Error(ErrorKind::TruncationInsufficient, "start vertex outside the slice");
  WalkResult r;
  r.vertices.push_back(start);
  std::size_t v = start;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto e = g.edge(v, w[i]);
    if (!e) {
      r.rejected_at = i;
      return r;
    }
    if (!g.inside(e->dst))
      throw Error(ErrorKind::TruncationInsufficient,
                  "walk leaves the slice at position " + std::to_string(i + 1) + " (K=" + std::to_string(g.K()) + ")");
    v = e->dst;
    r.vertices.push_back(v);
  }
  r.accepted = true;
  r.rejected_at = w.size();
  return r;
}

namespace {

void collect_followers(const AdmissibilityChecker& chk, AdmissibilityChecker::State st, std::size_t depth, Word& cur,
                       std::vector<Word>& out) {
  if (cur.size() == depth) {
    out.push_back(cur);
    return;
  }
  for (Digit a = 1; a <= chk.alphabet(); ++a) {
    auto next = st;
    const auto v = chk.advance(next, a);
    if (v == AdmissibilityChecker::Verdict::Reject) continue;
    if (v == AdmissibilityChecker::Verdict::Undetermined)
      throw Error(ErrorKind::SpecPrefixTooShort, "bound prefix too short for the follower comparison");
    cur.push_back(a);
    collect_followers(chk, next, depth, cur, out);
    cur.pop_back();
  }
}

std::vector<Word> followers(const ShiftSpec& spec, WordView w, std::size_t depth) {
  const AdmissibilityChecker chk(spec, w.size() + depth);
  AdmissibilityChecker::State st;
  for (Digit a : w)
    if (chk.advance(st, a) != AdmissibilityChecker::Verdict::Ok)
      throw Error(ErrorKind::InvalidInput, format_word(w) + " is not admissible");
  std::vector<Word> out;
  Word cur;
  collect_followers(chk, st, depth, cur, out);
  return out;
}

}  // namespace

FollowerReport follower_equiv_check(const ShiftSpec& spec, WordView w, WordView w2, std::size_t depth) {
  FollowerReport r;
  const Word b = spec.upper().prefix(std::max(w.size(), w2.size()) + 1);
  r.k_first = k_of(b, w);
  r.k_second = k_of(b, w2);
  const auto f1 = followers(spec, w, depth);
  const auto f2 = followers(spec, w2, depth);
  r.followers_first = f1.size();
  r.followers_second = f2.size();
  // Both lists are lexicographic; the first disagreement is a witness.
  std::size_t i = 0, j = 0;
  while (i < f1.size() || j < f2.size()) {
    if (i < f1.size() && j < f2.size() && f1[i] == f2[j]) {
      ++i;
      ++j;
      continue;
    }
    r.equal = false;
    if (j == f2.size() || (i < f1.size() && f1[i] < f2[j]))
      r.counterexample = f1[i];
    else
      r.counterexample = f2[j];
    break;
  }
  return r;
}

std::vector<std::optional<std::size_t>> distances_to_v0(const GraphSlice& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> rev(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const Edge& e : g.out_edges(i))
      if (g.inside(e.dst)) rev[e.dst].push_back(i);
  std::vector<std::optional<std::size_t>> dist(n);
  std::deque<std::size_t> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u : rev[v]) {
      if (dist[u]) continue;
      dist[u] = *dist[v] + 1;
      queue.push_back(u);
    }
  }
  return dist;
}

PathWord shortest_path_to_v0(const GraphSlice& g, std::size_t i) {
  if (!g.inside(i)) throw Error(ErrorKind::TruncationInsufficient, "vertex outside the slice");
  const auto dist = distances_to_v0(g);
  if (!dist[i])
    throw Error(ErrorKind::TruncationInsufficient,
                "no path from V_" + std::to_string(i) + " to V_0 inside the slice (K=" + std::to_string(g.K()) + ")");
  PathWord p;
  p.length = *dist[i];
  std::size_t v = i;
  while (v != 0) {
    for (const Edge& e : g.out_edges(v)) {
      if (g.inside(e.dst) && dist[e.dst] && *dist[e.dst] + 1 == *dist[v]) {
        p.labels.push_back(e.label);
        v = e.dst;
        break;
      }
    }
  }
  return p;
}

std::optional<std::size_t> gap_scan(const GraphSlice& g, std::size_t N) {
  if (N == 0) throw Error(ErrorKind::InvalidInput, "N must be >= 1");
  std::optional<std::size_t> L;
  for (std::size_t k = g.K() + 1; k-- > 0;) {
    bool short_drop = false;
    for (const Edge& e : g.out_edges(k))
      if (e.dst <= k && k - e.dst <= N) short_drop = true;
    if (short_drop) break;
    L = k;
  }
  return L;
}

Integer path_count(const GraphSlice& g, std::size_t n, std::size_t from) {
  if (!g.inside(from)) throw Error(ErrorKind::TruncationInsufficient, "start vertex outside the slice");
  std::vector<Integer> cur(g.vertex_count());
  cur[from] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Integer> next(g.vertex_count());
    for (std::size_t v = 0; v < cur.size(); ++v) {
      if (cur[v] == 0) continue;
      for (const Edge& e : g.out_edges(v)) {
        if (!g.inside(e.dst))
          throw Error(ErrorKind::TruncationInsufficient,
                      "paths of length " + std::to_string(n) + " leave the slice (K=" + std::to_string(g.K()) + ")");
        next[e.dst] += cur[v];
      }
    }
    cur = std::move(next);
  }
  Integer total = 0;
  for (const auto& c : cur) total += c;
  return total;
}

namespace {

void extend_paths(const GraphSlice& g, std::size_t v, std::size_t n, Word& cur, std::vector<Word>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (const Edge& e : g.out_edges(v)) {
    if (!g.inside(e.dst))
      throw Error(ErrorKind::TruncationInsufficient, "path enumeration leaves the slice");
    cur.push_back(e.label);
    extend_paths(g, e.dst, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> path_words(const GraphSlice& g, std::size_t n, std::size_t from) {
  std::vector<Word> out;
  Word cur;
  extend_paths(g, from, n, cur, out);
  return out;
}

std::string graph_to_dot(const GraphSlice& g) {
  std::ostringstream os;
  os << "digraph G {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) os << "  V" << i << ";\n";
  for (const Edge& e : g.edges()) {
    os << "  V" << e.src << " -> V" << e.dst << " [label=\"" << e.label << "\"";
    if (!g.inside(e.dst)) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string graph_to_json(const GraphSlice& g) {
  nlohmann::ordered_json j;
  j["K"] = g.K();
  j["b_prefix"] = format_word(g.bprefix());
  auto& verts = j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    nlohmann::ordered_json v;
    v["id"] = "V" + std::to_string(i);
    v["complete"] = g.complete(i);
    auto& es = v["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : g.out_edges(i))
      es.push_back({{"to", "V" + std::to_string(e.dst)}, {"label", e.label}, {"spine", e.spine},
                    {"inside", g.inside(e.dst)}});
    verts.push_back(std::move(v));
  }
  return j.dump(2);
}

BoundSequence parse_b_sequence(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) return BoundSequence(parse_word(text));
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw Error(ErrorKind::InvalidInput, "more than one '|' in b sequence");
  const auto pre_text = text.substr(0, bar);
  const bool pre_blank = pre_text.find_first_not_of(" \t\r\n,") == std::string_view::npos;
  Word pre = pre_blank ? Word{} : parse_word(pre_text);
  Word per = parse_word(text.substr(bar + 1));
  return BoundSequence(EvPeriodicSeq(std::move(pre), std::move(per)));
}

BoundSequence load_b_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    ss << line << ' ';
  }
  return parse_b_sequence(ss.str());
}

}  // namespace negbeta
