#include "commands.hpp"

#include "negbeta/decomposition.hpp"
#include "negbeta/error.hpp"
#include "negbeta/factors.hpp"
#include "negbeta/graph.hpp"
#include "negbeta/measures.hpp"
#include "negbeta/numeric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace negbeta::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string verb;
  std::string beta;
  std::string b_file;
  bool two_sided = false;
  std::size_t K = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t L = 0;
  std::size_t M = 0;
  double epsilon = 0.3;
  std::size_t depth = 0;
  int precision_bits = 256;
  std::size_t horizon = 256;
  std::string out;
  std::string format;
  std::string words_file;
  std::vector<std::string> words;
  std::string word;
  std::vector<std::size_t> ns;

  Json to_json() const {
    Json j;
    j["verb"] = verb;
    if (!beta.empty()) j["beta"] = beta;
    if (!b_file.empty()) j["b_file"] = b_file;
    j["two_sided"] = two_sided;
    j["K"] = K;
    j["n"] = n;
    j["m"] = m;
    j["L"] = L;
    j["M"] = M;
    j["epsilon"] = fixed(epsilon);
    j["depth"] = depth;
    j["precision_bits"] = precision_bits;
    j["horizon"] = horizon;
    j["format"] = format;
    if (!words_file.empty()) j["words_file"] = words_file;
    if (!words.empty()) j["words"] = words;
    if (!word.empty()) j["word"] = word;
    if (!ns.empty()) j["ns"] = ns;
    return j;
  }

  static std::string fixed(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
  }
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed(double x) { return RunConfig::fixed(x); }

BetaValue parse_beta(const RunConfig& c) {
  if (c.beta == "golden") return BetaValue::golden(c.precision_bits);
  return BetaValue::exact(parse_rational(c.beta));
}

ShiftSpec make_spec(const RunConfig& c) {
  if (c.beta.empty() == c.b_file.empty())
    throw Error(ErrorKind::InvalidInput, "give exactly one of --beta and --b-file");
  if (!c.beta.empty()) return ShiftSpec::from_beta(parse_beta(c), c.horizon);
  BoundSequence b = load_b_file(c.b_file);
  if (c.two_sided) {
    if (!b.periodic()) throw Error(ErrorKind::InvalidInput, "--two-sided needs a periodic b sequence");
    return ShiftSpec::two_sided(*b.periodic(), c.b_file);
  }
  return ShiftSpec::one_sided(std::move(b), c.b_file);
}

std::string comment_header(const RunConfig& c, const std::string& lead) {
  return lead + " format: " + kFormatVersion + "\n" + lead + " config: " + c.to_json().dump() + "\n";
}

Json json_header(const RunConfig& c) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["config"] = c.to_json();
  return j;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + c.out);
  f << text;
}

Json parse_json(const std::string& s) { return Json::parse(s); }

std::string cmd_expand(const RunConfig& c) {
  if (c.beta.empty()) throw Error(ErrorKind::InvalidInput, "expand needs --beta");
  const BetaValue beta = parse_beta(c);
  const auto d = expand(beta, Interval(Rational(1)), c.n);
  const auto cls = classify_d1(beta, c.horizon);
  Json j = json_header(c);
  j["beta"] = beta.label();
  j["digits"] = format_word(WordView(d.digits).first(d.certified));
  j["certified"] = d.certified;
  j["status"] = d.status == CertifiedDigits::Status::Complete ? "complete" : "precision_exhausted";
  j["precision_bits"] = d.precision_bits;
  Json cj;
  cj["kind"] = to_string(cls.kind);
  cj["preperiod"] = format_word(cls.preperiod_digits);
  cj["period"] = format_word(cls.period_digits);
  cj["horizon"] = cls.horizon;
  j["classification"] = cj;
  try {
    j["golden_side"] = to_string(golden_test(beta));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Undecidable) throw;
    j["golden_side"] = "undecidable";
  }
  if (c.format == "text") return comment_header(c, "#") + j["digits"].get<std::string>() + "\n";
  if (d.status != CertifiedDigits::Status::Complete)
    throw Error(ErrorKind::PrecisionExhausted, "only " + std::to_string(d.certified) + " digits certified");
  return j.dump(2) + "\n";
}

std::string cmd_graph(const RunConfig& c) {
  const ShiftSpec spec = make_spec(c);
  const GraphSlice g = build_graph(spec, c.K);
  if (c.format == "dot") {
    std::string s = comment_header(c, "//") + graph_to_dot(g);
    if (!c.word.empty()) {
      const auto r = walk(g, parse_word(c.word));
      s += "// walk " + c.word + ": " + (r.accepted ? "accepted, ends at V_" + std::to_string(r.vertices.back())
                                                     : "rejected at position " + std::to_string(r.rejected_at + 1)) +
           "\n";
    }
    return s;
  }
  Json j = json_header(c);
  j["spec"] = spec.describe();
  j["graph"] = parse_json(graph_to_json(g));
  Json counts = Json::array();
  for (std::size_t n = 0; n <= std::min(c.n, c.K); ++n) counts.push_back({{"n", n}, {"paths", path_count(g, n).str()}});
  j["path_counts"] = counts;
  if (const auto gap = gap_scan(g, std::max<std::size_t>(c.M, 1)))
    j["gap_scan"] = {{"N", std::max<std::size_t>(c.M, 1)}, {"L", *gap}};
  if (!c.word.empty()) {
    const auto r = walk(g, parse_word(c.word));
    Json w;
    w["word"] = c.word;
    w["accepted"] = r.accepted;
    Json vs = Json::array();
    for (auto v : r.vertices) vs.push_back("V" + std::to_string(v));
    w["vertices"] = vs;
    if (!r.accepted) w["rejected_at"] = r.rejected_at + 1;
    j["walk"] = w;
  }
  return j.dump(2) + "\n";
}

std::string cmd_entropy(const RunConfig& c) {
  const ShiftSpec spec = make_spec(c);
  const auto table = count_words(spec, c.n);
  const auto prof = entropy_profile(table);
  std::optional<CProfile> cprof;
  std::string cprof_note;
  if (!spec.two_sided()) {
    const std::size_t K = std::max(c.K, c.L + c.n + 1);
    const GraphSlice g = build_graph(spec, K);
    cprof = c_entropy_table(g, c.L, c.n);
    try {
      cprof->epsilon = c.epsilon;
      cprof->selected = select_l_hat(*cprof, c.epsilon);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoLFound) throw;
      cprof_note = "no L <= " + std::to_string(c.L) + " meets epsilon";
    }
  } else {
    cprof_note = "decomposition profile needs a one-sided spec";
  }
  if (c.format == "json") {
    Json j = json_header(c);
    j["spec"] = spec.describe();
    Json rows = Json::array();
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      const auto& r = table.rows[i];
      Json row{{"n", r.n}, {"count_L", r.words.str()}, {"estimate_L", fixed(prof[i].words)}};
      if (r.periodic) row["count_Per"] = r.periodic->str();
      if (prof[i].periodic) row["estimate_Per"] = fixed(*prof[i].periodic);
      rows.push_back(row);
    }
    j["language"] = rows;
    j["htop_estimate"] = fixed(prof.back().words);
    if (cprof) {
      Json crow = Json::array();
      for (const auto& r : cprof->rows)
        crow.push_back({{"L", r.L}, {"n", r.n}, {"count", r.count.str()}, {"estimate", fixed(r.estimate)}});
      j["c_profile"] = crow;
      if (cprof->selected) j["L_hat"] = *cprof->selected;
    }
    if (!cprof_note.empty()) j["note"] = cprof_note;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << comment_header(c, "#");
  os << "n,count_L,count_Per,estimate_L,estimate_Per\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    os << r.n << ',' << r.words.str() << ',' << (r.periodic ? r.periodic->str() : "") << ',' << fixed(prof[i].words)
       << ',' << (prof[i].periodic ? fixed(*prof[i].periodic) : "") << '\n';
  }
  if (cprof) {
    os << '\n' << c_profile_csv(*cprof);
    if (cprof->selected) os << "# L_hat: " << *cprof->selected << '\n';
  }
  if (!cprof_note.empty()) os << "# note: " << cprof_note << '\n';
  os << "# htop_estimate: " << fixed(prof.back().words) << '\n';
  return os.str();
}

std::vector<Word> read_words(const RunConfig& c) {
  std::vector<Word> out;
  for (const auto& w : c.words) out.push_back(parse_word(w));
  if (!c.words_file.empty()) {
    std::ifstream in(c.words_file);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + c.words_file);
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(parse_word(line));
    }
  }
  if (out.empty()) throw Error(ErrorKind::InvalidInput, "glue needs --words or --words-file");
  return out;
}

std::string cmd_glue(const RunConfig& c) {
  const ShiftSpec spec = make_spec(c);
  const auto words = read_words(c);
  std::size_t longest = 0;
  for (const auto& w : words) longest = std::max(longest, w.size());
  const GraphSlice g = build_graph(spec, std::max(c.K, c.L + c.M + longest + 2));
  const auto r = glue(spec, g, c.L, c.M, words);
  Json j = json_header(c);
  j["spec"] = spec.describe();
  j["glue"] = parse_json(glue_to_json(r));
  if (!r.admissible) throw VerificationFailure(j.dump(2));
  return j.dump(2) + "\n";
}

std::string cmd_measure(const RunConfig& c) {
  const ShiftSpec spec = make_spec(c);
  const auto mu = mu_n(spec, c.n, c.m);
  const auto h = htop_estimate(spec, c.n);
  std::vector<Word> gwords;
  std::string gnote;
  if (!spec.two_sided()) {
    const GraphSlice g = build_graph(spec, std::max(c.K, c.m + c.L + 1));
    for (std::size_t len = 1; len <= c.m; ++len)
      for (auto& w : enumerate_words(spec, len))
        if (in_g(g, c.L, w)) gwords.push_back(std::move(w));
  } else {
    gnote = "G-words need a one-sided spec; lower Gibbs bound not evaluated";
  }
  const auto gibbs = gibbs_check(mu, gwords, h.value);
  std::vector<std::size_t> ns = c.ns;
  if (ns.empty())
    for (std::size_t n = std::max<std::size_t>(c.m, 2); n <= c.n; n += 2) ns.push_back(n);
  const auto ws = weakstar_diagnostic(spec, ns, c.m);

  if (c.format == "csv") {
    std::ostringstream os;
    os << comment_header(c, "#");
    os << "word,mass,gibbs_ratio\n";
    for (const auto& r : gibbs.upper) os << format_word(r.word) << ',' << to_string(mu.mass(r.word)) << ',' << fixed(r.ratio) << '\n';
    os << '\n' << weakstar_csv(ws);
    return os.str();
  }
  Json j = json_header(c);
  j["spec"] = spec.describe();
  j["measure"] = parse_json(measure_to_json(mu));
  j["checks"] = {{"normalization", check_normalization(mu)},
                 {"kolmogorov", check_kolmogorov(mu)},
                 {"shift_invariance", check_shift_invariance(mu)}};
  j["htop_estimate"] = fixed(h.value);
  j["measure_entropy_estimate"] = fixed(measure_entropy_estimate(mu, c.m));
  Json gj;
  gj["h"] = fixed(gibbs.h);
  gj["max_ratio"] = fixed(gibbs.max_ratio);
  if (gibbs.min_ratio) gj["min_ratio_g_words"] = fixed(*gibbs.min_ratio);
  gj["g_words"] = gwords.size();
  gj["lower_bound_failure"] = gibbs.lower_bound_failure;
  gj["implied_K"] = std::isinf(gibbs.implied_K) ? "inf" : fixed(gibbs.implied_K);
  gj["tolerances"] = "heuristic";
  if (!gnote.empty()) gj["note"] = gnote;
  j["gibbs"] = gj;
  Json wj = Json::array();
  for (const auto& r : ws.rows) {
    Json row{{"n", r.n}};
    row["per_count"] = r.per_count ? Json(r.per_count->str()) : Json("empty");
    if (r.max_deviation) row["max_deviation"] = fixed(*r.max_deviation);
    wj.push_back(row);
  }
  j["weakstar"] = wj;
  return j.dump(2) + "\n";
}

std::string cmd_factor(const RunConfig& c) {
  const ShiftSpec spec = make_spec(c);
  const SlidingBlockCode code = build_code(spec);
  const auto report = verify_factor(code, spec, c.depth);
  Json j = json_header(c);
  j["spec"] = spec.describe();
  j["report"] = parse_json(factor_report_json(report));
  if (!report.passed()) throw VerificationFailure(j.dump(2));
  return j.dump(2) + "\n";
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::TruncationInsufficient:
    case ErrorKind::PrecisionExhausted:
    case ErrorKind::PrefixTooShort:
    case ErrorKind::SpecPrefixTooShort:
    case ErrorKind::HorizonExhausted:
      return kTruncation;
    case ErrorKind::OddK:
      return kVerificationFailed;
    default:
      return kInvalidInput;
  }
}

struct VerbDefaults {
  std::size_t K, n, m, L, M, depth;
  const char* format;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic dynamics of negative beta-transformations"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_verb = [&](const char* name, const char* help, VerbDefaults d, std::vector<std::string> formats) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--beta", cfg.beta, "beta as p/q, an exact decimal, or 'golden'");
    sub->add_option("--b-file", cfg.b_file, "file with b digits, optionally PRE|PER")->check(CLI::ExistingFile);
    sub->add_flag("--two-sided", cfg.two_sided, "treat a periodic --b-file as the odd-period two-sided case");
    sub->add_option("--K", cfg.K, "graph truncation depth");
    sub->add_option("--n", cfg.n, "length, period, or nmax");
    sub->add_option("--m", cfg.m, "cylinder length");
    sub->add_option("--L", cfg.L, "low-vertex cutoff (Lmax for entropy)");
    sub->add_option("--M", cfg.M, "tail bound for G(M); gap N for graph");
    sub->add_option("--epsilon", cfg.epsilon, "entropy target");
    sub->add_option("--depth", cfg.depth, "exhaustive verification depth");
    sub->add_option("--precision-bits", cfg.precision_bits, "initial enclosure precision")->check(CLI::Range(2, 1 << 20));
    sub->add_option("--horizon", cfg.horizon, "digits of d(1) to examine")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--words", cfg.words, "words to glue, comma separated")->delimiter(',');
    sub->add_option("--words-file", cfg.words_file, "file with one word per line")->check(CLI::ExistingFile);
    sub->add_option("--word", cfg.word, "word to walk");
    sub->add_option("--ns", cfg.ns, "periods for the weak* table")->delimiter(',');
    sub->callback([&cfg, name, d] {
      cfg.verb = name;
      if (cfg.format.empty()) cfg.format = d.format;
    });
    return sub;
  };

  const std::vector<std::pair<const char*, VerbDefaults>> defaults = {
      {"expand", {0, 20, 0, 0, 0, 0, "json"}},   {"graph", {10, 10, 0, 0, 1, 0, "dot"}},
      {"entropy", {0, 14, 0, 8, 0, 0, "csv"}},   {"glue", {24, 0, 0, 2, 4, 0, "json"}},
      {"measure", {24, 12, 4, 2, 0, 0, "json"}}, {"factor", {0, 0, 0, 0, 0, 10, "json"}},
  };
  add_verb("expand", "digits of d(x=1), classification and golden test", defaults[0].second, {"json", "text"});
  add_verb("graph", "graph presentation slice", defaults[1].second, {"dot", "json"});
  add_verb("entropy", "word counts and entropy profiles", defaults[2].second, {"csv", "json"});
  add_verb("glue", "glue words into a periodic point", defaults[3].second, {"json"});
  add_verb("measure", "periodic-orbit measure with Gibbs and weak* reports", defaults[4].second, {"json", "csv"});
  add_verb("factor", "sliding block code onto X and its verification", defaults[5].second, {"json"});

  // Numeric defaults depend on the verb, so they are preset before parsing.
  std::string verb = args.empty() ? "" : args.front();
  for (const auto& [name, d] : defaults) {
    if (verb != name) continue;
    cfg.K = d.K;
    cfg.n = d.n;
    cfg.m = d.m;
    cfg.L = d.L;
    cfg.M = d.M;
    cfg.depth = d.depth;
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    std::string text;
    if (cfg.verb == "expand") text = cmd_expand(cfg);
    else if (cfg.verb == "graph") text = cmd_graph(cfg);
    else if (cfg.verb == "entropy") text = cmd_entropy(cfg);
    else if (cfg.verb == "glue") text = cmd_glue(cfg);
    else if (cfg.verb == "measure") text = cmd_measure(cfg);
    else if (cfg.verb == "factor") text = cmd_factor(cfg);
    emit(cfg, text, out);
    return kOk;
  } catch (const VerificationFailure& e) {
    emit(cfg, std::string(e.what()) + "\n", out);
    err << "error: verification failed\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace negbeta::cli
