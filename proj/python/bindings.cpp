#include "commands.hpp"
#include "negbeta/decomposition.hpp"
#include "negbeta/error.hpp"
#include "negbeta/factors.hpp"
#include "negbeta/graph.hpp"
#include "negbeta/language.hpp"
#include "negbeta/measures.hpp"
#include "negbeta/numeric.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace negbeta;

namespace {

BetaValue beta_of(const std::string& text, int bits) {
  if (text == "golden") return BetaValue::golden(bits);
  return BetaValue::exact(parse_rational(text));
}

py::int_ to_py(const Integer& z) { return py::int_(py::module_::import("builtins").attr("int")(to_string(z))); }

std::vector<std::string> strings(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(format_word(w));
  return out;
}

std::vector<Word> words(const std::vector<std::string>& ss) {
  std::vector<Word> out;
  for (const auto& s : ss) out.push_back(parse_word(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Negative beta shifts: expansions, languages, graphs, measures and factors.";

  py::register_exception<Error>(m, "NegbetaError", PyExc_ValueError);

  m.def(
      "expand",
      [](const std::string& beta, std::size_t n, const std::string& x, int bits) {
        const auto d = expand(beta_of(beta, bits), Interval(parse_rational(x)), n);
        py::dict r;
        r["digits"] = format_word(WordView(d.digits).first(d.certified));
        r["certified"] = d.certified;
        r["complete"] = d.status == CertifiedDigits::Status::Complete;
        return r;
      },
      py::arg("beta"), py::arg("n"), py::arg("x") = "1", py::arg("precision_bits") = 256);

  m.def(
      "classify",
      [](const std::string& beta, std::size_t horizon, int bits) {
        const auto c = classify_d1(beta_of(beta, bits), horizon);
        py::dict r;
        r["kind"] = to_string(c.kind);
        r["preperiod"] = format_word(c.preperiod_digits);
        r["period"] = format_word(c.period_digits);
        return r;
      },
      py::arg("beta"), py::arg("horizon") = 256, py::arg("precision_bits") = 256);

  py::class_<ShiftSpec>(m, "ShiftSpec")
      .def_static(
          "from_beta",
          [](const std::string& beta, std::size_t horizon, int bits) {
            return ShiftSpec::from_beta(beta_of(beta, bits), horizon);
          },
          py::arg("beta"), py::arg("horizon") = 256, py::arg("precision_bits") = 256)
      .def_static(
          "from_b",
          [](const std::string& b, bool two_sided) {
            auto seq = parse_b_sequence(b);
            if (two_sided) {
              if (!seq.periodic()) throw Error(ErrorKind::InvalidInput, "two-sided needs a periodic b sequence");
              return ShiftSpec::two_sided(*seq.periodic(), b);
            }
            return ShiftSpec::one_sided(std::move(seq), b);
          },
          py::arg("b"), py::arg("two_sided") = false)
      .def_property_readonly("alphabet", &ShiftSpec::alphabet)
      .def_property_readonly("two_sided", [](const ShiftSpec& s) { return s.two_sided(); })
      .def("describe", &ShiftSpec::describe)
      .def("__repr__", [](const ShiftSpec& s) { return "<ShiftSpec " + s.describe() + ">"; })
      .def("is_admissible", [](const ShiftSpec& s, const std::string& w) {
        return std::string(to_string(is_admissible(s, parse_word(w))));
      })
      .def("words", [](const ShiftSpec& s, std::size_t n) { return strings(enumerate_words(s, n)); })
      .def("periodic_points", [](const ShiftSpec& s, std::size_t n) { return strings(per_points(s, n)); })
      .def("count_words", [](const ShiftSpec& s, std::size_t nmax) {
        py::list out;
        for (const auto& r : count_words(s, nmax).rows) out.append(to_py(r.words));
        return out;
      })
      .def("per_count", [](const ShiftSpec& s, std::size_t n) { return to_py(per_count(s, n)); })
      .def("htop", [](const ShiftSpec& s, std::size_t nmax) { return htop_estimate(s, nmax).value; });

  py::class_<GraphSlice>(m, "GraphSlice")
      .def(py::init([](const ShiftSpec& s, std::size_t K) { return build_graph(s, K); }), py::arg("spec"),
           py::arg("K"))
      .def_property_readonly("K", &GraphSlice::K)
      .def("dot", &graph_to_dot)
      .def("json", &graph_to_json)
      .def("path_count", [](const GraphSlice& g, std::size_t n) { return to_py(path_count(g, n)); })
      .def("walk",
           [](const GraphSlice& g, const std::string& w) {
             const auto r = walk(g, parse_word(w));
             return py::make_tuple(r.accepted, r.vertices);
           })
      .def("gap_scan", [](const GraphSlice& g, std::size_t N) { return gap_scan(g, N); })
      .def("c_count", [](const GraphSlice& g, std::size_t L, std::size_t n) { return to_py(c_count(g, L, n)); })
      .def("split", [](const GraphSlice& g, std::size_t L, const std::string& w) {
        const auto [u, v] = split(g, L, parse_word(w));
        return py::make_tuple(format_word(u), format_word(v));
      });

  m.def(
      "glue",
      [](const ShiftSpec& s, const GraphSlice& g, std::size_t L, std::size_t M, const std::vector<std::string>& ws) {
        const auto r = glue(s, g, L, M, words(ws));
        py::dict d;
        d["block"] = format_word(r.block);
        d["connectors"] = strings(r.connectors);
        d["t"] = r.t;
        d["route"] = to_string(r.route);
        d["admissible"] = r.admissible;
        return d;
      },
      py::arg("spec"), py::arg("graph"), py::arg("L"), py::arg("M"), py::arg("words"));

  m.def(
      "mu_n",
      [](const ShiftSpec& s, std::size_t n, std::size_t m_len) {
        const auto mu = mu_n(s, n, m_len);
        py::dict masses;
        for (const auto& [w, c] : mu.counts) masses[py::str(format_word(w))] = to_string(mu.mass(w));
        return masses;
      },
      py::arg("spec"), py::arg("n"), py::arg("m"));

  m.def(
      "verify_factor",
      [](const ShiftSpec& s, std::size_t depth) { return factor_report_json(verify_factor(build_code(s), s, depth)); },
      py::arg("spec"), py::arg("depth"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int rc = cli::run(args, out, err);
        return py::make_tuple(rc, out.str(), err.str());
      },
      py::arg("args"));
}
