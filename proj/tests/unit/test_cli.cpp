#include "../../tools/commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using negbeta::cli::run;

namespace {

struct Outcome {
  int rc;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int rc = run(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand") {
  const auto r = call({"expand", "--beta", "13/10", "--n", "8"});
  REQUIRE(r.rc == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["format_version"] == negbeta::cli::kFormatVersion);
  CHECK(j["config"]["beta"] == "13/10");
  CHECK(j["digits"] == "21122222");
  CHECK(j["golden_side"] == "Below");
  const auto g = nlohmann::json::parse(call({"expand", "--beta", "golden", "--n", "5"}).out);
  CHECK(g["digits"] == "21111");
  CHECK(g["classification"]["kind"] == "EventuallyPeriodic");
}

TEST_CASE("output is reproducible") {
  const std::vector<std::string> args{"graph", "--beta", "41/16", "--K", "5", "--format", "dot"};
  const auto a = call(args), b = call(args);
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("// format: negbeta-output/1\n", 0) == 0);
  CHECK(a.out.find("V4 -> V5 [label=\"1\"];") != std::string::npos);
}

TEST_CASE("entropy csv") {
  const auto r = call({"entropy", "--beta", "golden", "--n", "10", "--format", "csv"});
  REQUIRE(r.rc == 0);
  CHECK(r.out.find("# format: negbeta-output/1") == 0);
  CHECK(r.out.find("10,232,122,") != std::string::npos);
  CHECK(r.out.find("L,n,count,estimate") != std::string::npos);
}

TEST_CASE("glue and measure") {
  auto r = call({"glue", "--beta", "golden", "--L", "2", "--M", "4", "--words", "21,122,2"});
  REQUIRE(r.rc == 0);
  CHECK(nlohmann::json::parse(r.out)["glue"]["admissible"] == true);
  r = call({"measure", "--beta", "golden", "--ns", "4,6,8", "--m", "2", "--format", "csv"});
  REQUIRE(r.rc == 0);
  CHECK(r.out.find("6,17,0.0392157,6/17,3/17,3/17,5/17") != std::string::npos);
}

TEST_CASE("factor") {
  auto r = call({"factor", "--beta", "2", "--depth", "8"});
  CHECK(r.rc == 0);
  CHECK(nlohmann::json::parse(r.out)["report"]["passed"] == true);
  r = call({"factor", "--beta", "golden", "--depth", "8"});
  CHECK(r.rc == 2);
  CHECK(r.err.find("no factor construction applies") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(call({"expand", "--beta", "0.5"}).rc == 2);
  CHECK(call({"expand", "--beta", "abc"}).rc == 2);
  CHECK(call({"nosuchverb"}).rc == 2);
  CHECK(call({"graph", "--beta", "2", "--K", "4"}).rc == 2);
  CHECK(call({"graph", "--beta", "13/10", "--K", "300", "--horizon", "256"}).rc == 3);
  CHECK(call({"glue", "--beta", "41/16", "--L", "2", "--M", "0", "--words", "323"}).rc == 2);
}

TEST_CASE("--out and --b-file") {
  const std::string bfile = "negbeta_cli_b.txt", out = "negbeta_cli_out.json";
  {
    std::ofstream f(bfile);
    f << "3|2\n";
  }
  const auto r = call({"graph", "--b-file", bfile, "--K", "3", "--format", "json", "--out", out});
  CHECK(r.rc == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["config"]["b_file"] == bfile);
  std::remove(bfile.c_str());
  std::remove(out.c_str());
}
