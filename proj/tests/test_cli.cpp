#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cf/io.hpp"
#include "cli.hpp"

using namespace cf;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("scalar periodic ones") {
  const auto r = call({"scalar", "--terms", "[1,1,1]", "--periodic"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,gap,norm,inradius,residual\n", 0) == 0);
  CHECK(r.err.find("verdict: converged") != std::string::npos);
  CHECK(r.err.find("limit: 0.618033988749894") != std::string::npos);
}

TEST_CASE("set strip run with checks, json output") {
  const auto r = call({"set", "--terms", R"({"strip":1})", "--const", "--max-iter", "60", "--check",
                       "nec-suf,monotone", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = io::Json::parse(r.out);
  CHECK(doc["verdict"] == "converged");
  CHECK(doc["rows"].size() == 60);
  CHECK(doc["reports"][0]["criterion"] == "nec-suf");
  CHECK(doc["reports"][0]["verdict"] == "holds");
  // the emitted limit parses back to the same body
  const auto lim = io::body_from_json(doc["limit"]);
  CHECK(io::body_to_json(lim) == doc["limit"]);
}

TEST_CASE("function instances from the command line") {
  auto r = call({"func-lf", "--terms", R"({"quad":2})", "--const", "--check", "legendre-theorem,urr"});
  CHECK(r.code == 0);
  CHECK(r.err.find("check legendre-theorem: holds") != std::string::npos);
  r = call({"func-a", "--terms", R"([{"pl":{"points":[[0,0]],"left_slope":-2,"right_slope":2}}])", "--periodic"});
  CHECK(r.code == 0);
  CHECK(r.err.find("verdict: converged") != std::string::npos);
  r = call({"func-a", "--terms", R"({"quad":1})", "--const"});
  CHECK(r.code == cli::kExitInvalid);
}

TEST_CASE("invalid input exits 2 with a location") {
  auto r = call({"set", "--terms", R"([{"strip":1},{"segment":[[1,0],[2,0]]}])"});
  CHECK(r.code == cli::kExitInvalid);
  CHECK(r.err.find("terms[1].segment") != std::string::npos);
  CHECK(call({"set", "--terms", "{not json"}).code == cli::kExitInvalid);
  CHECK(call({"scalar", "--terms", "[1,-1]"}).code == cli::kExitInvalid);
  CHECK(call({"scalar", "--terms", "[1]", "--format", "xml"}).code == cli::kExitInvalid);
  CHECK(call({"scalar", "--terms", "[1,2]", "--check", "bogus"}).code == cli::kExitInvalid);
  CHECK(call({"bogus"}).code == cli::kExitInvalid);
  CHECK(call({"examples", "--run", "nope"}).code == cli::kExitInvalid);
  CHECK(call({"examples", "--run", "ball", "r"}).code == cli::kExitInvalid);
}

TEST_CASE("output files are deterministic") {
  const std::string a = "cli_det_a.csv";
  const std::string b = "cli_det_b.csv";
  const std::vector<std::string> base{"set", "--terms", R"([{"strip":1},{"ball":2,"sides":12}])", "--periodic",
                                      "--max-iter", "20", "--check", "monotone"};
  auto args = base;
  args.insert(args.end(), {"--output", a});
  REQUIRE(call(args).code == 0);
  args = base;
  args.insert(args.end(), {"--output", b});
  REQUIRE(call(args).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a + ".report.json") == slurp(b + ".report.json"));
  CHECK(slurp(a).find("inf") == std::string::npos);
  for (const auto& f : {a, b, a + ".report.json", b + ".report.json"}) std::remove(f.c_str());
}

TEST_CASE("infinite values are written as inf") {
  const auto r = call({"set", "--terms", R"({"segment":[[0,0],[1,0]]})", "--const", "--max-iter", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find(",inf,") != std::string::npos);
}

TEST_CASE("examples registry") {
  const auto r = call({"examples", "--list"});
  for (const char* name : {"ball", "segment", "strip", "seidel-counterexample", "three-segments",
                           "quadratic-function", "hp-selfpolar"}) {
    CHECK(r.out.find(name) != std::string::npos);
  }
  CHECK(call({"examples", "--run", "ball", "r=3"}).out.find("0.302775637731994") != std::string::npos);
  CHECK(call({"examples", "--run", "hp-selfpolar", "p=1"}).code == 0);
  CHECK(call({"examples", "--run", "seidel-counterexample"}).code == 0);
}

TEST_CASE("fuzz") {
  const auto r = call({"fuzz", "--kind", "a-xh", "--count", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 violations") != std::string::npos);
}
