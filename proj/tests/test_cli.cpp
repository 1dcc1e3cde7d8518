#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

namespace cli = dimdatum::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dimdatum");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("verify-lemma") {
  const auto r = invoke({"verify-lemma", "--n", "1", "--bound", "2"});
  CHECK(r.code == cli::kPass);
  const auto j = parse(r);
  CHECK(j["version"] == cli::kToolVersion);
  CHECK(j["config"]["n"] == 1);
  CHECK(j["summary"]["per_kind"].size() == 6);
  for (const auto& inst : j["instances"]) {
    for (const char* key : {"kind", "n", "lambda", "pass", "lhs", "rhs", "diff"}) CHECK(inst.contains(key));
    CHECK(inst["provenance"].contains("lhs"));
    CHECK(inst["diff"] == "0");
  }
  CHECK(invoke({"verify-lemma", "--n", "0", "--bound", "2"}).code == cli::kUsage);
  CHECK(invoke({"verify-lemma", "--n", "7", "--bound", "1"}).code == cli::kUsage);
  const auto zero = invoke({"verify-lemma", "--n", "2", "--bound", "0"});
  CHECK(zero.code == cli::kPass);
  CHECK(parse(zero)["instances"].size() == 6);
  CHECK(parse(zero)["summary"]["weights"] == 1);
}

TEST_CASE("verify-prop") {
  const auto r = invoke({"verify-prop", "--m", "1", "--bound", "1"});
  CHECK(r.code == cli::kPass);
  const auto j = parse(r);
  bool even = false, odd = false;
  for (const auto& inst : j["instances"]) {
    even = even || inst["kind"] == "even";
    odd = odd || inst["kind"] == "odd";
  }
  CHECK(even);
  CHECK(odd);
  CHECK(j["middle_coordinate"]["nonzero_instances"] == 2);
  CHECK(j["middle_coordinate"]["holds"] == true);
  CHECK(invoke({"verify-prop", "--m", "1", "--bound", "0"}).code == cli::kPass);
  CHECK(invoke({"verify-prop", "--m", "1", "--bound", "two"}).code == cli::kUsage);
}

TEST_CASE("branch") {
  auto mult = [](std::vector<std::string> a) {
    a.insert(a.begin(), "branch");
    const auto r = invoke(a);
    REQUIRE(r.code == cli::kPass);
    return parse(r)["multiplicity"].get<long>();
  };
  CHECK(mult({"--group", "su6", "--subgroup", "h1", "--rho", "trivial", "--tau", "trivial"}) == 1);
  CHECK(mult({"--group", "su6", "--subgroup", "h1", "--rho", "std", "--tau", "1,0,0"}) == 1);
  CHECK(mult({"--group", "su6", "--subgroup", "h2", "--rho", "std", "--tau", "1;0,0"}) == 1);
  CHECK(mult({"--group", "su6", "--subgroup", "h2", "--rho", "dual", "--tau", "0;1,0"}) == 1);
  CHECK(invoke({"branch", "--group", "su6", "--subgroup", "h7"}).code == cli::kUsage);
  CHECK(invoke({"branch", "--group", "su5", "--subgroup", "h1"}).code == cli::kUsage);
  CHECK(invoke({"branch", "--group", "su6", "--subgroup", "h1", "--tau", "0,1,0"}).code == cli::kUsage);
}

TEST_CASE("compare-bundles") {
  for (const char* lam : {"0,0,0", "1,0,-1"}) {
    const auto r = invoke({"compare-bundles", "--n", "1", "--lambda", lam, "--cutoff", "35/6"});
    CHECK(r.code == cli::kPass);
    CHECK(parse(r)["comparison"]["equal"] == true);
  }
  const auto bad = invoke({"compare-bundles", "--n", "1", "--lambda", "0,0,0", "--cutoff", "35/6", "--mismatch"});
  CHECK(bad.code == cli::kMismatch);
  const auto fd = parse(bad)["comparison"]["first_difference"];
  CHECK(fd["eigenvalue"] == "0/1");
  CHECK(fd["first"] == 0);
  CHECK(fd["second"] == 1);
  CHECK(invoke({"compare-bundles", "--n", "1", "--lambda", "1,0,0", "--cutoff", "1"}).code == cli::kUsage);
  CHECK(invoke({"compare-bundles", "--n", "1", "--lambda", "0,0,0", "--cutoff", "-1"}).code == cli::kUsage);
  CHECK(invoke({"compare-bundles", "--n", "1", "--lambda", "0,0,0", "--cutoff", "1/0"}).code == cli::kUsage);
}

TEST_CASE("spectrum") {
  const auto t = invoke({"spectrum", "--group", "su3", "--cutoff", "10"});
  CHECK(t.code == cli::kPass);
  CHECK(t.out == "0,1,1\n");
  const auto s = invoke({"spectrum", "--group", "su2xsu2", "--subgroup", "trivial", "--scaling", "1,2", "--cutoff", "3/2"});
  CHECK(s.code == cli::kPass);
  CHECK(s.out == "0,1,1\n3,4,4\n3,2,4\n");
  CHECK(invoke({"spectrum", "--group", "su2xsu2", "--scaling", "1,-2", "--cutoff", "3/2"}).code == cli::kUsage);
  CHECK(invoke({"spectrum", "--group", "su2xsu2", "--scaling", "1", "--cutoff", "3/2"}).code == cli::kUsage);
  CHECK(invoke({"spectrum", "--group", "u2", "--scaling", "1", "--cutoff", "3/2"}).code == cli::kUsage);
}

TEST_CASE("output is independent of the thread count") {
  const std::vector<std::string> args{"verify-lemma", "--n", "2", "--bound", "2"};
  setenv("DIMDATUM_THREADS", "1", 1);
  const auto one = invoke(args);
  setenv("DIMDATUM_THREADS", "4", 1);
  const auto four = invoke(args);
  unsetenv("DIMDATUM_THREADS");
  CHECK(one.out == four.out);
  CHECK(one.out.find('\r') == std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kUsage);
  CHECK(invoke({"verify-lemma", "--n", "1"}).code == cli::kUsage);
  CHECK(invoke({"verify-lemma", "--n", "1", "--bound", "1", "--format", "xml"}).code == cli::kUsage);
}
