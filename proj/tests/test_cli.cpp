#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sylowkit/cli.hpp"

using namespace sylowkit;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("platonov pair certificate") {
  const auto r = run({"platonov", "--primes", "3,7", "--pairs", "all"});
  CHECK(r.code == cli::kPass);
  CHECK(contains(r.out, "3*a^2 + 147*c^2 = 7"));
  CHECK(contains(r.out, "PASS (3/3 checks)"));
  CHECK(run({"platonov", "--primes", "3,5"}).code == cli::kUsage);
  CHECK(run({"platonov", "--primes", "3,3"}).code == cli::kUsage);
  CHECK(run({"platonov"}).code == cli::kUsage);
}

TEST_CASE("group commands") {
  CHECK(run({"dichotomy", "--group", "S4"}).code == cli::kPass);
  CHECK(run({"dichotomy", "--max-order", "16"}).code == cli::kPass);
  CHECK(run({"sylow", "--group", "S4", "--p", "3"}).code == cli::kPass);
  CHECK(run({"sylow", "--group", "S4", "--p", "4"}).code == cli::kUsage);
  CHECK(run({"conjugator", "--group", "D12", "--all-pairs"}).code == cli::kPass);
  CHECK(run({"conjugator", "--group", "S4", "--p", "3"}).code == cli::kUsage);
  CHECK(run({"centralizer-dim", "--group", "S4"}).code == cli::kPass);
}

TEST_CASE("fo-check reports a counterexample") {
  const auto r = run({"fo-check", "--group", "S3", "--formula-file",
                      SYLOWKIT_TEST_DATA_DIR "/commutativity.fo"});
  CHECK(r.code == cli::kCheckFailure);
  CHECK(contains(r.out, "counterexample x = (23), y = (12)"));
  CHECK(run({"fo-check", "--group", "C6", "--formula-file",
             SYLOWKIT_TEST_DATA_DIR "/commutativity.fo"}).code == cli::kPass);
  CHECK(run({"fo-check", "--group", "C6", "--builtin", "doubling"}).code == cli::kPass);
  CHECK(run({"fo-check", "--group", "C6", "--builtin", "nope"}).code == cli::kUsage);
  CHECK(run({"fo-check", "--group", "S4", "--builtin", "dichotomy", "--budget", "10"}).code ==
        cli::kUsage);
  // --budget is global and must precede the command
  CHECK(run({"--budget", "10", "fo-check", "--group", "S4", "--builtin", "dichotomy"}).code ==
        cli::kUsage);
}

TEST_CASE("usage errors") {
  const auto unknown = run({"dichotomy", "--group", "Z7"});
  CHECK(unknown.code == cli::kUsage);
  CHECK(contains(unknown.err, "factor :="));
  CHECK(contains(unknown.err, "usage: sylowkit"));
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"sylow", "--group", "S4"}).code == cli::kUsage);
  CHECK(run({"valuation-lemma", "--p", "9"}).code == cli::kUsage);
}

TEST_CASE("valuation lemma") {
  CHECK(run({"valuation-lemma", "--p", "7", "--samples", "200"}).code == cli::kPass);
  // For p = 1 mod 4 the check passes by exhibiting an odd valuation.
  const auto five = run({"valuation-lemma", "--p", "5", "--samples", "200"});
  CHECK(five.code == cli::kPass);
}

TEST_CASE("json output is deterministic") {
  const std::vector<std::string> args = {"--json", "--seed", "7", "platonov", "--count", "3",
                                         "--samples", "50"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == cli::kPass);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("command") == "platonov");
  CHECK(j.at("rng").at("seed") == 7);
  CHECK(j.at("passed") == true);
  CHECK(j.at("checks").size() == 6);  // 3 generators + 3 pairs

  const auto other = run({"--json", "--seed", "8", "platonov", "--count", "3", "--samples", "50"});
  CHECK(other.out != a.out);

  const auto fo = nlohmann::json::parse(
      run({"--json", "fo-check", "--group", "S3", "--formula-file",
           SYLOWKIT_TEST_DATA_DIR "/commutativity.fo"}).out);
  CHECK(fo.at("passed") == false);
  CHECK(fo.at("checks").at(0).at("status") == "fail");
}
