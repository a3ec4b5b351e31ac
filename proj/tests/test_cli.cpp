#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "agperf/cli.hpp"

using namespace agperf;
using namespace agperf::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "agperf");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

size_t count_lines(const std::string& s) {
  size_t n = 0;
  for (char c : s) n += c == '\n' ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("compute: json record") {
  const Run r = run_cli({"compute", "--genus", "4", "--n", "7", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["genus"] == 4);
  CHECK(j["N"] == 7);
  CHECK(j["G"] == 10);
  CHECK(j["value"] == "-1759/3360");
  CHECK(j["terms"]["I"] == "1/672");
  CHECK(j["terms"]["II"] == "-49/80");
  CHECK(j["terms"]["III"] == "7/80");
  CHECK(j["formal"] == false);
  CHECK(j["method"] == "engine");
  CHECK(j.find("meta") == j.end());
}

TEST_CASE("compute: closed-form rows have null terms") {
  const Run r = run_cli({"compute", "--genus", "4", "--n", "4"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == "-1/7560");
  CHECK(j["terms"].is_null());
  CHECK(j["method"] == "closed-form");

  const Run zero = run_cli({"compute", "--genus", "3", "--n", "2", "--format", "json"});
  CHECK(nlohmann::json::parse(zero.out)["value"] == "0");
}

TEST_CASE("compute: csv and markdown") {
  const Run csv = run_cli({"compute", "--genus", "3", "--n", "5", "--format", "csv"});
  REQUIRE(csv.code == kExitOk);
  CHECK(csv.out ==
        "genus,N,G,value,term_I,term_II,term_III,formal\n"
        "3,5,6,-203/240,-1/80,-25/24,5/24,false\n");

  const Run md = run_cli({"compute", "--genus", "2", "--n", "3", "--format", "md"});
  REQUIRE(md.code == kExitOk);
  CHECK(md.out.find("| 2 | 3 | 3 | -11/12 | 1/12 | -3/2 | 1/2 | yes |") != std::string::npos);
}

TEST_CASE("compute: output is reproducible unless --meta is asked for") {
  const auto args = std::vector<std::string>{"compute", "--genus", "3", "--n", "5"};
  CHECK(run_cli(args).out == run_cli(args).out);
  const Run meta = run_cli({"compute", "--genus", "3", "--n", "5", "--meta"});
  const auto j = nlohmann::json::parse(meta.out);
  CHECK(j["meta"]["tool"] == "agperf");
  CHECK(j["meta"].contains("generated_at"));
  CHECK(j["record"]["value"] == "-203/240");
}

TEST_CASE("exit codes for bad input") {
  CHECK(run_cli({"compute", "--genus", "4", "--n", "9"}).code == kExitDomain);
  CHECK(run_cli({"compute", "--genus", "1", "--n", "0"}).code == kExitDomain);
  const Run oob = run_cli({"compute", "--genus", "4", "--n", "9"});
  CHECK(oob.err.find("error:") != std::string::npos);
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == kExitUsage);
  CHECK(run_cli({"compute", "--genus", "4"}).code == kExitUsage);
  CHECK(run_cli({"compute", "--genus", "x", "--n", "1"}).code == kExitUsage);
  CHECK(run_cli({"compute", "--genus", "4", "--n", "7", "--format", "xml"}).code == kExitUsage);
  CHECK(run_cli({"table", "--g-min", "5", "--g-max", "3"}).code == kExitUsage);
  CHECK(run_cli({"crosscheck", "--g-max", "1"}).code == kExitUsage);
  CHECK(run_cli({"--help"}).code == kExitOk);
}

TEST_CASE("table") {
  CHECK(table_max_n(2) == 3);
  CHECK(table_max_n(3) == 5);
  CHECK(table_max_n(5) == 11);

  const Run r = run_cli({"table", "--g-min", "2", "--g-max", "3", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto rows = nlohmann::json::parse(r.out);
  REQUIRE(rows.is_array());
  CHECK(rows.size() == 4 + 6);
  CHECK(rows[0]["value"] == "1/2880");
  CHECK(rows[3]["value"] == "-11/12");
  CHECK(r.out.find("-203/240") != std::string::npos);

  const Run csv = run_cli({"table", "--g-min", "2", "--g-max", "2", "--format", "csv"});
  CHECK(count_lines(csv.out) == 1 + 4);
}

TEST_CASE("verify against the embedded table") {
  const auto golden = golden_table();
  REQUIRE(golden.size() == 6);
  CHECK(golden.front().g == 2);
  CHECK(golden.back().total == "-49254708341/2332800");

  const auto results = compare_golden();
  REQUIRE(results.size() == 6);
  for (size_t i = 0; i < 4; ++i) CHECK(results[i].matches());

  const Run r = run_cli({"verify", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 6);
  CHECK(j["rows"][0]["match"] == true);
  CHECK(r.code == (j["ok"].get<bool>() ? kExitOk : kExitMismatch));

  const Run text = run_cli({"verify"});
  CHECK(text.out.find("g=2: match") != std::string::npos);
  CHECK(text.out.find("rows match") != std::string::npos);
}

TEST_CASE("verify names the perturbed term under fault injection") {
  EngineConfig broken;
  broken.todd_pair = [](int n, int m) { return n == 1 && m == 1 ? Rational(1, 11) : todd_pair_closed(n, m); };
  std::ostringstream out, err;
  const int code = run_verify(false, out, err, broken);
  CHECK(code == kExitMismatch);
  CHECK(out.str().find("g=2: MISMATCH") != std::string::npos);
  CHECK(out.str().find("g=2 I: expected 1/12") != std::string::npos);
  CHECK(out.str().find("g=2 II:") == std::string::npos);
}

TEST_CASE("crosscheck: minimal sweep") {
  const Run r = run_cli({"crosscheck", "--g-max", "2"});
  CHECK(r.code == kExitOk);
}

TEST_CASE("crosscheck") {
  const Run r = run_cli({"crosscheck", "--g-max", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("all gating checks passed") != std::string::npos);
  CHECK(r.out.find("REPORTED (non-gating)") != std::string::npos);
  CHECK(r.out.find("g=3 formula_III  : printed=5/2 engine=5/24 DIFFERS") != std::string::npos);
  CHECK(r.out.find("g=2 corollary_I  : printed=5/24 engine=1/12 DIFFERS") != std::string::npos);
}
