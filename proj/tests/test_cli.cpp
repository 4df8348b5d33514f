// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include "dupread/json_io.hpp"
#include "dupread/render.hpp"
#include "fixtures.hpp"

using namespace dupread;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DUPREAD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[512];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("entry rendering follows the printed convention") {
  CHECK(render_entry({0, 1, 0, 0}) == "z1");
  CHECK(render_entry({0, 0, 2, 0}) == "2z2");
  CHECK(render_entry({0, 1, 0, 1}) == "z1+z3");
  CHECK(render_entry({-1, 1, -1, 1}) == "z1+z3-z0-z2");
  CHECK(render_entry({0, 0, -1, 1}) == "z3-z2");
  CHECK(render_entry({1, 0, -2, 0}) == "z0-2z2");
  CHECK(render_entry({0, -1}) == "-z1");
  CHECK(render_entry({0, 0}) == "0");
  CHECK(render_entry_vector(fixtures::quaternary_read()) ==
        "(z1, z1+z2, z0+z2, z0+z1, z1+z3, z1+z3, z1+z2, 2z2, z0+z2, 2z0, z0)");
}

TEST_CASE("csv text round-trips byte-identically") {
  const std::vector<std::vector<std::string>> rows{
      {"k", "ell", "q"}, {"1", "5", "4"}, {"summary", "", "1.000000"}};
  const auto text = csv_emit(rows);
  CHECK(csv_parse(text) == rows);
  CHECK(csv_emit(csv_parse(text)) == text);
}

TEST_CASE("cli reproduces the quaternary read transcript") {
  const auto r = run_cli("read --q 4 --ell 2 --x 1,2,0,1,3,1,2,2,0,0");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "(z1, z1+z2, z0+z2, z0+z1, z1+z3, z1+z3, z1+z2, 2z2, z0+z2, 2z0, z0)\n");
}

TEST_CASE("cli usage errors exit with code 2") {
  CHECK(run_cli("read --q 4 --ell 2").exit_code == 2);          // missing --x
  CHECK(run_cli("read --q 4 --ell 2 --x ''").exit_code == 2);   // empty list
  CHECK(run_cli("verify nosuch").exit_code == 2);               // unknown suite
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("cli size guard exits with code 3") {
  CHECK(run_cli("enumerate --q 4 --n 30 --k 2 --ell 2").exit_code == 3);
  // the environment variable moves the default budget
  CHECK(run_cli("enumerate --q 2 --n 8 --k 2 --ell 2").exit_code == 0);
  const std::string tightened =
      std::string("DUPREAD_SIZE_GUARD=100 ") + DUPREAD_CLI_PATH +
      " enumerate --q 2 --n 8 --k 2 --ell 2 2>/dev/null";
  FILE* pipe = popen(tightened.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[256];
  while (fread(buf, 1, sizeof(buf), pipe) > 0) {
  }
  const int status = pclose(pipe);
  CHECK((WIFEXITED(status) && WEXITSTATUS(status) == 3));
}

TEST_CASE("duplication events use the documented json schema") {
  const DuplicationEvent ev{5, 3};
  const auto j = event_to_json(ev);
  CHECK(j.dump() == "{\"len\":3,\"pos\":5}");
  const auto back = event_from_json(j);
  CHECK(back.pos == 5);
  CHECK(back.len == 3);
  CHECK_THROWS_AS(event_from_json(nlohmann::json{{"pos", 1}}),
                  std::invalid_argument);
}

TEST_CASE("emitted csv is deterministic and round-trippable") {
  const std::string cmd = "simulate --q 2 --n 4 --k 2 --ell 2 --t 1 --trials 20 --seed 7";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(csv_emit(csv_parse(a.output)) == a.output);
  // the summary row records full success
  const auto rows = csv_parse(a.output);
  REQUIRE(rows.size() == 22);
  CHECK(rows.back() == std::vector<std::string>{"summary", "", "1.000000"});

  const auto rates = run_cli("rates --q 4 --ell 5 --k 1..4");
  CHECK(csv_emit(csv_parse(rates.output)) == rates.output);

  const auto enumerated = run_cli("enumerate --q 2 --n 5 --k 2 --ell 2");
  CHECK(csv_emit(csv_parse(enumerated.output)) == enumerated.output);
}

TEST_CASE("simulate with a zero budget always succeeds") {
  const auto r =
      run_cli("simulate --q 2 --n 5 --k 2 --ell 2 --t 0 --trials 10 --seed 3");
  CHECK(r.exit_code == 0);
  const auto rows = csv_parse(r.output);
  REQUIRE(rows.size() == 12);
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    CHECK(rows[i][1] == "0");
    CHECK(rows[i][2] == "1");
  }
  CHECK(rows.back().back() == "1.000000");
}

TEST_CASE("verify subcommand runs a fast suite") {
  const auto r = run_cli("verify lemma7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[PASS] lemma7") == 0);
}

TEST_CASE("file pipeline: construct a set, corrupt a read vector, decode") {
  REQUIRE(run_cli("sidon --r 6 --t 1 --out cli_set.json").exit_code == 0);
  REQUIRE(run_cli("read --q 2 --ell 2 --x 0,0,1,1 --dup 1,2 --format json "
                  "--out cli_rv.json")
              .exit_code == 0);
  const auto ok = run_cli(
      "decode --q 2 --n 4 --k 2 --ell 2 --t 1 --g 0 "
      "--sidon-file cli_set.json --input cli_rv.json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output == "{\"status\":\"ok\",\"x\":[0,0,1,1]}\n");

  // a wrong coset label must not return silently
  const auto wrong = run_cli(
      "decode --q 2 --n 4 --k 2 --ell 2 --t 1 --g 3 "
      "--sidon-file cli_set.json --input cli_rv.json");
  CHECK(wrong.exit_code == 1);
  CHECK(wrong.output.find("\"status\":\"ok\"") == std::string::npos);

  // a set too small for the parameters is a usage error
  CHECK(run_cli("decode --q 2 --n 9 --k 2 --ell 2 --t 1 --g 0 "
                "--sidon-file cli_set.json --input cli_rv.json")
            .exit_code == 2);
  std::remove("cli_set.json");
  std::remove("cli_rv.json");
}
