#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsseq/report_io.hpp"
#include "lsseq/sequences.hpp"

using namespace lsseq;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("LSSEQ_CLI");
  REQUIRE_MESSAGE(p != nullptr, "LSSEQ_CLI must point at the lsseq binary (ctest sets it)");
  return p;
}

CliResult run_cli(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("gen --exact emits the expected points and round-trips") {
  const auto r = run_cli("gen --kind ls --L 1 --S 1 --count 5 --exact");
  CHECK(r.exit_code == 0);

  auto ctx = FieldContext::create(1, 1);
  const auto parsed = parse_gen_csv(r.out, ctx);
  const auto expected = ls_points(1, 1, 5);
  REQUIRE(parsed.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(parsed[i] == expected[i]);

  // byte-identical across runs
  CHECK(run_cli("gen --kind ls --L 1 --S 1 --count 5 --exact").out == r.out);
}

TEST_CASE("gen json is well-formed") {
  const auto r = run_cli("gen --kind ls --L 2 --S 1 --count 7 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "ls");
  CHECK(j["points"].size() == 7);
  CHECK(j["points"][0]["value_exact"] == "0 + 0*beta");
}

TEST_CASE("gen other kinds") {
  const auto vdc = run_cli("gen --kind vdc --base 2 --count 4");
  CHECK(vdc.exit_code == 0);
  CHECK(vdc.out.find("3,0.75,3/4") != std::string::npos);

  const auto sym = run_cli("gen --kind symkronecker --L 1 --S 1 --count 4 --exact");
  CHECK(sym.exit_code == 0);
  CHECK(sym.out.find("1 - 1*beta") != std::string::npos);   // {-z}
  CHECK(sym.out.find("-1 + 2*beta") != std::string::npos);  // {2z}

  const auto flt = run_cli("gen --kind kronecker --z 0.25 --count 4");
  CHECK(flt.exit_code == 0);
  CHECK(flt.out.find("2,0.5,") != std::string::npos);
}

TEST_CASE("bounds prints both bound families side by side") {
  const auto r = run_cli("bounds --L 1 --S 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("gamma=3.4472") != std::string::npos);
  CHECK(r.out.find("delta=3.0074") != std::string::npos);
  CHECK(r.out.find("delta=3.5208") != std::string::npos);
  CHECK(r.out.find("published delta=2.776") != std::string::npos);
  CHECK(r.out.find("unreconciled") != std::string::npos);

  const auto j = nlohmann::json::parse(run_cli("bounds --L 10 --S 1 --format json").out);
  CHECK(j["iz_bound"]["gamma"].get<double>() == doctest::Approx(22.8631).epsilon(1e-3));
  CHECK(j["cor2_bound"]["published_delta"].get<double>() == 5.51);
  CHECK(j["cor2_bound"]["published_status"] == "unreconciled");
}

TEST_CASE("cf emits the convergent table") {
  const auto r = run_cli("cf --L 2 --S 1 --depth 6 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coefficients"][0] == "0");
  CHECK(j["coefficients"][1] == "2");
  CHECK(j["index_offset"] == -1);
  CHECK(j["q"][0] == "1");   // q_{-1}
  CHECK(j["q"][1] == "0");   // q_0
  CHECK(j["q"][5] == "12");  // q_4
}

TEST_CASE("cf --N adds the digit expansion") {
  const auto r = run_cli("cf --L 2 --S 1 --depth 6 --N 9");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ostrowski"]["N"] == "9");
  CHECK(j["ostrowski"]["top_index"] == 3);
  CHECK(j["ostrowski"]["digits"] == std::vector<std::string>{"0", "0", "2", "1"});
  CHECK(j["convergents"]["q"][4] == "5");
}

TEST_CASE("verify exits zero on success with an all-pass report") {
  const auto r = run_cli("verify --L 2 --S 1 --levels 8 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["contiguity"] == true);
  CHECK(j["blocks"].size() == 8);
}

TEST_CASE("probe reports denominators") {
  const auto r = run_cli("probe --L 2 --S 2 --kmax 8");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["denominators"].size() == 9);
  CHECK(j["denominators"][6]["denominator"] == "8");
  CHECK(j["nondecreasing"] == true);
}

TEST_CASE("disc and curve emit the fixed CSV schema") {
  const auto r = run_cli("disc --kind ls --L 1 --S 1 --Ns 10,100 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("N,D_extreme,D_star,N_D_over_logN,iz_bound,cor2_bound\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);

  const auto c = run_cli("curve --L 1 --S 1 --levels 6");
  CHECK(c.exit_code == 0);
  CHECK(c.out.rfind("N,D_extreme,D_star,", 0) == 0);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 8);  // header + t_0..t_6
}

TEST_CASE("partition subcommand") {
  const auto r = run_cli("partition --L 1 --S 1 --levels 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("left_exact,left_float,length_exponent\n", 0) == 0);
  CHECK(r.out.find("1 - 1*beta") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("gen --kind bogus --count 5").exit_code == 2);
  CHECK(run_cli("gen").exit_code == 2);              // missing required --count
  CHECK(run_cli("frobnicate").exit_code == 2);       // unknown subcommand
  CHECK(run_cli("verify --L 2 --S 2 --levels 4").exit_code == 2);  // S != 1
  CHECK(run_cli("probe --L 2 --S 1").exit_code == 2);              // S < 2 rejected
}

TEST_CASE("exit-code mapping for verification reports") {
  std::vector<BlockReport> blocks(2);
  blocks[0].pass = true;
  blocks[1].pass = true;
  CHECK(verification_exit_code(blocks, true) == 0);
  CHECK(verification_exit_code(blocks, false) == 1);
  blocks[1].pass = false;
  CHECK(verification_exit_code(blocks, true) == 1);
}
