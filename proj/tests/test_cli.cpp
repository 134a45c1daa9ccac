#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string binary_path() {
  const char* env = std::getenv("NLCSEQ_BIN");
  REQUIRE_MESSAGE(env != nullptr, "NLCSEQ_BIN must point at the nlcseq binary");
  return env;
}

RunResult run_cli(const std::string& args) {
  const std::string cmd = binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("nlc subcommands") {
  CHECK(run_cli("nlc finite 10001101000110100010").output == "13\n");
  CHECK(run_cli("nlc periodic 10001101000110100010").output == "15\n");
  CHECK(run_cli("nlc fast 10001101000110100010").output == "15\n");
  CHECK(run_cli("nlc periodic 01").output == "1\n");
  CHECK(run_cli("nlc periodic 0101").output == "1\n");
}

TEST_CASE("classify and tight-bound") {
  CHECK(run_cli("classify 10001101000110100010").output == "c=13 d=7 q=2 r=5 add=2\n");
  CHECK(run_cli("classify 0101").output.empty());
  CHECK(run_cli("classify 0101").exit_code == 0);
  CHECK(run_cli("tight-bound 20").output == "c0=13 tight=true\n");
  CHECK(run_cli("tight-bound 9").output == "c0=6 tight=false\n");
  CHECK(run_cli("tight-bound 2").exit_code == 1);
}

TEST_CASE("count command emits the breakdown as JSON") {
  const auto res = run_cli("count 16 12");
  CHECK(res.exit_code == 0);
  const auto payload = nlohmann::json::parse(res.output);
  CHECK(payload["total"] == "52");
  CHECK(payload["case_i_subtotal"] == "18");
  CHECK(payload["probability"]["fraction"] == "13/1020");

  CHECK(run_cli("count 16 11").exit_code == 1);
}

TEST_CASE("json envelope") {
  const auto res = run_cli("--json count 16 12");
  const auto envelope = nlohmann::json::parse(res.output);
  CHECK(envelope["status"] == "ok");
  CHECK(envelope["command"] == "count");
  CHECK(envelope["inputs"]["n"] == 16);
  CHECK(envelope["result"]["total"] == "52");

  const auto err = run_cli("--json count 16 11");
  CHECK(err.exit_code == 1);
  const auto bad = nlohmann::json::parse(err.output);
  CHECK(bad["status"] == "error");

  const auto nlc_env = run_cli("--json nlc periodic 10001101000110100010");
  const auto parsed = nlohmann::json::parse(nlc_env.output);
  CHECK(parsed["result"]["nlc"] == 15);

  // The flag is accepted after the subcommand as well.
  const auto trailing = run_cli("tight-bound 20 --json");
  const auto trailing_parsed = nlohmann::json::parse(trailing.output);
  CHECK(trailing_parsed["status"] == "ok");
  CHECK(trailing_parsed["result"]["c0"] == 13);
}

TEST_CASE("representative and family output") {
  const auto rep = run_cli("representative 1010101101 --c 6");
  CHECK(rep.exit_code == 0);
  CHECK(rep.output ==
        "k=0 c=6 d=2 q=3 r=1 add=0 representative=false\n"
        "k=5 c=6 d=3 q=2 r=2 add=1 representative=true\n"
        "unique=true\n");
  const auto fam = run_cli("--json family 10");
  const auto parsed = nlohmann::json::parse(fam.output);
  CHECK(parsed["result"]["s"]["bits"] == "0101011011");
  CHECK(run_cli("family 11").exit_code == 1);
}

TEST_CASE("tables are stable TSV") {
  const auto table = run_cli("count-table 8");
  CHECK(table.output.rfind("# omega\tcount\tprobability\tprobability_decimal\n", 0) == 0);
  const auto dist = run_cli("distribution 8");
  CHECK(dist.output.rfind("# omega\tclasses\tsequences\tprobability\tprobability_decimal\n", 0) ==
        0);
  // Byte-determinism.
  CHECK(run_cli("count-table 8").output == table.output);
  CHECK(run_cli("distribution 8").output == dist.output);
}

TEST_CASE("generate") {
  const auto res = run_cli("generate 16 12 --limit 3");
  CHECK(res.exit_code == 0);
  CHECK(res.output.size() > 0);
  int lines = 0;
  for (char ch : res.output) lines += ch == '\n';
  CHECK(lines == 3);
  const auto js = run_cli("generate 16 12 --format json");
  const auto arr = nlohmann::json::parse(js.output);
  CHECK(arr.size() == 52);
}

TEST_CASE("verify and scan exit codes") {
  CHECK(run_cli("verify counts 8").exit_code == 0);
  CHECK(run_cli("verify structure 8 6").exit_code == 0);
  CHECK(run_cli("conjecture-scan --max 8").exit_code == 0);
  CHECK(run_cli("conjecture-scan --max 8").output.empty());
}

TEST_CASE("exit codes for bad usage and resource limits") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("count 16").exit_code == 2);
  CHECK(run_cli("distribution 63").exit_code == 3);
  CHECK(run_cli("conjecture-scan --max 63").exit_code == 3);
  CHECK(run_cli("nlc finite 01a2").exit_code == 1);
}
