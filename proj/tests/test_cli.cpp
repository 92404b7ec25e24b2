#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "trisum/serialize.hpp"
#include "trisum/trisum.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(TRISUM_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("bound prints single values", "[cli]") {
  CHECK(run_cli("bound 8").out == "48\n");
  CHECK(run_cli("bound 5").out == "9\n");
  CHECK(run_cli("bound 0").out == "0\n");
  CHECK(run_cli("bound 8").exit_code == 0);
}

TEST_CASE("bound emits b-file lines", "[cli]") {
  CHECK(run_cli("bound --range 0 2 --bfile").out == "0 0\n1 0\n2 0\n");
  CHECK(run_cli("bound 8 --bfile").out == "8 48\n");
}

TEST_CASE("b-file output matches the closed form line by line", "[cli]") {
  const auto res = run_cli("bound --range 0 64 --bfile");
  REQUIRE(res.exit_code == 0);
  std::uint64_t expected_index = 0;
  std::size_t pos = 0;
  while (pos < res.out.size()) {
    const std::size_t eol = res.out.find('\n', pos);
    REQUIRE(eol != std::string::npos);
    const std::string line = res.out.substr(pos, eol - pos);
    pos = eol + 1;
    const std::size_t space = line.find(' ');
    REQUIRE(space != std::string::npos);
    REQUIRE(std::stoull(line.substr(0, space)) == expected_index);
    REQUIRE(std::stoull(line.substr(space + 1)) == trisum::a111384_closed(expected_index));
    ++expected_index;
  }
  CHECK(expected_index == 65);
}

TEST_CASE("sumset reports the known 8-set", "[cli]") {
  const auto res = run_cli("sumset --universe primes 499,1483,2777,4363,5237,5507,6043,6197");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("distinct_count: 48") != std::string::npos);
}

TEST_CASE("sumset tolerates whitespace and rejects duplicates", "[cli]") {
  const auto spaced = run_cli("sumset --universe primes \"3, 5, 11\"");
  CHECK(spaced.exit_code == 0);
  CHECK(spaced.out.find("sums: 19") != std::string::npos);
  CHECK(run_cli("sumset 3,3,5", true).exit_code == 1);
  CHECK(run_cli("sumset 3,x,5", true).exit_code == 1);
}

TEST_CASE("sumset names out-of-universe elements", "[cli]") {
  const auto res = run_cli("sumset --universe primes 4,5,11", true);
  CHECK(res.exit_code == 1);
  CHECK(res.out.find("4") != std::string::npos);
  const auto tset = run_cli("sumset --universe tset 4,5,11");
  CHECK(tset.exit_code == 0);
}

TEST_CASE("sumset emits a JSON report", "[cli]") {
  const auto res = run_cli("sumset --universe primes 3,5,11 --json");
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j.at("distinct_count") == 1);
  CHECK(j.at("sums") == std::vector<std::uint64_t>{19});
  CHECK(j.at("universe") == "primes");
  CHECK(j.at("triple_count") == 1);
}

TEST_CASE("construct prints sets and verifies them", "[cli]") {
  CHECK(run_cli("construct 3").out == "10 29 82\n");
  CHECK(run_cli("construct 0").out == "\n");
  const auto verified = run_cli("construct 4 --verify");
  CHECK(verified.exit_code == 0);
  CHECK(verified.out.find("distinct_sums: true") != std::string::npos);
  CHECK(verified.out.find("meets_bound: true") != std::string::npos);
  CHECK(verified.out.find("bound: 4") != std::string::npos);
  CHECK(run_cli("construct 40", true).exit_code == 1);
}

TEST_CASE("search certifies and sets the exit code", "[cli]") {
  const auto certified = run_cli("search 4 --method exhaustive --pool-limit 30 --json");
  REQUIRE(certified.exit_code == 0);
  const auto j = nlohmann::json::parse(certified.out);
  CHECK(j.at("achieved") == 4);
  CHECK(j.at("bound") == 4);
  CHECK(j.at("certified_equality") == true);
  CHECK(j.at("witness") == std::vector<std::uint64_t>{5, 7, 17, 19});
  CHECK(j.at("method") == "exhaustive");
  CHECK(j.at("seed") == 0);

  // pool {2, 3, 5}: the single triple sums to 10, which is not prime
  const auto inconclusive = run_cli("search 3 --method exhaustive --pool-limit 5");
  CHECK(inconclusive.exit_code == 2);
  CHECK(inconclusive.out.find("achieved: 0") != std::string::npos);

  const auto error = run_cli("search 3 --method exhaustive --pool-limit 4", true);
  CHECK(error.exit_code == 1);
}

TEST_CASE("search JSON round-trips through verification", "[cli]") {
  const auto res = run_cli("search 4 --method certificate --pool-limit 100 --json");
  REQUIRE(res.exit_code == 0);
  const auto parsed = trisum::certificate_from_json(nlohmann::json::parse(res.out));
  std::vector<std::string> issues;
  CHECK(trisum::verify_certificate(parsed, issues));
  CHECK(issues.empty());
  CHECK(parsed.achieved == 4);
  // re-running the echoed configuration reproduces the payload
  const auto rerun = trisum::run_search(parsed.config);
  CHECK(rerun.achieved == parsed.achieved);
  CHECK(rerun.witness == parsed.witness);
  CHECK(trisum::certificate_to_json(rerun) == nlohmann::json::parse(res.out));
}

TEST_CASE("local search JSON is reproducible for a fixed seed", "[cli]") {
  const std::string args = "search 4 --method local --pool-limit 200 --seed 11 --restarts 8 --json";
  const auto a = run_cli(args + " --threads 1");
  const auto b = run_cli(args + " --threads 2");
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("selfcheck passes on a fresh build", "[cli]") {
  const auto res = run_cli("selfcheck");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("FAIL") == std::string::npos);
  CHECK(res.out.find("PASS") != std::string::npos);
}
