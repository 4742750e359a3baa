#include <doctest.h>

#include <sys/wait.h>

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "test_util.hpp"

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BITMATCH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// The 36-bit sample text, padded to five bytes.
const std::vector<std::uint8_t> kText36Bytes{0x64, 0x89, 0xA5, 0x14, 0x90};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("search prints the single occurrence and exits 0") {
  testutil::TempFile text("cli_text");
  text.write_bytes(kText36Bytes);
  const std::string base = "search --pattern-bits 0100110100 --text " + text.path().string() +
                           " --text-bit-len 36 --algo ";
  for (const std::string algo : {"hash", "oracle", "naive", "auto"}) {
    const auto res = run_cli(base + algo);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "11\n");
  }
}

TEST_CASE("search exits 1 when the pattern is absent") {
  testutil::TempFile text("cli_absent");
  text.write_bytes(kText36Bytes);
  const auto res = run_cli("search --pattern-bits 1111111111 --text " + text.path().string() +
                           " --text-bit-len 36 --algo naive");
  CHECK(res.exit_code == 1);
  CHECK(res.out.empty());
}

TEST_CASE("search exits 2 on precondition violations and bad input") {
  testutil::TempFile text("cli_errors");
  text.write_bytes(kText36Bytes);
  const std::string t = text.path().string();

  // skip needs at least 16 pattern bits
  CHECK(run_cli("search --pattern-bits 0100110100 --text " + t + " --algo skip").exit_code == 2);
  CHECK(run_cli("search --pattern-bits 0100110100 --text " + t + " --algo nosuch").exit_code == 2);
  CHECK(run_cli("search --pattern-bits 01x0 --text " + t + " --algo naive").exit_code == 2);
  CHECK(run_cli("search --pattern-bits 0100110100 --text /no/such/file").exit_code == 2);
  CHECK(run_cli("search --text " + t).exit_code == 2);  // no pattern at all
}

TEST_CASE("search --json emits the structured document") {
  testutil::TempFile text("cli_json");
  text.write_bytes(kText36Bytes);
  const auto res = run_cli("search --pattern-bits 0100110100 --text " + text.path().string() +
                           " --text-bit-len 36 --algo hash --json");
  REQUIRE(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["algo"] == "hash");
  CHECK(doc["m"] == 10);
  CHECK(doc["n"] == 36);
  CHECK(doc["occurrences"] == nlohmann::json::array({11}));
  CHECK(doc["inspections_per_byte"].get<double>() > 0.0);
}

TEST_CASE("search --verify cross-checks against the reference") {
  testutil::TempFile text("cli_verify");
  text.write_bytes(kText36Bytes);
  const auto res = run_cli("search --pattern-bits 0100110100 --text " + text.path().string() +
                           " --text-bit-len 36 --algo hash --verify");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "11\n");
}

TEST_CASE("tables renders the shifted copies row by row") {
  const auto res = run_cli("tables --pattern-bits 110010110010110010110");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("Patt\n 0 | 11001011 00101100 10110000\n") != std::string::npos);
  CHECK(res.out.find(" 7 | 00000001 10010110 01011001 01100000\n") != std::string::npos);
  CHECK(res.out.find("Mask\n 0 | 11111111 11111111 11111000\n") != std::string::npos);
  CHECK(res.out.find("Last\n 0 | 2\n") != std::string::npos);
  CHECK(res.out.find(" 7 | 3\n") != std::string::npos);
}

TEST_CASE("tables from a pattern file matches tables from a bit string") {
  testutil::TempFile pattern("cli_tables_file");
  pattern.write_bytes({0xCB, 0x2C, 0xB0});
  const auto via_file =
      run_cli("tables --pattern " + pattern.path().string() + " --pattern-bit-len 21");
  const auto via_bits = run_cli("tables --pattern-bits 110010110010110010110");
  CHECK(via_file.exit_code == 0);
  CHECK(via_file.out == via_bits.out);
}

TEST_CASE("tables without a pattern exits 2") {
  CHECK(run_cli("tables").exit_code == 2);
  CHECK(run_cli("tables --pattern-bits \"\"").exit_code == 2);
}

TEST_CASE("tables for a single-block pattern") {
  const auto res = run_cli("tables --pattern-bits 11111111");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("Patt\n 0 | 11111111\n 1 | 01111111 10000000\n") != std::string::npos);
  CHECK(res.out.find("Last\n 0 | 0\n 1 | 1\n") != std::string::npos);
}

TEST_CASE("auto picks a working matcher for short patterns") {
  testutil::TempFile text("cli_auto_short");
  text.write_bytes(kText36Bytes);
  const std::string base = "search --pattern-bits 0100 --text " + text.path().string() +
                           " --text-bit-len 36 --algo ";
  const auto via_auto = run_cli(base + "auto");
  const auto via_oracle = run_cli(base + "oracle");
  CHECK(via_auto.exit_code == via_oracle.exit_code);
  CHECK(via_auto.out == via_oracle.out);
  CHECK_FALSE(via_auto.out.empty());
}

TEST_CASE("--count-inspections reports the per-byte rate on stderr") {
  testutil::TempFile text("cli_inspections");
  text.write_bytes(kText36Bytes);
  const std::string cmd = std::string(BITMATCH_CLI_PATH) + " search --pattern-bits 0100110100" +
                          " --text " + text.path().string() +
                          " --text-bit-len 36 --algo naive --count-inspections 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  ::pclose(pipe);
  CHECK(out.find("inspections_per_byte=") != std::string::npos);
}

TEST_CASE("bench emits the CSV contract") {
  const auto res = run_cli(
      "bench --gamma 50 --text-bits 4000 --lengths 20 --patterns 2 --seed 1 "
      "--algos naive,hash,skip");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("algo,gamma,m,mean_time_ns,mean_inspections_per_byte,patterns,seed\n") !=
        std::string::npos);
  std::size_t rows = 0;
  std::istringstream lines(res.out);
  std::string line;
  double zero_fraction = -1.0;
  while (std::getline(lines, line)) {
    if (line.rfind("# zero_fraction=", 0) == 0) zero_fraction = std::stod(line.substr(16));
    if (!line.empty() && line[0] != '#' && line.rfind("algo,", 0) != 0) ++rows;
  }
  CHECK(rows == 3);
  CHECK(zero_fraction > 0.45);
  CHECK(zero_fraction < 0.55);
}

TEST_CASE("bench zero fraction follows gamma") {
  const auto res = run_cli(
      "bench --gamma 90 --text-bits 20000 --lengths 20 --patterns 1 --seed 2 --algos hash");
  REQUIRE(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string line;
  double zero_fraction = -1.0;
  while (std::getline(lines, line)) {
    if (line.rfind("# zero_fraction=", 0) == 0) zero_fraction = std::stod(line.substr(16));
  }
  CHECK(zero_fraction > 0.88);
  CHECK(zero_fraction < 0.92);
}

TEST_CASE("bench rejects unknown algorithms and bad ranges") {
  CHECK(run_cli("bench --algos nosuch").exit_code == 2);
  CHECK(run_cli("bench --lengths 20-500").exit_code == 2);  // range without a step
  CHECK(run_cli("bench --gamma 0").exit_code == 2);
}

TEST_CASE("bench range lengths expand first-last:step") {
  const auto res = run_cli(
      "bench --gamma 50 --text-bits 4000 --lengths 16-48:16 --patterns 1 --seed 3 --algos hash");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("hash,50,16,") != std::string::npos);
  CHECK(res.out.find("hash,50,32,") != std::string::npos);
  CHECK(res.out.find("hash,50,48,") != std::string::npos);
}

}  // TEST_SUITE
