// End-to-end checks of the command line tool, run as a subprocess.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "finsite/lattice.hpp"

namespace {

using json = nlohmann::ordered_json;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FINSITE_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = std::move(out);
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("free lattice sizes through the CLI", "[cli]") {
  const long long expected[] = {2, 3, 6, 20, 168};
  for (int n = 0; n <= 4; ++n) {
    const CliResult r =
        run_cli("lattice free --gens " + std::to_string(n) + " --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("size") == expected[n]);
  }
}

TEST_CASE("simplicial check emits one report per pair plus a summary", "[cli]") {
  const CliResult r = run_cli("lattice simplicial-check --gens 2 --format json");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line, last;
  int count = 0;
  while (std::getline(lines, line))
    if (!line.empty()) {
      ++count;
      last = line;
    }
  CHECK(count == 37);  // 36 pairs + summary
  const json summary = json::parse(last);
  CHECK(summary.at("summary") == true);
  CHECK(summary.at("pairs") == 36);
  CHECK(summary.at("bijective") == 36);
  CHECK(summary.at("all_ok") == true);
}

TEST_CASE("descent example and its non-unimodular rejection", "[cli]") {
  const CliResult good = run_cli("ring h1 --ring Z/6 --module self --cover 3,4 --format json");
  REQUIRE(good.exit_code == 0);
  const json j = json::parse(good.out);
  CHECK(j.at("h0") == 6);
  CHECK(j.at("h1") == 1);
  CHECK(j.at("exact") == true);

  const CliResult bad = run_cli("ring h1 --ring Z/6 --module self --cover 2,4");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("NotUnimodular") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
  CHECK(run_cli("lattice free --no-such-flag").exit_code == 2);
  CHECK(run_cli("lattice no-such-subcommand").exit_code == 2);
  CHECK(run_cli("ring h1 --ring Z/nonsense").exit_code == 2);
  CHECK(run_cli("site check-cover --map /definitely/not/there.json").exit_code == 2);
}

TEST_CASE("failed verdicts exit with code 1", "[cli]") {
  // The two-element fiber is inadmissible for odd-cardinality.
  const auto path = temp_file("finsite_cli_cover.json");
  std::ofstream(path) << R"({ "domain": 2, "codomain": 1, "table": [0, 0] })";
  const CliResult r =
      run_cli("site check-cover --map " + path.string() + " --presentation odd");
  CHECK(r.exit_code == 1);
  std::filesystem::remove(path);
}

TEST_CASE("invalid lattice tables are reported with a witness", "[cli]") {
  const finsite::RawLatticeTables t = finsite::diamond_m3_tables();
  json j;
  j["size"] = t.size;
  json meet = json::array(), join = json::array();
  for (int a = 0; a < t.size; ++a) {
    json mrow = json::array(), jrow = json::array();
    for (int b = 0; b < t.size; ++b) {
      mrow.push_back(t.meet[static_cast<std::size_t>(a * t.size + b)]);
      jrow.push_back(t.join[static_cast<std::size_t>(a * t.size + b)]);
    }
    meet.push_back(std::move(mrow));
    join.push_back(std::move(jrow));
  }
  j["meet"] = meet;
  j["join"] = join;
  j["bottom"] = t.bottom;
  j["top"] = t.top;
  j["labels"] = t.labels;
  const auto path = temp_file("finsite_cli_diamond.json");
  std::ofstream(path) << j.dump(2);
  const CliResult r = run_cli("lattice validate --lattice " + path.string() + " --format json");
  CHECK(r.exit_code == 1);
  const json verdict = json::parse(r.out);
  CHECK(verdict.at("valid") == false);
  CHECK_FALSE(verdict.at("witness").empty());
  std::filesystem::remove(path);
}

TEST_CASE("join homology of an iterated join through the CLI", "[cli]") {
  const auto path = temp_file("finsite_cli_points.json");
  std::ofstream(path) << R"({ "vertices": 2, "facets": [[0], [1]] })";
  const CliResult r =
      run_cli("join homology --complex " + path.string() + " --power 3 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("dimension") == 2);
  // The betti array is indexed from degree -1; the top degree has rank 1.
  const auto& betti = j.at("betti");
  CHECK(betti[betti.size() - 1].at("rank") == 1);
  CHECK(j.at("connectivity") == 1);
  std::filesystem::remove(path);
}

TEST_CASE("the out flag writes the payload to a file", "[cli]") {
  const auto path = temp_file("finsite_cli_out.json");
  const CliResult r =
      run_cli("lattice free --gens 2 --format json --out " + path.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  json j;
  in >> j;
  CHECK(j.at("size") == 6);
  std::filesystem::remove(path);
}

TEST_CASE("sweep mode runs the battery for a command", "[cli]") {
  const CliResult r = run_cli("ring glue --sweep --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("v") == 1);
  CHECK(j.at("summary").at("ok") == true);
}

TEST_CASE("global flags may trail the subcommand flags", "[cli]") {
  const CliResult r = run_cli("ring glue --ring Z/12 --cover 5,10 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("isomorphism") == true);
}
