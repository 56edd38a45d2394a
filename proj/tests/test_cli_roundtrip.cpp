#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ternlat/verification.hpp"

using namespace ternlat;

#ifndef TERNLAT_CLI_PATH
#error "TERNLAT_CLI_PATH must point at the ternlat binary"
#endif
#ifndef TERNLAT_GOLDEN_DIR
#error "TERNLAT_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string outfile = std::string(TERNLAT_GOLDEN_DIR) + "/../.cli_out.tmp";
  std::string cmd =
      std::string(TERNLAT_CLI_PATH) + " " + args + " > " + outfile + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  std::ifstream in(outfile);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(outfile.c_str());
  return {WEXITSTATUS(status), ss.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(bool(in), path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("in-memory json round trip is exact for catalog entries") {
  // includes weighted-column (irrational coordinate) and rational-basis cases
  for (const char* name : {"e8", "t14", "s14", "t16", "l12_kappa"}) {
    BuiltLattice b = build_catalog(name);
    auto [back, s2] = lattice_from_json(lattice_to_json(b.lattice, b.scaleSquared));
    CHECK(back.basis == b.lattice.basis);
    CHECK(back.colweights == b.lattice.colweights);
    CHECK(s2 == b.scaleSquared);
  }
}

TEST_CASE("build -> load -> verify equals in-memory verify") {
  BuiltLattice b = build_catalog("t10");
  auto [loaded, s2] = lattice_from_json(lattice_to_json(b.lattice, b.scaleSquared));
  CHECK(gram(loaded) == gram(b.lattice));
  CHECK(det_gram(loaded) == det_gram(b.lattice));
  CHECK(min_norm(gram(loaded)) == min_norm(gram(b.lattice)));
  CHECK(fingerprint(loaded, s2, Rat(6)) ==
        fingerprint(b.lattice, b.scaleSquared, Rat(6)));
}

TEST_CASE("cli: list") {
  auto r = run_cli("list --json");
  CHECK(r.exit_code == 0);
  auto arr = nlohmann::json::parse(r.out);
  CHECK(arr.size() >= 38);
  std::set<std::string> names;
  for (const auto& e : arr) names.insert(e.at("name").get<std::string>());
  CHECK(names.count("e8"));
  CHECK(names.count("t24"));
  CHECK(names.count("t48"));

  auto dim12 = run_cli("list --filter dim=12 --json");
  auto arr12 = nlohmann::json::parse(dim12.out);
  std::set<std::string> d12;
  for (const auto& e : arr12) d12.insert(e.at("name").get<std::string>());
  CHECK(d12 == std::set<std::string>{"k12_codes", "k12_glue", "s12",
                                     "l12_kappa", "w12", "k14_2_sub12"});
}

TEST_CASE("cli: build round trip and errors") {
  auto r = run_cli("build e8");
  CHECK(r.exit_code == 0);
  auto [loaded, s2] = lattice_from_json(r.out);
  BuiltLattice b = build_catalog("e8");
  CHECK(loaded.basis == b.lattice.basis);
  CHECK(s2 == b.scaleSquared);
  CHECK(run_cli("build nosuch").exit_code == 2);
}

TEST_CASE("cli: theta") {
  auto r = run_cli("theta e8 --max 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 + 240q^2\n");
  CHECK(run_cli("theta e8 --max 0").out == "1\n");
  auto h10 = run_cli("theta h10 --max 12");
  CHECK(h10.out == "1 + 276q^4 + 768q^6 + 4020q^8 + 6144q^10 + 20416q^12\n");
}

TEST_CASE("cli: verify exit codes") {
  CHECK(run_cli("verify e8 --depth structural").exit_code == 0);
  CHECK(run_cli("verify t26 --depth structural").exit_code == 1);
  CHECK(run_cli("verify nosuch").exit_code == 2);
  auto j = run_cli("verify e8 t10 --depth structural --json");
  CHECK(j.exit_code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.size() == 2);
  CHECK(doc[0].at("passed").get<bool>());
}

TEST_CASE("cli: code inventory") {
  auto r = run_cli("code golay12 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("n") == 12);
  CHECK(j.at("k") == 6);
  CHECK(j.at("min_weight") == 6);
  CHECK(j.at("weight_distribution").at("6") == 264);
  CHECK(run_cli("code nosuch").exit_code == 2);
}

TEST_CASE("golden files: output schema is stable") {
  auto build = run_cli("build e8");
  CHECK(build.out == read_file(std::string(TERNLAT_GOLDEN_DIR) +
                               "/e8_lattice.json"));
  auto list = run_cli("list --filter dim=12 --json");
  CHECK(list.out == read_file(std::string(TERNLAT_GOLDEN_DIR) +
                              "/list_dim12.json"));
}
