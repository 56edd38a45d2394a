// Command-line surface: build, verify, inspect, and export catalog lattices
// and codes.
//
//   ternlat list   [--filter F] [--json]
//   ternlat build  NAME [-o FILE]
//   ternlat verify [NAMES...] [--all] [--filter F] [--depth D] [--json]
//   ternlat theta  NAME --max N [--json]
//   ternlat code   NAME [--json]
//
// Exit codes: 0 success / all claims pass or skip, 1 any failed claim,
// 2 usage or build error (unknown entry, missing data file).
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "ternlat/verification.hpp"

using namespace ternlat;

static int cmd_list(const std::string& filter, bool asJson) {
  nlohmann::json arr = nlohmann::json::array();
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"name", "dim", "section", "cd^2", "kissing"});
  for (const auto& e : catalog_expectations()) {
    bool match = filter.empty() || filter == "all";
    if (!match) {
      if (filter.rfind("dim=", 0) == 0)
        match = (long)e.rank == atol(filter.c_str() + 4);
      else
        match = e.name.find(filter) != std::string::npos;
    }
    if (!match) continue;
    std::string cd2 = e.centerDensitySquared
                          ? rat_to_string(*e.centerDensitySquared) + " [" +
                                e.cd2Tag + "]"
                          : "-";
    std::string kiss = e.kissing ? std::to_string(*e.kissing) + " [" +
                                       e.kissingTag + "]"
                                 : "-";
    if (asJson) {
      nlohmann::json j;
      j["name"] = e.name;
      j["dim"] = e.rank;
      j["paper_ref"] = e.paperRef;
      if (e.centerDensitySquared) {
        j["center_density_squared"] =
            rat_to_string(*e.centerDensitySquared);
        j["center_density_squared_tag"] = e.cd2Tag;
      }
      if (e.kissing) {
        j["kissing"] = *e.kissing;
        j["kissing_tag"] = e.kissingTag;
      }
      arr.push_back(j);
    } else {
      rows.push_back(
          {e.name, std::to_string(e.rank), e.paperRef, cd2, kiss});
    }
  }
  if (asJson) {
    std::cout << arr.dump(2) << std::endl;
    return 0;
  }
  std::array<size_t, 5> w{};
  for (const auto& r : rows)
    for (size_t i = 0; i < 5; i++) w[i] = std::max(w[i], r[i].size());
  for (const auto& r : rows) {
    for (size_t i = 0; i < 5; i++)
      std::cout << r[i] << std::string(w[i] - r[i].size() + 2, ' ');
    std::cout << "\n";
  }
  return 0;
}

static int cmd_build(const std::string& name, const std::string& out) {
  BuiltLattice b;
  try {
    b = build_catalog(name);
  } catch (const std::exception& e) {
    std::cerr << "build failed: " << e.what() << std::endl;
    return 2;
  }
  std::string text = lattice_to_json(b.lattice, b.scaleSquared);
  if (out.empty()) {
    std::cout << text << std::endl;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << std::endl;
      return 2;
    }
    f << text << "\n";
  }
  return 0;
}

static int cmd_verify(std::vector<std::string> names, bool all,
                      const std::string& filter, const std::string& depthStr,
                      bool asJson) {
  std::vector<VerificationReport> reports;
  try {
    auto depth_for = [&](size_t rank) {
      return depthStr == "auto" ? default_depth_for_rank(rank)
                                : depth_from_string(depthStr);
    };
    if (all || !filter.empty()) {
      for (const auto& e : catalog_expectations()) {
        bool match = filter.empty() || filter == "all";
        if (!match) {
          if (filter.rfind("dim<=", 0) == 0)
            match = (long)e.rank <= atol(filter.c_str() + 5);
          else if (filter.rfind("dim>=", 0) == 0)
            match = (long)e.rank >= atol(filter.c_str() + 5);
          else if (filter.rfind("dim=", 0) == 0)
            match = (long)e.rank == atol(filter.c_str() + 4);
          else
            match = e.name.find(filter) != std::string::npos;
        }
        if (match) reports.push_back(verify(e.name, depth_for(e.rank)));
      }
    } else {
      if (names.empty()) {
        std::cerr << "verify: give entry names, --all or --filter"
                  << std::endl;
        return 2;
      }
      for (const auto& n : names)
        reports.push_back(
            verify(n, depth_for(catalog_expectation(n).rank)));
    }
  } catch (const std::exception& e) {
    std::cerr << "verify failed: " << e.what() << std::endl;
    return 2;
  }
  std::cout << (asJson ? reports_to_json(reports)
                       : reports_to_table(reports));
  return reports_exit_code(reports);
}

static int cmd_theta(const std::string& name, const std::string& maxStr,
                     bool asJson) {
  BuiltLattice b;
  try {
    b = build_catalog(name);
  } catch (const std::exception& e) {
    std::cerr << "build failed: " << e.what() << std::endl;
    return 2;
  }
  Rat maxScaled = rat_from_string(maxStr);
  auto t = maxScaled > 0
               ? theta_prefix(gram(b.lattice), maxScaled, b.scaleSquared)
               : std::vector<std::pair<Rat, uint64_t>>{};
  if (asJson) {
    nlohmann::json arr = nlohmann::json::array();
    arr.push_back({ "0", 1 });
    for (const auto& [n, c] : t) arr.push_back({rat_to_string(n), c});
    std::cout << arr.dump() << std::endl;
    return 0;
  }
  std::cout << "1";
  for (const auto& [n, c] : t)
    std::cout << " + " << c << "q^" << rat_to_string(n);
  std::cout << std::endl;
  return 0;
}

static int cmd_code(const std::string& name, bool asJson) {
  LinearCode c;
  try {
    c = catalog_code(name);
  } catch (const std::exception& e) {
    std::cerr << "unknown code: " << e.what() << std::endl;
    return 2;
  }
  auto wd = weight_distribution(c);
  if (asJson) {
    nlohmann::json j;
    j["name"] = name;
    j["p"] = c.p;
    j["n"] = c.n;
    j["k"] = c.k;
    j["min_weight"] = min_weight(c);
    nlohmann::json gen = nlohmann::json::array();
    for (size_t i = 0; i < c.k; i++) {
      std::vector<long> row;
      for (size_t jj = 0; jj < c.n; jj++)
        row.push_back(c.generator(i, jj).get_si());
      gen.push_back(row);
    }
    j["generator"] = gen;
    nlohmann::json w = nlohmann::json::object();
    for (size_t i = 0; i <= c.n; i++)
      if (wd.counts[i]) w[std::to_string(i)] = wd.counts[i];
    j["weight_distribution"] = w;
    std::cout << j.dump(2) << std::endl;
    return 0;
  }
  std::cout << name << ": [" << c.n << "," << c.k << "," << min_weight(c)
            << "]_" << c.p << "\ngenerator:\n";
  for (size_t i = 0; i < c.k; i++) {
    for (size_t j = 0; j < c.n; j++)
      std::cout << (j ? " " : "") << c.generator(i, j).get_str();
    std::cout << "\n";
  }
  std::cout << "weights:";
  for (size_t i = 0; i <= c.n; i++)
    if (wd.counts[i]) std::cout << " A" << i << "=" << wd.counts[i];
  std::cout << std::endl;
  return 0;
}

int main(int argc, char** argv) {
  CLI::App app{"exact ternary-code lattice toolkit"};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "enumeration worker threads");

  std::string filter, out, depth = "auto", maxStr = "0", name;
  std::vector<std::string> names;
  bool asJson = false, all = false;

  auto* list = app.add_subcommand("list", "list catalog entries");
  list->add_option("--filter", filter, "name substring or dim=N");
  list->add_flag("--json", asJson, "JSON output");

  auto* build = app.add_subcommand("build", "export a lattice");
  build->add_option("name", name, "catalog entry")->required();
  build->add_option("-o,--output", out, "output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "verify catalog claims");
  ver->add_option("names", names, "catalog entries");
  ver->add_flag("--all", all, "verify every entry");
  ver->add_option("--filter", filter, "name substring, dim=N, dim<=N, dim>=N");
  ver->add_option("--depth", depth,
                  "structural|shallow|deep|extended|auto (default auto)");
  ver->add_flag("--json", asJson, "JSON output");

  auto* theta = app.add_subcommand("theta", "theta series prefix");
  theta->add_option("name", name, "catalog entry")->required();
  theta->add_option("--max", maxStr, "largest scaled norm")->required();
  theta->add_flag("--json", asJson, "JSON output");

  auto* code = app.add_subcommand("code", "print a code from the inventory");
  code->add_option("name", name, "code name")->required();
  code->add_flag("--json", asJson, "JSON output");

  CLI11_PARSE(app, argc, argv);
#ifdef _OPENMP
  if (workers > 0) omp_set_num_threads(workers);
#endif
  try {
    if (list->parsed()) return cmd_list(filter, asJson);
    if (build->parsed()) return cmd_build(name, out);
    if (ver->parsed()) return cmd_verify(names, all, filter, depth, asJson);
    if (theta->parsed()) return cmd_theta(name, maxStr, asJson);
    if (code->parsed()) return cmd_code(name, asJson);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}
