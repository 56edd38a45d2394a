#include "ternlat/verification.hpp"

#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ternlat {

namespace {

using nlohmann::json;

Rat jrat(const json& j) { return rat_from_string(j.get<std::string>()); }

CatalogExpectation parse_entry(const json& e) {
  CatalogExpectation x;
  x.name = e.at("name").get<std::string>();
  x.rank = e.at("rank").get<size_t>();
  x.paperRef = e.at("paper_ref").get<std::string>();
  x.scaleSquared = jrat(e.at("scale_squared"));
  if (e.contains("note")) x.note = e.at("note").get<std::string>();
  if (e.contains("det_gram")) {
    x.detGram = jrat(e.at("det_gram").at("value"));
    x.detTag = e.at("det_gram").at("tag").get<std::string>();
  }
  if (e.contains("min_norm")) {
    x.minNorm = jrat(e.at("min_norm").at("value"));
    x.minTag = e.at("min_norm").at("tag").get<std::string>();
  }
  if (e.contains("kissing")) {
    x.kissing = e.at("kissing").at("value").get<uint64_t>();
    x.kissingTag = e.at("kissing").at("tag").get<std::string>();
    x.kissingExtended = e.at("kissing").value("cost", "") == "extended";
  }
  if (e.contains("center_density_squared")) {
    x.centerDensitySquared = jrat(e.at("center_density_squared").at("value"));
    x.cd2Tag = e.at("center_density_squared").at("tag").get<std::string>();
  }
  if (e.contains("even")) {
    x.even = e.at("even").at("value").get<bool>();
    x.evenTag = e.at("even").at("tag").get<std::string>();
  }
  if (e.contains("unimodular")) {
    x.unimodular = e.at("unimodular").at("value").get<bool>();
    x.unimodularTag = e.at("unimodular").at("tag").get<std::string>();
  }
  if (e.contains("second_layer")) {
    x.secondLayer = {jrat(e.at("second_layer").at("scaled_norm")),
                     e.at("second_layer").at("count").get<uint64_t>()};
    x.secondLayerTag = e.at("second_layer").at("tag").get<std::string>();
  }
  if (e.contains("theta_prefix")) {
    const json& t = e.at("theta_prefix");
    x.thetaMaxScaled = jrat(t.at("max_scaled_norm"));
    x.thetaTag = t.at("tag").get<std::string>();
    for (const auto& term : t.at("terms"))
      x.thetaPrefix.push_back({jrat(term.at(0)), term.at(1).get<uint64_t>()});
  }
  if (e.contains("support_conditions")) {
    x.supportConditions = e.at("support_conditions").at("value").get<bool>();
    x.supportTag = e.at("support_conditions").at("tag").get<std::string>();
  }
  if (e.contains("kissing_formula")) {
    x.kissingFormula = {e.at("kissing_formula").at("base").get<uint64_t>(),
                        e.at("kissing_formula").at("per_a18").get<uint64_t>()};
  }
  return x;
}

const std::vector<CatalogExpectation>& all_expectations() {
  static const std::vector<CatalogExpectation> cache = [] {
    std::ifstream in(data_dir() + "/catalog.json");
    if (!in) throw std::runtime_error("cannot open catalog.json");
    json doc = json::parse(in);
    std::vector<CatalogExpectation> v;
    for (const auto& e : doc.at("entries")) v.push_back(parse_entry(e));
    return v;
  }();
  return cache;
}

int tier(Depth d) { return static_cast<int>(d); }

std::string bool_str(bool b) { return b ? "true" : "false"; }

// One claim evaluation with timing; the evaluator fills expected/computed
// and returns the pass flag.
template <class F>
ClaimResult run_claim(const std::string& id, const std::string& tag, F&& f) {
  ClaimResult c;
  c.id = id;
  c.tag = tag;
  auto t0 = std::chrono::steady_clock::now();
  c.pass = f(c);
  c.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return c;
}

ClaimResult skipped_claim(const std::string& id, const std::string& tag,
                          const std::string& expected) {
  ClaimResult c;
  c.id = id;
  c.tag = tag;
  c.expected = expected;
  c.skipped = true;
  return c;
}

}  // namespace

Depth depth_from_string(const std::string& s) {
  if (s == "structural") return Depth::structural;
  if (s == "shallow") return Depth::shallow;
  if (s == "deep") return Depth::deep;
  if (s == "extended") return Depth::extended;
  throw std::invalid_argument("unknown depth: " + s);
}

std::string depth_to_string(Depth d) {
  switch (d) {
    case Depth::structural: return "structural";
    case Depth::shallow: return "shallow";
    case Depth::deep: return "deep";
    case Depth::extended: return "extended";
  }
  return "?";
}

Depth default_depth_for_rank(size_t rank) {
  if (rank <= 26) return Depth::deep;
  if (rank <= 32) return Depth::shallow;
  return Depth::structural;
}

CatalogExpectation catalog_expectation(const std::string& name) {
  std::string canon = canonical_name(name);
  for (const auto& e : all_expectations())
    if (e.name == canon) return e;
  throw std::out_of_range("no catalog expectation for " + name);
}

std::vector<CatalogExpectation> catalog_expectations() {
  return all_expectations();
}

bool report_passed(const VerificationReport& r) {
  if (r.buildError) return false;
  for (const auto& c : r.claims)
    if (!c.skipped && !c.pass) return false;
  return true;
}

VerificationReport verify(const std::string& name, Depth depth) {
  CatalogExpectation exp = catalog_expectation(name);
  VerificationReport rep;
  rep.name = exp.name;
  rep.depth = depth;

  BuiltLattice built;
  try {
    built = build_catalog(exp.name);
  } catch (const std::exception& e) {
    rep.buildError = true;
    rep.error = e.what();
    return rep;
  }
  const WeightedLattice& l = built.lattice;
  const Rat& s2 = exp.scaleSquared;
  RatMat g = gram(l);
  EvenIntegral ei = is_even_integral(l, s2);

  // ---- structural ----
  rep.claims.push_back(run_claim("rank", "DERIVED", [&](ClaimResult& c) {
    c.expected = std::to_string(exp.rank);
    c.computed = std::to_string(l.rank());
    return l.rank() == exp.rank;
  }));
  if (exp.detGram)
    rep.claims.push_back(run_claim("det_gram", exp.detTag, [&](ClaimResult& c) {
      Rat d = det_gram(l);
      c.expected = rat_to_string(*exp.detGram);
      c.computed = rat_to_string(d);
      return d == *exp.detGram;
    }));
  if (exp.even)
    rep.claims.push_back(run_claim("even", exp.evenTag, [&](ClaimResult& c) {
      c.expected = bool_str(*exp.even);
      c.computed = ei.even          ? std::string("even")
                   : ei.integral   ? std::string("integral,odd")
                                   : std::string("non-integral");
      return ei.even == *exp.even;
    }));
  if (exp.unimodular)
    rep.claims.push_back(
        run_claim("unimodular", exp.unimodularTag, [&](ClaimResult& c) {
          bool u = is_unimodular(l, s2);
          c.expected = bool_str(*exp.unimodular);
          c.computed = bool_str(u);
          return u == *exp.unimodular;
        }));
  if (exp.supportConditions)
    rep.claims.push_back(
        run_claim("support_conditions", exp.supportTag, [&](ClaimResult& c) {
          T48Arrangement a = t48_arrangement();
          uint32_t half = 0;
          for (size_t p : a.copy1) half |= uint32_t(1) << p;
          auto viols = support_conditions_48(t48_ternary_code(a),
                                             binary_golay24(), half);
          c.expected = *exp.supportConditions ? "satisfied" : "violated";
          c.computed = viols.empty()
                           ? std::string("satisfied")
                           : std::to_string(viols.size()) + " violations";
          return viols.empty() == *exp.supportConditions;
        }));
  if (exp.kissingFormula && exp.kissing)
    rep.claims.push_back(
        run_claim("kissing_formula", exp.kissingTag, [&](ClaimResult& c) {
          auto wd = weight_distribution(catalog_code("sd20_10_6"));
          uint64_t a18 = wd.counts[18];
          uint64_t val =
              exp.kissingFormula->first + exp.kissingFormula->second * a18;
          c.expected = std::to_string(*exp.kissing);
          c.computed = std::to_string(exp.kissingFormula->first) + " + " +
                       std::to_string(exp.kissingFormula->second) + "*" +
                       std::to_string(a18) + " = " + std::to_string(val);
          return val == *exp.kissing;
        }));

  // ---- shallow ----
  bool smallRank = exp.rank <= 26;
  std::optional<Rat> minComputed;
  if (exp.minNorm) {
    if (smallRank) {
      if (tier(depth) >= tier(Depth::shallow))
        rep.claims.push_back(
            run_claim("min_norm", exp.minTag, [&](ClaimResult& c) {
              Rat m = min_norm(g);
              minComputed = m;
              c.expected = rat_to_string(*exp.minNorm);
              c.computed = rat_to_string(m);
              return m == *exp.minNorm;
            }));
      else
        rep.claims.push_back(
            skipped_claim("min_norm", exp.minTag, rat_to_string(*exp.minNorm)));
    } else {
      // Lower-bound emptiness check: enumerate to the largest norm that a
      // lattice with the *claimed* integrality properties could have below
      // the claimed minimum (even => claimed scaled min - 2, else - 1).
      Rat scaledMin = *exp.minNorm * s2;
      Rat step = (exp.even && *exp.even) ? Rat(2) : Rat(1);
      Rat bound = (scaledMin - step) / s2;
      if (tier(depth) >= tier(Depth::shallow))
        rep.claims.push_back(run_claim(
            "min_norm_lower_bound", exp.minTag, [&](ClaimResult& c) {
              c.expected =
                  "no vector of norm <= " + rat_to_string(bound) +
                  " (claimed min " + rat_to_string(*exp.minNorm) + ")";
              auto hist = norm_histogram(g, bound);
              if (hist.empty()) {
                c.computed = "none found";
                return true;
              }
              c.computed = std::to_string(hist.front().second) +
                           " vectors of norm " +
                           rat_to_string(hist.front().first);
              return false;
            }));
      else
        rep.claims.push_back(skipped_claim(
            "min_norm_lower_bound", exp.minTag,
            "no vector of norm <= " + rat_to_string(bound)));
      if (depth == Depth::extended)
        rep.claims.push_back(
            run_claim("min_norm", exp.minTag, [&](ClaimResult& c) {
              Rat m = min_norm(g);
              minComputed = m;
              c.expected = rat_to_string(*exp.minNorm);
              c.computed = rat_to_string(m);
              return m == *exp.minNorm;
            }));
      else
        rep.claims.push_back(
            skipped_claim("min_norm", exp.minTag, rat_to_string(*exp.minNorm)));
    }
  }
  if (exp.centerDensitySquared) {
    // Always computed from this report's own det and min results.
    if (minComputed)
      rep.claims.push_back(
          run_claim("center_density_squared", exp.cd2Tag, [&](ClaimResult& c) {
            Rat cd2 = center_density_squared(l, *minComputed);
            c.expected = rat_to_string(*exp.centerDensitySquared);
            c.computed = rat_to_string(cd2);
            return cd2 == *exp.centerDensitySquared;
          }));
    else
      rep.claims.push_back(
          skipped_claim("center_density_squared", exp.cd2Tag,
                        rat_to_string(*exp.centerDensitySquared)));
  }

  // ---- deep ----
  if (exp.kissing && !exp.kissingFormula) {
    bool runKiss = exp.kissingExtended ? depth == Depth::extended
                                       : tier(depth) >= tier(Depth::deep);
    if (runKiss && !minComputed && exp.minNorm &&
        (smallRank || depth == Depth::extended)) {
      // kissing needs the minimum; compute it if the min claim was skipped
      minComputed = min_norm(g);
    }
    if (runKiss && minComputed)
      rep.claims.push_back(
          run_claim("kissing", exp.kissingTag, [&](ClaimResult& c) {
            auto hist = norm_histogram(g, *minComputed);
            uint64_t k = hist.empty() ? 0 : hist.back().second;
            c.expected = std::to_string(*exp.kissing);
            c.computed = std::to_string(k) + " at norm " +
                         rat_to_string(*minComputed);
            return k == *exp.kissing && minComputed == exp.minNorm;
          }));
    else
      rep.claims.push_back(skipped_claim("kissing", exp.kissingTag,
                                         std::to_string(*exp.kissing)));
  }
  if (!exp.thetaPrefix.empty()) {
    if (tier(depth) >= tier(Depth::deep))
      rep.claims.push_back(
          run_claim("theta_prefix", exp.thetaTag, [&](ClaimResult& c) {
            auto t = theta_prefix(g, exp.thetaMaxScaled, s2);
            auto fmt = [](const std::vector<std::pair<Rat, uint64_t>>& v) {
              std::ostringstream o;
              for (const auto& [n, cnt] : v)
                o << " " << rat_to_string(n) << ":" << cnt;
              return o.str().empty() ? std::string(" (empty)") : o.str();
            };
            c.expected = fmt(exp.thetaPrefix);
            c.computed = fmt(t);
            return t == exp.thetaPrefix;
          }));
    else
      rep.claims.push_back(skipped_claim(
          "theta_prefix", exp.thetaTag,
          "series through scaled norm " + rat_to_string(exp.thetaMaxScaled)));
  }
  if (exp.secondLayer) {
    if (tier(depth) >= tier(Depth::deep))
      rep.claims.push_back(
          run_claim("second_layer", exp.secondLayerTag, [&](ClaimResult& c) {
            auto [mu2, k2] = second_layer(g);
            Rat scaled = mu2 * s2;
            c.expected = rat_to_string(exp.secondLayer->first) + ":" +
                         std::to_string(exp.secondLayer->second);
            c.computed = rat_to_string(scaled) + ":" + std::to_string(k2);
            return scaled == exp.secondLayer->first &&
                   k2 == exp.secondLayer->second;
          }));
    else
      rep.claims.push_back(
          skipped_claim("second_layer", exp.secondLayerTag,
                        rat_to_string(exp.secondLayer->first) + ":" +
                            std::to_string(exp.secondLayer->second)));
  }
  return rep;
}

std::vector<VerificationReport> run_all(Depth depth,
                                        const std::string& filter) {
  auto matches = [&](const CatalogExpectation& e) {
    if (filter.empty() || filter == "all") return true;
    auto dim = [&](size_t off) -> long {
      return atol(filter.c_str() + off);
    };
    if (filter.rfind("dim<=", 0) == 0) return (long)e.rank <= dim(5);
    if (filter.rfind("dim>=", 0) == 0) return (long)e.rank >= dim(5);
    if (filter.rfind("dim=", 0) == 0) return (long)e.rank == dim(4);
    return e.name.find(filter) != std::string::npos;
  };
  std::vector<VerificationReport> out;
  for (const auto& e : all_expectations())
    if (matches(e)) out.push_back(verify(e.name, depth));
  return out;
}

int reports_exit_code(const std::vector<VerificationReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.buildError) return 2;
    if (!report_passed(r)) code = 1;
  }
  return code;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json jr;
    jr["name"] = r.name;
    jr["depth"] = depth_to_string(r.depth);
    jr["passed"] = report_passed(r);
    if (r.buildError) jr["build_error"] = r.error;
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : r.claims) {
      nlohmann::json jc;
      jc["id"] = c.id;
      jc["tag"] = c.tag;
      jc["expected"] = c.expected;
      if (c.skipped) {
        jc["status"] = "skipped";
      } else {
        jc["status"] = c.pass ? "pass" : "fail";
        jc["computed"] = c.computed;
        jc["seconds"] = c.seconds;
      }
      claims.push_back(jc);
    }
    jr["claims"] = claims;
    out.push_back(jr);
  }
  return out.dump(2);
}

std::string reports_to_table(const std::vector<VerificationReport>& reports) {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"entry", "claim", "tag", "expected", "computed", "status"});
  for (const auto& r : reports) {
    if (r.buildError) {
      rows.push_back({r.name, "(build)", "", "", r.error, "ERROR"});
      continue;
    }
    for (const auto& c : r.claims)
      rows.push_back({r.name, c.id, c.tag, c.expected, c.computed,
                      c.skipped ? "skip" : c.pass ? "pass" : "FAIL"});
  }
  std::array<size_t, 6> w{};
  for (const auto& row : rows)
    for (size_t i = 0; i < 6; i++) w[i] = std::max(w[i], row[i].size());
  // Cap the free-text columns so theta series do not blow up the table.
  w[3] = std::min<size_t>(w[3], 40);
  w[4] = std::min<size_t>(w[4], 40);
  std::ostringstream o;
  for (const auto& row : rows) {
    for (size_t i = 0; i < 6; i++) {
      std::string cell = row[i];
      if (cell.size() > w[i]) cell = cell.substr(0, w[i] - 3) + "...";
      o << cell << std::string(w[i] - cell.size() + 2, ' ');
    }
    o << "\n";
  }
  return o.str();
}

Fingerprint fingerprint(const WeightedLattice& l, const Rat& scaleSquared,
                        const Rat& maxScaledNorm) {
  Fingerprint f;
  f.rank = l.rank();
  Rat d = det_gram(l);
  for (size_t i = 0; i < l.rank(); i++) d *= scaleSquared;
  f.detGram = d;
  f.thetaPrefix = theta_prefix(gram(l), maxScaledNorm, scaleSquared);
  return f;
}

}  // namespace ternlat
