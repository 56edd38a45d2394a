// Acceptance gate: the fifteen headline claims about the catalog, each
// reported as a single PASS/FAIL line. Every comparison is exact rational
// equality; enumeration results are recomputed here, never read from the
// data files. Exits nonzero when any criterion fails.
//
// Two enumeration-heavy counts (26-dim kissing, 32-dim kissing) run only
// when TERNLAT_ACCEPTANCE_EXTENDED is set; without it the remaining checks
// of those criteria still run and decide the line.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "ternlat/verification.hpp"

using namespace ternlat;

namespace {

std::vector<std::string> notes;  // failure details for the current criterion

void expect(bool cond, const std::string& msg) {
  if (!cond) notes.push_back(msg);
}

template <class T>
std::string str(const T& v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}
std::string str(const Rat& v) { return rat_to_string(v); }

void expect_eq(const Rat& got, const Rat& want, const std::string& what) {
  expect(got == want,
         what + ": expected " + str(want) + ", got " + str(got));
}
void expect_eq(uint64_t got, uint64_t want, const std::string& what) {
  expect(got == want,
         what + ": expected " + str(want) + ", got " + str(got));
}

// (minimum norm, both-sign count at the minimum).
std::pair<Rat, uint64_t> min_shell(const RatMat& g) {
  Rat mn = min_norm(g);
  auto h = norm_histogram(g, mn);
  return {mn, h.empty() ? 0 : h.front().second};
}

void check_min_kiss_cd2(const std::string& name, const Rat& wantMin,
                        uint64_t wantKiss, const Rat& wantCd2) {
  BuiltLattice b = build_catalog(name);
  auto [mn, kiss] = min_shell(gram(b.lattice));
  if (wantMin != 0) expect_eq(mn, wantMin, name + " min norm");
  if (wantKiss) expect_eq(kiss, wantKiss, name + " kissing");
  if (wantCd2 != 0)
    expect_eq(center_density_squared(b.lattice, mn), wantCd2,
              name + " center density squared");
}

Rat pow3(long e) {
  Rat r = 1;
  for (long i = 0; i < e; i++) r *= 3;
  return r;
}

bool extended_enabled() {
  return std::getenv("TERNLAT_ACCEPTANCE_EXTENDED") != nullptr;
}

WeightedLattice zn(size_t n) { return solution_lattice(n, IntMat(0, n)); }

WeightedLattice dn(size_t n) {
  IntMat parity(1, n);
  for (size_t j = 0; j < n; j++) parity(0, j) = 1;
  return solution_lattice(n, IntMat(0, n), {{parity, Int(2)}});
}

// verify() claims reused where the criterion matches them one-for-one.
const ClaimResult* find_claim(const VerificationReport& r,
                              const std::string& id) {
  for (const auto& c : r.claims)
    if (c.id == id) return &c;
  return nullptr;
}

void expect_claim(const VerificationReport& r, const std::string& id) {
  const ClaimResult* c = find_claim(r, id);
  if (!c) {
    notes.push_back(r.name + " " + id + ": claim missing");
    return;
  }
  expect(c->pass && !c->skipped, r.name + " " + id + ": expected " +
                                     c->expected + ", got " + c->computed);
}

// --- criteria ---------------------------------------------------------

void c1_e8() {
  BuiltLattice b = build_catalog("e8");
  check_min_kiss_cd2("e8", Rat(36), 240, rat(1, 256));
  // det 18^8 at construction scale; 1/18 is the normalization making the
  // lattice even unimodular (scaled min 2).
  auto ei = is_even_integral(b.lattice, rat(1, 18));
  expect(ei.integral && ei.even, "e8 at 1/18: not integral even");
  expect(is_unimodular(b.lattice, rat(1, 18)), "e8 at 1/18: not unimodular");
}

void c2_dim10_9() {
  check_min_kiss_cd2("t10", Rat(36), 336, rat(1, 768));
  auto [n2, k2] = second_layer(gram(build_catalog("t10").lattice));
  expect_eq(k2, 768, "t10 second layer count");
  auto [mn9, kiss9] = min_shell(gram(build_catalog("k9").lattice));
  expect_eq(kiss9, 198, "k9 kissing");
}

void c3_k10_pair() {
  check_min_kiss_cd2("k10", Rat(36), 276, rat(1, 972));
  check_min_kiss_cd2("k10_martinet", Rat(36), 270, rat(1, 972));
}

void c4_k12_pair() {
  check_min_kiss_cd2("k12_codes", Rat(36), 756, rat(1, 729));
  check_min_kiss_cd2("k12_glue", Rat(36), 756, rat(1, 729));
  expect(gram(reference_base("k12_codes")) == reference_gram("k12_codes"),
         "k12 printed Gram differs from the reference base");
  BuiltLattice a = build_catalog("k12_codes"), b = build_catalog("k12_glue");
  expect(fingerprint(a.lattice, a.scaleSquared, Rat(8)) ==
             fingerprint(b.lattice, b.scaleSquared, Rat(8)),
         "k12 constructions: fingerprints differ through scaled norm 8");
}

void c5_t16() {
  BuiltLattice b = build_catalog("t16");
  Rat side = pow3(16) / 16;
  expect_eq(det_gram(b.lattice), side * side, "t16 det Gram");
  auto [mn, kiss] = min_shell(gram(b.lattice));
  expect_eq(mn, Rat(18), "t16 min norm");
  expect_eq(kiss, 4320, "t16 kissing");
}

void c6_t24() {
  BuiltLattice b = build_catalog("t24");
  expect_eq(det_gram(b.lattice), pow3(48), "t24 det Gram");
  auto ei = is_even_integral(b.lattice, rat(1, 9));
  expect(ei.integral && ei.even, "t24 at 1/9: not integral even");
  expect(is_unimodular(b.lattice, rat(1, 9)), "t24 at 1/9: not unimodular");
  auto [mn, kiss] = min_shell(gram(b.lattice));
  expect_eq(mn, Rat(36), "t24 min norm");  // scaled 4
  expect_eq(kiss, 196560, "t24 kissing");
}

void c7_t22_t26() {
  auto [mn22, kiss22] = min_shell(gram(build_catalog("t22").lattice));
  expect_eq(kiss22, 49896, "t22 kissing");
  BuiltLattice b = build_catalog("t26");
  expect_eq(det_gram(b.lattice), pow3(53), "t26 det Gram");
  Rat scaledDet = det_gram(b.lattice);
  for (int i = 0; i < 26; i++) scaledDet /= 9;
  expect_eq(scaledDet, Rat(3), "t26 scaled det");
  auto ei = is_even_integral(b.lattice, rat(1, 9));
  expect(ei.integral && ei.even,
         std::string("t26 at 1/9: expected integral even, got ") +
             (ei.integral ? "integral, odd" : "non-integral"));
  expect_eq(min_norm(gram(b.lattice)), Rat(36), "t26 min norm");
  if (extended_enabled()) {
    auto h = norm_histogram(gram(b.lattice), Rat(36));
    expect_eq(h.empty() ? 0 : h.front().second, 196848, "t26 kissing");
  }
}

void c8_dim12_14() {
  check_min_kiss_cd2("w12", Rat(36), 432, rat(1, 2304));
  check_min_kiss_cd2("s14", Rat(36), 0, rat(1, 768));
  check_min_kiss_cd2("lambda13", Rat(36), 726, rat(1, 1536));
  // 14 integer coefficient rows in the constructed basis realizing the
  // printed 14x14 Gram (witness found once by backtracking, frozen here).
  static const long W[14][14] = {
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0},
      {0, 3, 0, 0, -1, -2, 0, -2, 0, 0, -1, -2, 0, -1},
      {-3, 3, 0, 2, 1, -1, 2, -2, 0, 2, 1, -1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 6, -5, 0, -4, 0, 0, -2, -4, 0, -4, -3, 1},
      {0, 0, 0, 0, 0, 0, 0, 0, 2, -1, 0, 0, 0, -1},
      {0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0},
      {0, 0, 2, -2, 0, -1, 0, 0, 0, -2, 0, -2, -1, 0},
      {1, -1, 2, -2, -1, -1, -1, 1, 0, -2, -1, -1, -1, 0},
      {2, -1, -3, 1, -1, 2, -1, 0, 1, 1, -1, 2, 2, -1},
      {2, -1, 3, -5, -1, -2, -1, 0, -2, -2, -1, -2, -2, 1}};
  BuiltLattice t14 = build_catalog("t14");
  RatMat g = gram(t14.lattice);
  RatMat target = reference_gram("t14");
  bool ok = t14.lattice.rank() == 14;
  for (size_t i = 0; ok && i < 14; i++)
    for (size_t j = 0; ok && j < 14; j++) {
      Rat s = 0;
      for (size_t a = 0; a < 14; a++)
        for (size_t c = 0; c < 14; c++)
          if (W[i][a] != 0 && W[j][c] != 0)
            s += Rat(W[i][a] * W[j][c]) * g(a, c);
      ok = s == target(i, j);
    }
  expect(ok, "t14 printed Gram not realized by the frozen witness rows");
}

void theta_check(const std::string& name, const Rat& maxScaled) {
  CatalogExpectation e = catalog_expectation(name);
  std::vector<std::pair<Rat, uint64_t>> want;
  for (const auto& t : e.thetaPrefix)
    if (t.first <= maxScaled) want.push_back(t);
  BuiltLattice b = build_catalog(name);
  auto got = theta_prefix(gram(b.lattice), maxScaled, b.scaleSquared);
  expect(got == want, name + " theta prefix differs through scaled norm " +
                          str(maxScaled));
}

void c9_theta_suite() {
  theta_check("h10", Rat(40));
  theta_check("k14_2", Rat(8));
  theta_check("k14_2_sub13", Rat(90));
  theta_check("k14_2_sub12", Rat(198));
  check_min_kiss_cd2("s12", Rat(36), 456, Rat(0));
  check_min_kiss_cd2("s16", Rat(36), 2664, Rat(0));
  check_min_kiss_cd2("l10_hamming", Rat(0), 0, rat(27, 25600));
  auto [mnl, kissl] = min_shell(gram(build_catalog("l10_hamming").lattice));
  expect_eq(kissl, 272, "l10_hamming kissing");
  auto [m1, k1] = min_shell(gram(build_catalog("t18_1").lattice));
  expect_eq(k1, 5796, "t18_1 kissing");
  auto [m2, k2] = min_shell(gram(build_catalog("t18_2").lattice));
  expect_eq(k2, 5712, "t18_2 kissing");
}

void c10_kappa() {
  struct Row {
    const char* name;
    size_t n;
    uint64_t kiss;
  };
  for (const Row& row : std::initializer_list<Row>{{"l12_kappa", 6, 756},
                                                   {"l18_kappa", 9, 6480},
                                                   {"l20_kappa", 10, 15390},
                                                   {"l22_kappa", 11, 33066}}) {
    BuiltLattice b = build_catalog(row.name);
    LinearCode c =
        row.n == 6
            ? code_from_generator(
                  3, [] {
                    IntMat m(1, 6);
                    long v[6] = {1, 1, 1, -1, -1, -1};
                    for (size_t j = 0; j < 6; j++) m(0, j) = v[j];
                    return m;
                  }())
            : catalog_code(row.n == 9 ? "c9_3_6"
                                      : (row.n == 10 ? "c10_4_6" : "c11_5_6"));
    expect_eq(det_gram(b.lattice), pow3(3 * (long)row.n - 2 * (long)c.k + 2),
              std::string(row.name) + " det Gram");
    auto [mn, kiss] = min_shell(gram(b.lattice));
    expect_eq(mn, Rat(12), std::string(row.name) + " min norm");
    uint64_t a6 = weight_distribution(c).counts[6];
    expect_eq(kissing_formula_11(row.n, a6), row.kiss,
              std::string(row.name) + " closed-form kissing");
    expect_eq(kiss, row.kiss, std::string(row.name) + " enumerated kissing");
  }
}

void c11_dim32() {
  for (const char* name : {"t32_v1", "t32_v2", "t32_v3", "t32_v4"}) {
    auto r = verify(name, Depth::shallow);
    expect_claim(r, "even");
    expect_claim(r, "unimodular");
    expect_claim(r, "min_norm_lower_bound");
  }
  if (extended_enabled()) {
    for (const char* name : {"t32_v1", "t32_v2"}) {
      auto h = norm_histogram(gram(build_catalog(name).lattice), Rat(18));
      expect_eq(h.empty() ? 0 : h.front().second, 146880,
                std::string(name) + " kissing");
    }
  }
}

void c12_dim40() {
  auto r = verify("t40", Depth::shallow);
  expect_claim(r, "even");
  expect_claim(r, "unimodular");
  expect_claim(r, "min_norm_lower_bound");
  LinearCode c = catalog_code("sd20_10_6");
  uint64_t a18 = weight_distribution(c).counts[18];
  expect_eq(a18, 2560, "sd20 code A18");
  expect_eq(uint64_t(24240 + 3 * 2 * a18), 39600, "40-dim kissing formula");
}

void c13_dim48() {
  T48Arrangement a = t48_arrangement();
  uint32_t duumHalf = 0;
  for (size_t p : a.copy1) duumHalf |= uint32_t(1) << p;
  auto violations =
      support_conditions_48(t48_ternary_code(a), binary_golay24(), duumHalf);
  expect(violations.empty(), "support conditions: " +
                                 str(violations.size()) + " violations");
  BuiltLattice b = build_catalog("t48");
  auto ei = is_even_integral(b.lattice, b.scaleSquared);
  expect(ei.integral && ei.even, "t48 at 2/9: not integral even");
  expect(is_unimodular(b.lattice, b.scaleSquared),
         "t48 at 2/9: scaled det != 1");
  // claimed: nothing below scaled norm 6. Scaled norms of an even lattice
  // are even integers, so scan the scaled-4 shell (unscaled 18) first and
  // widen only if it is empty.
  auto h = norm_histogram(gram(b.lattice), Rat(18));
  if (h.empty()) h = norm_histogram(gram(b.lattice), Rat(26));
  if (!h.empty())
    notes.push_back("t48: " + str(h.front().second) +
                    " vectors of scaled norm " +
                    str(h.front().first * b.scaleSquared) + " < 6");
}

void c14_oracle() {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long> dist(-3, 3);
  std::uniform_int_distribution<size_t> rdim(1, 6);
  for (int trial = 0; trial < 25; trial++) {
    size_t n = rdim(rng);
    RatMat b(n, n);
    for (auto& v : b.a) v = Rat(dist(rng));
    RatMat g = matmul(b, b.transposed());
    for (size_t i = 0; i < n; i++) g(i, i) += 1 + (long)(trial % 4);
    Rat bound = Rat(5 + trial % 7);
    auto fast = short_vectors(g, bound);
    auto slow = brute_force_short_vectors(g, bound, 0);
    bool same = fast.size() == slow.size();
    for (size_t i = 0; same && i < fast.size(); i++)
      same = fast[i].coeffs == slow[i].coeffs && fast[i].norm == slow[i].norm;
    expect(same, "trial " + str(trial) + ": enumeration/oracle mismatch (" +
                     str(fast.size()) + " vs " + str(slow.size()) + ")");
  }
}

void c15_volume_identity() {
  // The builder enforces det T(C) = det(L)^2 * 3^(5r-2k) internally and
  // throws on violation, so building the whole catalog exercises it ...
  for (const auto& name : catalog_names()) {
    try {
      build_catalog(name);
    } catch (const std::exception& e) {
      notes.push_back(name + ": build failed: " + e.what());
    }
  }
  // ... and these publicly reconstructible instances recheck it explicitly.
  struct Pair {
    WeightedLattice l;
    LinearCode c;
    const char* what;
  };
  T48Arrangement a = t48_arrangement();
  std::vector<Pair> pairs;
  pairs.push_back({zn(8), catalog_code("c8_4_3"), "zn8 + [8,4]"});
  pairs.push_back({dn(12), catalog_code("golay12"), "dn12 + golay12"});
  pairs.push_back({dn(13), catalog_code("c13_6_6"), "dn13 + [13,6]"});
  pairs.push_back(
      {dn(16), catalog_code("c16_8_6_hadamard"), "dn16 + [16,8]"});
  pairs.push_back({dn(20), catalog_code("sd20_10_6"), "dn20 + [20,10]"});
  pairs.push_back({dn(24), t48_ternary_code(a), "dn24 + [24,12]"});
  for (const Pair& p : pairs) {
    WeightedLattice t = ternary_construction(p.l, p.c);
    Rat want = det_gram(p.l) * det_gram(p.l) *
               pow3(5 * (long)p.l.rank() - 2 * (long)p.c.k);
    expect_eq(det_gram(t), want,
              std::string(p.what) + " det of the ternary construction");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    void (*run)();
  };
  const Criterion criteria[] = {
      {"E8 from the ternary construction", c1_e8},
      {"10-dim lattice and its 9-dim section", c2_dim10_9},
      {"two distinct 10-dim constructions", c3_k10_pair},
      {"12-dim lattice both ways + printed Gram", c4_k12_pair},
      {"16-dim lattice", c5_t16},
      {"24-dim even unimodular lattice", c6_t24},
      {"22- and 26-dim lattices", c7_t22_t26},
      {"12/13/14-dim family + printed 14-dim Gram", c8_dim12_14},
      {"theta series and kissing suite", c9_theta_suite},
      {"kappa family n=6,9,10,11", c10_kappa},
      {"32-dim variants", c11_dim32},
      {"40-dim lattice from a self-dual code", c12_dim40},
      {"48-dim lattice", c13_dim48},
      {"enumeration vs brute-force oracle", c14_oracle},
      {"volume identity of the ternary construction", c15_volume_identity},
  };
  int failures = 0;
  for (size_t i = 0; i < 15; i++) {
    notes.clear();
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run();
    } catch (const std::exception& e) {
      notes.push_back(std::string("exception: ") + e.what());
    }
    double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    bool ok = notes.empty();
    if (!ok) failures++;
    std::printf("[%2zu] %s  %-45s (%.1f s)\n", i + 1, ok ? "PASS" : "FAIL",
                criteria[i].label, s);
    for (const auto& n : notes) std::printf("       - %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/15 criteria passed\n", 15 - failures);
  return failures ? 1 : 0;
}
