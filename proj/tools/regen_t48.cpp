// Regenerates data/t48_arrangement.json: the coordinate arrangement for the
// 48-dimensional catalog entry.
//
// Stage 1 (deterministic exhaustive search): the support-condition violation
// count of an arrangement depends only on which S(5,6,12) block system each
// copy of the [12,6,6] code induces on its half of the 24 coordinates. There
// are exactly |S12| / |M12| = 5040 distinct systems per side, so all 5040^2
// pairs can be checked. No pair has zero violations (the support conditions
// are unsatisfiable for the direct sum of two [12,6,6] codes); the search
// therefore keeps the pair minimizing the total violation count (132).
//
// Stage 2: sign-flip positions for the two special glue vectors. Integrality
// at scale 2/9 forces the flip set to meet every octad row of the greedy
// binary glue basis evenly. No flip set splitting 3+1 across the two halves
// satisfies that parity system, so the search falls back to 3+3 (which keeps
// the second glue vector's coset norm bound at 9 + 6*9/2 = 36 >= 27). The
// first candidate whose lattice is even unimodular at 2/9 is written out.
//
// Usage: regen_t48 [output-path]
//        (default path: <data_dir>/t48_arrangement.json)
#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "ternlat/catalog.hpp"
#include "ternlat/exact_linalg.hpp"
#include "ternlat/lattice.hpp"

using namespace ternlat;

using Sys = std::vector<uint16_t>;  // sorted hexad masks on 12 points

int main(int argc, char** argv) {
  std::string out = argc > 1 ? argv[1] : data_dir() + "/t48_arrangement.json";

  LinearCode golay = binary_golay24();
  std::vector<uint32_t> octads, dodecads;
  for (const auto& w : all_codewords(golay)) {
    uint32_t m = 0;
    int wt = 0;
    for (size_t j = 0; j < 24; j++)
      if (w[j]) {
        m |= 1u << j;
        wt++;
      }
    if (wt == 8) octads.push_back(m);
    if (wt == 12) dodecads.push_back(m);
  }
  // The halves must be a complementary dodecad pair; all such pairs are
  // equivalent under the code's automorphisms, so fix the first dodecad.
  uint32_t H = dodecads[0], Hc = ~H & 0xFFFFFFu;
  std::vector<int> pos1, pos2;
  for (int j = 0; j < 24; j++) ((H >> j) & 1 ? pos1 : pos2).push_back(j);
  auto slot = [&](uint32_t g, const std::vector<int>& pos) {
    uint16_t m = 0;
    for (int k = 0; k < 12; k++)
      if ((g >> pos[k]) & 1) m |= uint16_t(1) << k;
    return m;
  };
  // Condition-1 violations: hexads of a copy equal to an octad's hexad trace
  // on that half.
  std::unordered_set<uint16_t> special1, special2;
  for (uint32_t o : octads) {
    if (std::popcount(o & H) == 6) special1.insert(slot(o & H, pos1));
    if (std::popcount(o & Hc) == 6) special2.insert(slot(o & Hc, pos2));
  }
  // Conditions 2-3: hexad pairs (one per half) whose union is a dodecad of
  // the binary code or the weight-12 union of two octads (the supports of two
  // weight-8 codewords meet in exactly 4 positions in that case).
  std::unordered_set<uint32_t> bad12;
  for (uint32_t d : dodecads)
    if (std::popcount(d & H) == 6) bad12.insert(d);
  for (size_t i = 0; i < octads.size(); i++)
    for (size_t j = i + 1; j < octads.size(); j++)
      if (std::popcount(octads[i] & octads[j]) == 4) {
        uint32_t u = octads[i] | octads[j];
        if (std::popcount(u & H) == 6) bad12.insert(u);
      }
  std::vector<uint16_t> hexads;
  std::unordered_map<uint16_t, int> hexIdx;
  for (uint16_t m = 0; m < 4096; m++)
    if (std::popcount(m) == 6) {
      hexIdx[m] = (int)hexads.size();
      hexads.push_back(m);
    }
  const int NH = (int)hexads.size();  // 924
  const int W = (NH + 63) / 64;
  std::vector<uint64_t> forb((size_t)NH * W, 0);  // hexad a -> bits over b
  for (uint32_t u : bad12) {
    int a = hexIdx[slot(u & H, pos1)], b = hexIdx[slot(u & Hc, pos2)];
    forb[(size_t)a * W + b / 64] |= uint64_t(1) << (b % 64);
  }
  std::cout << "forbidden cross-half hexad pairs: " << bad12.size()
            << std::endl;

  // Hexad system of the [12,6,6] code in its shipped coordinates.
  Sys base;
  {
    std::unordered_set<uint16_t> seen;
    for (const auto& w : all_codewords(ternary_golay12())) {
      uint16_t m = 0;
      int wt = 0;
      for (size_t j = 0; j < 12; j++)
        if (w[j]) {
          m |= uint16_t(1) << j;
          wt++;
        }
      if (wt == 6) seen.insert(m);
    }
    base.assign(seen.begin(), seen.end());
    std::sort(base.begin(), base.end());
  }
  // Collect all 5040 distinct permutation images of that system, remembering
  // one witness permutation each. Random sampling with a fixed seed saturates
  // the set quickly and keeps the run deterministic.
  std::mt19937 rng(42);
  std::map<Sys, std::vector<int>> systems;
  std::vector<int> p(12);
  for (int k = 0; k < 12; k++) p[k] = k;
  long tries = 0;
  while (systems.size() < 5040 && tries < 3000000) {
    std::shuffle(p.begin(), p.end(), rng);
    Sys s(base.size());
    for (size_t i = 0; i < base.size(); i++) {
      uint16_t m = 0;
      for (int k = 0; k < 12; k++)
        if ((base[i] >> k) & 1) m |= uint16_t(1) << p[k];
      s[i] = m;
    }
    std::sort(s.begin(), s.end());
    systems.emplace(std::move(s), p);
    tries++;
  }
  std::cout << "distinct block systems per side: " << systems.size()
            << std::endl;
  if (systems.size() != 5040) {
    std::cerr << "failed to saturate the block-system orbit" << std::endl;
    return 1;
  }

  struct Cand {
    const Sys* s;
    const std::vector<int>* perm;
    long viol;  // condition-1 violations on this side
  };
  std::vector<Cand> list1, list2;
  for (const auto& [s, perm] : systems) {
    long v1 = 0, v2 = 0;
    for (uint16_t m : s) {
      if (special1.count(m)) v1++;
      if (special2.count(m)) v2++;
    }
    list1.push_back({&s, &perm, v1});
    list2.push_back({&s, &perm, v2});
  }
  // Per-candidate bitsets: union of forbidden partners (side 1) and member
  // hexads (side 2), so a pair's cross violations are popcounts of ANDs.
  std::vector<uint64_t> u1((size_t)list1.size() * W, 0);
  for (size_t i = 0; i < list1.size(); i++)
    for (uint16_t m : *list1[i].s) {
      int a = hexIdx[m];
      for (int w = 0; w < W; w++) u1[i * W + w] |= forb[(size_t)a * W + w];
    }
  std::vector<std::vector<uint64_t>> s2mask(list2.size(),
                                            std::vector<uint64_t>(W, 0));
  for (size_t j = 0; j < list2.size(); j++)
    for (uint16_t m : *list2[j].s) {
      int b = hexIdx[m];
      s2mask[j][b / 64] |= uint64_t(1) << (b % 64);
    }
  long best = 1 << 30;
  size_t bi = 0, bj = 0;
  for (size_t i = 0; i < list1.size(); i++)
    for (size_t j = 0; j < list2.size(); j++) {
      long lb = list1[i].viol + list2[j].viol;
      if (lb >= best) continue;
      for (int w = 0; w < W; w++)  // union bound, cheap prune
        lb += std::popcount(u1[i * W + w] & s2mask[j][w]);
      if (lb >= best) continue;
      long hits = list1[i].viol + list2[j].viol;
      for (uint16_t a : *list1[i].s) {
        const uint64_t* row = &forb[(size_t)hexIdx[a] * W];
        for (int w = 0; w < W; w++)
          hits += std::popcount(row[w] & s2mask[j][w]);
      }
      if (hits < best) {
        best = hits;
        bi = i;
        bj = j;
      }
    }
  std::cout << "minimum total support violations over all 5040^2 pairs: "
            << best << (best ? " (support conditions unsatisfiable)" : "")
            << std::endl;

  T48Arrangement a;
  for (int k = 0; k < 12; k++) a.copy1.push_back(pos1[(*list1[bi].perm)[k]]);
  for (int k = 0; k < 12; k++) a.copy2.push_back(pos2[(*list2[bj].perm)[k]]);
  std::cout << "copy1:";
  for (size_t q : a.copy1) std::cout << " " << q;
  std::cout << "\ncopy2:";
  for (size_t q : a.copy2) std::cout << " " << q;
  std::cout << std::endl;

  // Stage 2: replicate the builder's greedy binary glue basis (halves first,
  // then code rows) and prefilter flip sets by the parity constraint: the
  // flip set must meet every octad basis row evenly.
  IntMat rows(14, 24);
  for (size_t q : a.copy1) rows(0, q) = 1;
  for (size_t q : a.copy2) rows(1, q) = 1;
  for (size_t i = 0; i < 12; i++)
    for (size_t j = 0; j < 24; j++) rows(2 + i, j) = golay.generator(i, j);
  std::vector<uint32_t> basisMasks;
  IntMat acc(0, 24);
  for (size_t r = 0; r < 14 && basisMasks.size() < 12; r++) {
    IntMat next(acc.rows + 1, 24);
    for (size_t i = 0; i < acc.rows; i++)
      for (size_t j = 0; j < 24; j++) next(i, j) = acc(i, j);
    for (size_t j = 0; j < 24; j++) next(acc.rows, j) = rows(r, j);
    if (rref_mod_p(next, 2).rank != next.rows) continue;
    acc = next;
    uint32_t m = 0;
    for (size_t j = 0; j < 24; j++)
      if (rows(r, j) != 0) m |= 1u << j;
    basisMasks.push_back(m);
  }

  auto try_flips = [&](const std::vector<size_t>& n1,
                       const std::vector<size_t>& n2) {
    uint32_t N = 0;
    for (size_t q : n1) N |= 1u << q;
    for (size_t q : n2) N |= 1u << q;
    for (size_t r = 2; r < basisMasks.size(); r++)
      if (std::popcount(basisMasks[r] & N) % 2) return false;
    a.neg1 = n1;
    a.neg2 = n2;
    BuiltLattice b = build_t48(a);
    auto ei = is_even_integral(b.lattice, b.scaleSquared);
    return ei.even && is_unimodular(b.lattice, b.scaleSquared);
  };
  bool found = false;
  // Preferred shape: three flips in copy1, one in copy2. The parity system
  // admits no such set for any arrangement on a complementary dodecad pair,
  // so this loop documents the attempt and the 3+3 fallback below succeeds.
  for (int i1 = 0; i1 < 12 && !found; i1++)
    for (int i2 = i1 + 1; i2 < 12 && !found; i2++)
      for (int i3 = i2 + 1; i3 < 12 && !found; i3++)
        for (int i4 = 0; i4 < 12 && !found; i4++)
          found = try_flips({a.copy1[i1], a.copy1[i2], a.copy1[i3]},
                            {a.copy2[i4]});
  if (found)
    std::cout << "flip shape 3+1" << std::endl;
  else {
    std::cout << "no 3+1 flip set is integral; falling back to 3+3"
              << std::endl;
    for (int i1 = 0; i1 < 12 && !found; i1++)
      for (int i2 = i1 + 1; i2 < 12 && !found; i2++)
        for (int i3 = i2 + 1; i3 < 12 && !found; i3++)
          for (int j1 = 0; j1 < 12 && !found; j1++)
            for (int j2 = j1 + 1; j2 < 12 && !found; j2++)
              for (int j3 = j2 + 1; j3 < 12 && !found; j3++)
                found = try_flips({a.copy1[i1], a.copy1[i2], a.copy1[i3]},
                                  {a.copy2[j1], a.copy2[j2], a.copy2[j3]});
  }
  if (!found) {
    std::cerr << "no flip set yields an even unimodular lattice" << std::endl;
    return 1;
  }

  nlohmann::json j;
  j["copy1_positions"] = a.copy1;
  j["copy2_positions"] = a.copy2;
  j["neg_positions_copy1"] = a.neg1;
  j["neg_positions_copy2"] = a.neg2;
  std::ofstream f(out);
  f << j.dump(2) << "\n";
  std::cout << "wrote " << out << std::endl;
  return 0;
}
