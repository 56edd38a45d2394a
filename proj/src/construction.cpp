#include "ternlat/construction.hpp"

#include <cassert>
#include <stdexcept>

namespace ternlat {

WeightedLattice triple(const WeightedLattice& l) {
  size_t r = l.rank(), n = l.ambient();
  WeightedLattice e;
  e.basis = RatMat(2 * r, 3 * n);
  for (size_t i = 0; i < r; i++)
    for (size_t j = 0; j < n; j++) {
      const Rat& b = l.basis(i, j);
      if (b == 0) continue;
      // (b_i, 0, -b_i) and (0, b_i, -b_i) span {(x, y, -x-y) : x, y in l}
      e.basis(i, j) = b;
      e.basis(i, 2 * n + j) = -b;
      e.basis(r + i, n + j) = b;
      e.basis(r + i, 2 * n + j) = -b;
    }
  e.colweights.reserve(3 * n);
  for (int rep = 0; rep < 3; rep++)
    e.colweights.insert(e.colweights.end(), l.colweights.begin(),
                        l.colweights.end());
  e.name = l.name.empty() ? "" : l.name + "_triple";
  return e;
}

static void require_integral_unit(const WeightedLattice& l, const char* who) {
  for (const Rat& w : l.colweights)
    if (w != 1)
      throw std::invalid_argument(std::string(who) + ": unit weights required");
  for (const Rat& b : l.basis.a)
    if (b.get_den() != 1)
      throw std::invalid_argument(std::string(who) + ": integral basis required");
}

bool check_3z_condition(const WeightedLattice& l) {
  require_integral_unit(l, "check_3z_condition");
  WeightedLattice m = intersect_scaled_zn(l, 3);
  // 3l is always contained in l intersect 3Z^n; equality iff dets agree.
  Rat scaled = det_gram(l);
  for (size_t i = 0; i < 2 * l.rank(); i++) scaled *= 3;
  return det_gram(m) == scaled;
}

WeightedLattice ternary_construction(const WeightedLattice& l,
                                     const LinearCode& c) {
  require_integral_unit(l, "ternary_construction");
  if (c.p != 3)
    throw std::invalid_argument("ternary_construction: code must be ternary");
  if (c.n != l.ambient())
    throw std::invalid_argument("ternary_construction: code length mismatch");
  if (!check_3z_condition(l))
    throw std::domain_error(
        "ternary_construction: lattice violates 3Z^n cap L = 3L");
  size_t r = l.rank(), n = l.ambient();
  IntMat bt = to_int(l.basis).transposed();
  WeightedLattice e = triple(l);
  RatMat rows(2 * r + c.k, 3 * n);
  for (size_t i = 0; i < 2 * r; i++)
    for (size_t j = 0; j < 3 * n; j++) rows(i, j) = e.basis(i, j) * 3;
  for (size_t g = 0; g < c.k; g++) {
    std::vector<Int> cw(n);
    for (size_t j = 0; j < n; j++) cw[j] = c.generator(g, j);
    auto y = solve_mod_p(bt, cw, 3);
    if (!y)
      throw std::domain_error(
          "ternary_construction: generator row " + std::to_string(g) +
          " is not in the mod-3 code of the lattice");
    // v = y * basis is a lattice vector congruent to the codeword mod 3;
    // the glue row (v, v, -2v) represents the diagonal class (c,c,c).
    for (size_t j = 0; j < n; j++) {
      Rat v = 0;
      for (size_t i = 0; i < r; i++)
        if ((*y)[i] != 0) v += Rat((*y)[i]) * l.basis(i, j);
      rows(2 * r + g, j) = v;
      rows(2 * r + g, n + j) = v;
      rows(2 * r + g, 2 * n + j) = -2 * v;
    }
  }
  WeightedLattice out;
  out.basis = hnf_rat(rows);
  out.colweights = e.colweights;
  if (out.basis.rows != 2 * r)
    throw std::logic_error("ternary_construction: unexpected rank");
  // Volume identity: det = det(l)^2 * 3^(5r - 2k).
  Rat expect = det_gram(l) * det_gram(l);
  for (size_t i = 0; i < 5 * r; i++) expect *= 3;
  for (size_t i = 0; i < 2 * c.k; i++) expect /= 3;
  if (det_gram(out) != expect)
    throw std::logic_error("ternary_construction: volume identity failed");
  return out;
}

WeightedLattice glue(const WeightedLattice& base, const RatMat& leaders) {
  if (leaders.cols != base.ambient())
    throw std::invalid_argument("glue: leader width mismatch");
  RatMat rows(base.rank() + leaders.rows, base.ambient());
  for (size_t i = 0; i < base.rank(); i++)
    for (size_t j = 0; j < base.ambient(); j++) rows(i, j) = base.basis(i, j);
  for (size_t i = 0; i < leaders.rows; i++)
    for (size_t j = 0; j < base.ambient(); j++)
      rows(base.rank() + i, j) = leaders(i, j);
  WeightedLattice out;
  out.basis = hnf_rat(rows);
  out.colweights = base.colweights;
  return out;
}

bool glue_multiple_in_base(const WeightedLattice& base, const RatMat& leaders,
                           long mult) {
  for (size_t i = 0; i < leaders.rows; i++) {
    std::vector<Rat> v(leaders.cols);
    for (size_t j = 0; j < leaders.cols; j++) v[j] = leaders(i, j) * mult;
    if (!contains(base, v)) return false;
  }
  return true;
}

WeightedLattice construction_a_binary(const LinearCode& c) {
  if (c.p != 2)
    throw std::invalid_argument("construction_a_binary: code must be binary");
  IntMat rows(c.k + c.n, c.n);
  for (size_t i = 0; i < c.k; i++)
    for (size_t j = 0; j < c.n; j++) rows(i, j) = c.generator(i, j);
  for (size_t j = 0; j < c.n; j++) rows(c.k + j, j) = 2;
  return lattice_from_int_rows(hnf(rows));
}

WeightedLattice kappa_family(size_t n, const LinearCode& c) {
  if (c.p != 3 || c.n != n)
    throw std::invalid_argument("kappa_family: need a ternary code of length n");
  IntMat eq(n, 3 * n);
  for (size_t j = 0; j < n; j++)
    for (size_t b = 0; b < 3; b++) eq(j, b * n + j) = 1;
  std::vector<std::pair<IntMat, Int>> congruences;
  IntMat rowSum(1, 3 * n);
  for (size_t j = 0; j < n; j++) rowSum(0, j) = 1;
  congruences.push_back({rowSum, Int(3)});
  LinearCode d = dual_code(c);
  for (size_t i = 0; i < d.k; i++) {
    IntMat h(1, 3 * n);
    for (size_t j = 0; j < n; j++) {
      h(0, j) = d.generator(i, j);
      h(0, n + j) = -d.generator(i, j);
    }
    congruences.push_back({h, Int(3)});
  }
  return solution_lattice(3 * n, eq, congruences);
}

uint64_t kissing_formula_11(size_t n, uint64_t a6) {
  return (uint64_t)n * (n - 1) / 2 * 18 + 243 * a6;
}

WeightedLattice with_extra_columns(const WeightedLattice& l,
                                   const std::vector<Rat>& extraWeights) {
  WeightedLattice out;
  out.name = l.name;
  out.basis = RatMat(l.rank(), l.ambient() + extraWeights.size());
  for (size_t i = 0; i < l.rank(); i++)
    for (size_t j = 0; j < l.ambient(); j++) out.basis(i, j) = l.basis(i, j);
  out.colweights = l.colweights;
  out.colweights.insert(out.colweights.end(), extraWeights.begin(),
                        extraWeights.end());
  return out;
}

}  // namespace ternlat
