#include "ternlat/lattice.hpp"

#include <json.hpp>

namespace ternlat {

WeightedLattice lattice_from_int_rows(const IntMat& rows,
                                      const std::string& name) {
  WeightedLattice l;
  l.basis = to_rat(rows);
  l.colweights.assign(rows.cols, Rat(1));
  l.name = name;
  return l;
}

WeightedLattice rebase_hnf(const WeightedLattice& l) {
  WeightedLattice out = l;
  out.basis = hnf_rat(l.basis);
  if (out.basis.rows != l.basis.rows)
    throw std::domain_error("rebase_hnf: dependent basis rows");
  return out;
}

RatMat gram(const WeightedLattice& l) {
  size_t r = l.rank(), n = l.ambient();
  RatMat g(r, r);
  for (size_t i = 0; i < r; i++)
    for (size_t j = i; j < r; j++) {
      Rat s = 0;
      for (size_t k = 0; k < n; k++) {
        if (l.basis(i, k) == 0 || l.basis(j, k) == 0) continue;
        s += l.basis(i, k) * l.basis(j, k) * l.colweights[k];
      }
      g(i, j) = s;
      g(j, i) = s;
    }
  return g;
}

Rat det_gram(const WeightedLattice& l) { return det_exact(gram(l)); }

EvenIntegral is_even_integral(const WeightedLattice& l, const Rat& s) {
  if (s <= 0) throw std::invalid_argument("scaleSquared must be positive");
  RatMat g = gram(l);
  EvenIntegral r{true, true};
  for (size_t i = 0; i < g.rows; i++)
    for (size_t j = 0; j < g.cols; j++) {
      Rat v = g(i, j) * s;
      if (v.get_den() != 1) {
        r.integral = false;
        r.even = false;
        return r;
      }
      if (i == j && mpz_odd_p(v.get_num().get_mpz_t())) r.even = false;
    }
  return r;
}

bool is_unimodular(const WeightedLattice& l, const Rat& s) {
  if (!is_even_integral(l, s).integral) return false;
  Rat d = det_gram(l);
  size_t r = l.rank();
  Rat scale = 1;
  for (size_t i = 0; i < r; i++) scale *= s;
  return d * scale == 1;
}

Rat center_density_squared(const WeightedLattice& l, const Rat& minNorm) {
  if (minNorm <= 0) throw std::invalid_argument("minNorm must be positive");
  Rat rho2 = minNorm / 4;
  Rat num = 1;
  for (size_t i = 0; i < l.rank(); i++) num *= rho2;
  return num / det_gram(l);
}

WeightedLattice solution_lattice(
    size_t nAmbient, const IntMat& equations,
    const std::vector<std::pair<IntMat, Int>>& congruences) {
  IntMat basis;
  if (equations.rows == 0) {
    basis = IntMat::identity(nAmbient);
  } else {
    if (equations.cols != nAmbient)
      throw std::invalid_argument("solution_lattice: equation width");
    basis = int_kernel(equations);
  }
  for (const auto& [b, m] : congruences) {
    if (b.cols != nAmbient)
      throw std::invalid_argument("solution_lattice: congruence width");
    // y*basis must satisfy b*(y*basis)^T = 0 mod m, i.e. y*(basis*b^T) = 0.
    IntMat c = matmul(basis, b.transposed());
    IntMat y = int_kernel_mod(c, m);
    basis = hnf(matmul(y, basis));
  }
  if (basis.rows == 0) throw std::domain_error("solution_lattice: zero lattice");
  return lattice_from_int_rows(basis);
}

LinearCode lattice_mod_p_code(const WeightedLattice& l, unsigned p) {
  for (const Rat& w : l.colweights)
    if (w != 1) throw std::invalid_argument("lattice_mod_p_code: unit weights");
  IntMat rows = to_int(l.basis);
  if (rref_mod_p(rows, p).rank == 0) {
    LinearCode z;  // e.g. 3Z^n mod 3: the zero code
    z.p = p;
    z.n = l.ambient();
    z.k = 0;
    z.generator = IntMat(1, l.ambient());
    return z;
  }
  return code_from_generator(p, rows);
}

// Sublattice of l given by rational linear conditions on ambient coords:
// rows of cond dotted (with weights) against vectors must vanish.
static WeightedLattice coefficient_constraint(const WeightedLattice& l,
                                              const RatMat& condOnCoeffs) {
  // condOnCoeffs: each row c gives the condition coeffs * c^T = 0 over Z.
  Int scale = 1;
  for (const Rat& x : condOnCoeffs.a)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den().get_mpz_t());
  IntMat eq(condOnCoeffs.rows, condOnCoeffs.cols);
  for (size_t i = 0; i < eq.a.size(); i++) {
    Rat v = condOnCoeffs.a[i] * scale;
    eq.a[i] = v.get_num();
  }
  IntMat y = int_kernel(eq);
  WeightedLattice out = l;
  RatMat newBasis(y.rows, l.ambient());
  for (size_t i = 0; i < y.rows; i++)
    for (size_t j = 0; j < l.ambient(); j++) {
      Rat s = 0;
      for (size_t k = 0; k < l.rank(); k++)
        if (y(i, k) != 0) s += Rat(y(i, k)) * l.basis(k, j);
      newBasis(i, j) = s;
    }
  out.basis = hnf_rat(newBasis);
  return out;
}

WeightedLattice equate_coordinates(const WeightedLattice& l, size_t i,
                                   size_t j) {
  if (i == j || i >= l.ambient() || j >= l.ambient())
    throw std::invalid_argument("equate_coordinates: bad columns");
  RatMat cond(1, l.rank());
  for (size_t k = 0; k < l.rank(); k++)
    cond(0, k) = l.basis(k, i) - l.basis(k, j);
  WeightedLattice out = coefficient_constraint(l, cond);
  out.name = l.name.empty() ? "" : l.name + "_equated";
  return out;
}

WeightedLattice orthogonal_section(const WeightedLattice& l,
                                   const std::vector<Rat>& v) {
  if (v.size() != l.ambient())
    throw std::invalid_argument("orthogonal_section: dimension");
  RatMat cond(1, l.rank());
  for (size_t k = 0; k < l.rank(); k++) {
    Rat s = 0;
    for (size_t j = 0; j < l.ambient(); j++)
      s += l.basis(k, j) * v[j] * l.colweights[j];
    cond(0, k) = s;
  }
  WeightedLattice out = coefficient_constraint(l, cond);
  out.name = l.name.empty() ? "" : l.name + "_orth";
  return out;
}

bool contains(const WeightedLattice& l, const std::vector<Rat>& v) {
  auto y = solve_left(l.basis, v);
  if (!y) return false;
  for (const Rat& c : *y)
    if (c.get_den() != 1) return false;
  return true;
}

WeightedLattice intersect_scaled_zn(const WeightedLattice& l, const Int& s) {
  IntMat basis = to_int(l.basis);
  // y*basis = 0 mod s componentwise: y * basis mod s.
  IntMat y = int_kernel_mod(basis, s);
  WeightedLattice out = l;
  out.basis = to_rat(hnf(matmul(y, basis)));
  return out;
}

WeightedLattice congruence_sublattice(const WeightedLattice& l,
                                      const IntMat& extra, const Int& m) {
  IntMat basis = to_int(l.basis);
  IntMat c = matmul(basis, extra.transposed());
  IntMat y = int_kernel_mod(c, m);
  WeightedLattice out = l;
  out.basis = to_rat(hnf(matmul(y, basis)));
  return out;
}

Rat sublattice_index(const WeightedLattice& big, const WeightedLattice& small) {
  Rat db = det_gram(big), ds = det_gram(small);
  Rat ratio = ds / db;
  // index^2 = det(small)/det(big); take the exact square root.
  Int num = ratio.get_num(), den = ratio.get_den();
  Int rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2) ||
      !mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2))
    throw std::domain_error("sublattice_index: non-square volume ratio");
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

std::string lattice_to_json(const WeightedLattice& l,
                            const Rat& scaleSquaredForReport) {
  nlohmann::json j;
  j["name"] = l.name;
  j["ambient_dim"] = l.ambient();
  j["rank"] = l.rank();
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < l.rank(); i++) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t k = 0; k < l.ambient(); k++)
      row.push_back(rat_to_string(l.basis(i, k)));
    rows.push_back(row);
  }
  j["basis"] = rows;
  nlohmann::json w = nlohmann::json::array();
  for (const Rat& x : l.colweights) w.push_back(rat_to_string(x));
  j["colweights"] = w;
  j["scale_squared_for_report"] = rat_to_string(scaleSquaredForReport);
  return j.dump(2);
}

std::pair<WeightedLattice, Rat> lattice_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  WeightedLattice l;
  l.name = j.at("name").get<std::string>();
  size_t rank = j.at("rank").get<size_t>();
  size_t amb = j.at("ambient_dim").get<size_t>();
  l.basis = RatMat(rank, amb);
  const auto& rows = j.at("basis");
  if (rows.size() != rank) throw std::runtime_error("lattice json: rank");
  for (size_t i = 0; i < rank; i++)
    for (size_t k = 0; k < amb; k++)
      l.basis(i, k) = rat_from_string(rows[i][k].get<std::string>());
  for (const auto& x : j.at("colweights"))
    l.colweights.push_back(rat_from_string(x.get<std::string>()));
  if (l.colweights.size() != amb) throw std::runtime_error("lattice json: weights");
  Rat s = rat_from_string(j.at("scale_squared_for_report").get<std::string>());
  return {l, s};
}

}  // namespace ternlat
