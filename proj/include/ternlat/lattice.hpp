#pragma once
// Weighted-coordinate exact lattices: Gram, volume, integrality/evenness,
// center density, sublattices, and the mod-p code of a lattice.
#include <optional>
#include <string>
#include <vector>

#include "ternlat/codes.hpp"
#include "ternlat/exact_linalg.hpp"

namespace ternlat {

// Rows of `basis` span the lattice; inner product is weighted per column:
// <u,v> = sum_j u_j v_j w_j. A paper column with entries a*sqrt(d) is stored
// as rational entries a with colweight d, keeping every Gram entry rational.
struct WeightedLattice {
  RatMat basis;                 // rank x ambient
  std::vector<Rat> colweights;  // ambient, all > 0
  std::string name;

  size_t rank() const { return basis.rows; }
  size_t ambient() const { return basis.cols; }
};

WeightedLattice lattice_from_int_rows(const IntMat& rows,
                                      const std::string& name = "");

// Canonical (HNF) rebase; same lattice, deterministic basis.
WeightedLattice rebase_hnf(const WeightedLattice& l);

RatMat gram(const WeightedLattice& l);
Rat det_gram(const WeightedLattice& l);

// Gram scaled by scaleSquared before testing.
struct EvenIntegral {
  bool integral;
  bool even;
};
EvenIntegral is_even_integral(const WeightedLattice& l, const Rat& scaleSquared);
bool is_unimodular(const WeightedLattice& l, const Rat& scaleSquared);

// (minNorm/4)^rank / detGram, exact.
Rat center_density_squared(const WeightedLattice& l, const Rat& minNorm);

// {x in Z^n : equations*x = 0, congruences_i.first * x = 0 mod modulus_i},
// unit weights, HNF basis.
WeightedLattice solution_lattice(
    size_t nAmbient, const IntMat& equations,
    const std::vector<std::pair<IntMat, Int>>& congruences = {});

// Code generated by basis rows mod p (basis must be integral, unit weights).
LinearCode lattice_mod_p_code(const WeightedLattice& l, unsigned p);

// Sublattice {v in l : v_i = v_j}.
WeightedLattice equate_coordinates(const WeightedLattice& l, size_t i, size_t j);

// Sublattice {u in l : <u, v> = 0} (weighted inner product).
WeightedLattice orthogonal_section(const WeightedLattice& l,
                                   const std::vector<Rat>& v);

// True iff v is an integer combination of basis rows.
bool contains(const WeightedLattice& l, const std::vector<Rat>& v);

// Intersection of the lattice with s * Z^ambient (integral lattices only).
WeightedLattice intersect_scaled_zn(const WeightedLattice& l, const Int& s);

// Sublattice {x in l : extra * x = 0 mod m} (integral lattices only).
WeightedLattice congruence_sublattice(const WeightedLattice& l,
                                      const IntMat& extra, const Int& m);

// Index [big : small] for small <= big of equal rank (ratio of volumes).
Rat sublattice_index(const WeightedLattice& big, const WeightedLattice& small);

// JSON interchange (nlohmann shape described in the README); bit-exact
// round-trip. scaleSquaredForReport is carried alongside the lattice.
std::string lattice_to_json(const WeightedLattice& l,
                            const Rat& scaleSquaredForReport);
std::pair<WeightedLattice, Rat> lattice_from_json(const std::string& text);

}  // namespace ternlat
