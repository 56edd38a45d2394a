#pragma once
// Lattice constructions driven by ternary (and binary) codes: the
// three-rows lattice, the mod-3 code preimage construction, coset gluing,
// mod-2 Construction A, and the kappa-style family.
#include "ternlat/codes.hpp"
#include "ternlat/lattice.hpp"

namespace ternlat {

// E = {(x,y,z) in l^3 : x+y+z = 0}, ambient coordinates flattened as
// row1|row2|row3 (colweights replicated). rank(E) = 2 rank(l) and
// det(E) = 3^rank(l) * det(l)^2.
WeightedLattice triple(const WeightedLattice& l);

// True iff l intersect 3Z^n equals 3l (integral unit-weight lattices).
bool check_3z_condition(const WeightedLattice& l);

// Sublattice of triple(l) of vectors congruent to (c,c,c) mod 3 for some
// codeword c of the ternary code: generated by 3*triple(l) together with one
// lift (v,v,-2v), v = c mod 3 in l, per generator row. Preconditions
// (violations throw std::domain_error naming the offending generator):
//   - l integral with unit weights, c.p == 3
//   - check_3z_condition(l)
//   - every generator row of c lies in lattice_mod_p_code(l, 3).
// Postcondition (asserted): det = det(l)^2 * 3^(5r - 2k), r = rank(l).
WeightedLattice ternary_construction(const WeightedLattice& l,
                                     const LinearCode& c);

// Lattice generated by the base together with extra rows (same ambient
// coordinates and colweights). Rank may grow when leaders leave the span.
WeightedLattice glue(const WeightedLattice& base, const RatMat& leaders);

// True iff mult * leader lies in base for every leader row (the sanity
// check that glue leaders have bounded order modulo the base).
bool glue_multiple_in_base(const WeightedLattice& base, const RatMat& leaders,
                           long mult);

// {x in Z^n : x mod 2 in c} for a binary code; det = 2^(2(n-k)).
WeightedLattice construction_a_binary(const LinearCode& c);

// 2n-dimensional lattice in (Z^n)^3 cut out by
//   (1) x_1j + x_2j + x_3j = 0 for every column j,
//   (2) sum_j x_1j == 0 mod 3,
//   (3) (x_11 - x_21, ..., x_1n - x_2n) mod 3 lies in the ternary code c.
// det = 3^(3n - 2k + 2) for c = [n,k]_3.
WeightedLattice kappa_family(size_t n, const LinearCode& c);

// Closed-form kissing count for the kappa family built from a code with a6
// words of weight 6: binom(n,2)*18 + 243*a6.
uint64_t kissing_formula_11(size_t n, uint64_t a6);

// Same lattice embedded in a wider ambient space: extra zero columns with
// the given weights appended on the right (room for glue coordinates).
WeightedLattice with_extra_columns(const WeightedLattice& l,
                                   const std::vector<Rat>& extraWeights);

}  // namespace ternlat
