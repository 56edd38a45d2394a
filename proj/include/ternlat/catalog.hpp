#pragma once
// Named inventory of the constructed lattices: builders, reference data
// (bases and Gram matrices transcribed 1:1 from the source tables, kept in
// data/), and the code inventory backing them.
#include "ternlat/construction.hpp"

namespace ternlat {

struct BuiltLattice {
  WeightedLattice lattice;
  Rat scaleSquared;  // canonical report scale for integrality/theta output
};

// Builds the named lattice. Aliases (lambda10, leech, lambda16, lambda22,
// lambda26) resolve to their canonical entries. Throws std::out_of_range for
// unknown names and std::runtime_error (what() mentions the file) when a
// required external code file is missing or fails validation.
BuiltLattice build_catalog(const std::string& name);

// Canonical entry names in catalog order (aliases not included).
std::vector<std::string> catalog_names();

// Resolve an alias to its canonical name (identity for canonical names).
std::string canonical_name(const std::string& name);

// data directory: $TERNLAT_DATA_DIR if set, else the compiled-in path.
std::string data_dir();

// Bases printed in the source tables ("k12_codes", "h10", "k14_2",
// "k14_2_sub13", "k14_2_sub12", "t16"), verbatim up to recorded typo fixes.
WeightedLattice reference_base(const std::string& name);

// Gram matrices printed in the source tables ("k12_codes", "t14", "h10").
RatMat reference_gram(const std::string& name);

// Code inventory: file-backed codes by stem ("c9_3_6", "golay12", ...) plus
// derived ones ("c10_4_6", "c11_5_6", "c13_6_6", "c16_8_3", "golay24_bin").
LinearCode catalog_code(const std::string& name);
std::vector<std::string> catalog_code_names();

// Coordinate arrangement parameterizing the 48-dimensional entry: where the
// two copies of the [12,6,6] code sit inside 24 coordinates (the two halves
// must form a complementary dodecad pair of the binary [24,12,8] code) and
// which glue coordinates carry a sign flip.
struct T48Arrangement {
  std::vector<size_t> copy1, copy2;  // 12 positions each, disjoint
  std::vector<size_t> neg1, neg2;    // sign-flip positions inside each copy
};

// Load the shipped arrangement from data/t48_arrangement.json.
T48Arrangement t48_arrangement();

// The [24,12] ternary code of an arrangement: two copies of the [12,6,6]
// code placed on the arrangement's position lists.
LinearCode t48_ternary_code(const T48Arrangement& a);

// Build the 48-dimensional lattice from an explicit arrangement. Throws
// std::runtime_error when the halves are not a complementary dodecad pair
// of the binary code; the support conditions gate only the minimum-norm
// claim and are checked at verification time, not here.
BuiltLattice build_t48(const T48Arrangement& a);

}  // namespace ternlat
