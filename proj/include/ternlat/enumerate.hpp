#pragma once
// Short-vector engine: Fincke-Pohst / Schnorr-Euchner enumeration with
// exact recheck, minimum norm, kissing number, theta prefixes.
#include <functional>

#include "ternlat/exact_linalg.hpp"
#include "ternlat/lll.hpp"

namespace ternlat {

struct ShortVector {
  std::vector<Int> coeffs;  // in the basis of the input Gram
  Rat norm;
};

struct ShortVectorReport {
  Rat minNorm;
  uint64_t kissingNumber = 0;  // both signs counted
  std::optional<Rat> secondLayerNorm;
  uint64_t secondLayerCount = 0;
  std::vector<std::pair<Rat, uint64_t>> thetaPrefix;  // (norm, both-sign count)
  Rat enumeratedBound;
};

// Every nonzero lattice vector with exact norm <= bound, once per +- pair
// (canonical sign: first nonzero coefficient positive), sorted by norm then
// lexicographic coefficients. Floating LDL with slack 1+1e-6 plus exact
// recheck; falls back to exact-LDL enumeration when the float decomposition
// is badly conditioned (pivot ratio > 1e12). OpenMP kernel shards the
// top-level coordinate; the serial reference is kept for testing.
std::vector<ShortVector> short_vectors(const RatMat& g, const Rat& bound);
std::vector<ShortVector> short_vectors_serial(const RatMat& g, const Rat& bound);

// Streaming variant: per-norm both-sign counts only (no vector storage).
// Returns counts for 0 < norm <= bound.
std::vector<std::pair<Rat, uint64_t>> norm_histogram(const RatMat& g,
                                                     const Rat& bound);

// Exact minimum nonzero norm via bound-shrinking enumeration seeded with the
// smallest diagonal of the LLL-reduced Gram.
Rat min_norm(const RatMat& g);

// Counts per scaled norm for 0 < scaled norm <= maxNorm.
std::vector<std::pair<Rat, uint64_t>> theta_prefix(const RatMat& g,
                                                   const Rat& maxNorm,
                                                   const Rat& reportScaleSquared);

ShortVectorReport short_vector_report(const RatMat& g, const Rat& bound);

// (mu', k2): smallest norm above the minimum and its both-sign count.
std::pair<Rat, uint64_t> second_layer(const RatMat& g);

// min over v in the lattice of ||offset - v||^2 where offset is given by
// rational coefficients in the basis of g.
Rat coset_min_norm(const RatMat& g, const std::vector<Rat>& offsetCoeffs,
                   const Rat& bound);

// Brute-force oracle over coefficient boxes [-box, box]^rank (tests only).
std::vector<ShortVector> brute_force_short_vectors(const RatMat& g,
                                                   const Rat& bound, long box);

}  // namespace ternlat
