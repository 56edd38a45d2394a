#pragma once
// Linear codes over F2 / F3: construction, weight enumeration, duality.
#include <cstdint>
#include <string>
#include <vector>

#include "ternlat/exact_linalg.hpp"

namespace ternlat {

struct LinearCode {
  unsigned p = 3;       // field characteristic (2 or 3)
  size_t n = 0;         // length
  size_t k = 0;         // dimension
  IntMat generator;     // k x n, row-reduced, entries in {0..p-1}
};

struct WeightDistribution {
  std::vector<uint64_t> counts;  // counts[i] = A_i, i = 0..n
};

// Row-reduces mod p; k = rank. Throws if all rows vanish mod p.
LinearCode code_from_generator(unsigned p, const IntMat& rows);

// Exact counts by full codeword enumeration. Guard: p^k <= 2^24.
// Serial reference implementation; weight_distribution shards the codeword
// space across OpenMP workers and merges per-worker histograms.
WeightDistribution weight_distribution(const LinearCode& c);
WeightDistribution weight_distribution_serial(const LinearCode& c);

LinearCode dual_code(const LinearCode& c);

// Codewords vanishing on `positions` (0-based), restricted to the complement.
LinearCode shorten(const LinearCode& c, const std::vector<size_t>& positions);

// True iff the two codes have the same row span over F_p.
bool same_code(const LinearCode& a, const LinearCode& b);

// Minimum nonzero Hamming weight (full enumeration).
size_t min_weight(const LinearCode& c);

// All codewords (entries in {0..p-1}); guard p^k <= 2^24.
std::vector<std::vector<uint8_t>> all_codewords(const LinearCode& c);

// Support-condition report for the 48-dim construction: ternary length-24
// code vs binary length-24 code.
//  condition 1: no weight-6 ternary support inside a binary octad support
//  condition 2: no weight-9 ternary support containing an octad
//  condition 3: no weight-12 ternary support equal to a binary dodecad
//               support or to a union of two disjoint octad supports.
// Weight-12 ternary words supported entirely inside one half of
// `duumHalf` (if given, a 24-bit mask) are exempt from condition 3: the
// construction handles them with a dedicated sign choice.
struct SupportViolation {
  int condition;            // 1, 2 or 3
  uint32_t ternarySupport;  // bitmask over 24 coordinates
  uint32_t binarySupport;   // offending binary support (or union)
};
std::vector<SupportViolation> support_conditions_48(const LinearCode& ternary,
                                                    const LinearCode& binary,
                                                    uint32_t duumHalf = 0);

// Plain-text code files: header "p n k", then k rows of n integers.
LinearCode read_code_file(const std::string& path);
void write_code_file(const std::string& path, const LinearCode& c);

// Inventory of hard-coded codes printed in source.
LinearCode ternary_golay12();         // [12,6,6]3
LinearCode binary_golay24();          // [24,12,8]2, standard extended Golay
LinearCode tetracode();               // [4,2,3]3
}  // namespace ternlat
