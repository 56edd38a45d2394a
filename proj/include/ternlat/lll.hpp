#pragma once
// Exact rational LLL reduction operating on a Gram matrix.
#include "ternlat/exact_linalg.hpp"

namespace ternlat {

struct LllResult {
  RatMat gram;       // reduced Gram = u * g * u^T
  IntMat transform;  // unimodular u, rows express reduced basis in input basis
};

// delta = 99/100. Determinant preserved exactly; det(transform) = +-1.
LllResult lll_reduce(const RatMat& g);

}  // namespace ternlat
