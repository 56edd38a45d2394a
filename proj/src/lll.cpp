#include "ternlat/lll.hpp"

namespace ternlat {

// Cohen, "A Course in Computational Algebraic Number Theory", Alg. 2.6.3:
// LLL on a Gram matrix, maintaining mu / B incrementally plus the transform.
LllResult lll_reduce(const RatMat& g0) {
  if (g0.rows != g0.cols) throw std::invalid_argument("lll: non-square");
  size_t n = g0.rows;
  RatMat g = g0;
  IntMat u = IntMat::identity(n);
  RatMat mu(n, n);
  std::vector<Rat> B(n);
  const Rat delta(99, 100);

  auto gso_init = [&](size_t upto) {
    // Recompute GSO data for rows 0..upto from the current g.
    for (size_t i = 0; i <= upto; i++) {
      std::vector<Rat> c(i);  // <b_i, b*_j>
      for (size_t j = 0; j < i; j++) {
        Rat s = g(i, j);
        for (size_t t = 0; t < j; t++) s -= mu(j, t) * c[t];
        c[j] = s;
        mu(i, j) = s / B[j];
      }
      Rat s = g(i, i);
      for (size_t t = 0; t < i; t++) s -= mu(i, t) * c[t];
      B[i] = s;
      if (B[i] <= 0) throw std::domain_error("lll: not positive-definite");
    }
  };

  auto row_op = [&](size_t k, size_t l, const Int& q) {
    // b_k <- b_k - q * b_l ; update g (rows and columns) and u.
    if (q == 0) return;
    for (size_t c = 0; c < n; c++) u(k, c) -= q * u(l, c);
    Rat qq(q);
    for (size_t c = 0; c < n; c++) {
      g(k, c) -= qq * g(l, c);
    }
    for (size_t r = 0; r < n; r++) {
      g(r, k) -= qq * g(r, l);
    }
  };

  auto swap_rows = [&](size_t k) {
    // Swap b_{k-1} and b_k in g and u.
    for (size_t c = 0; c < n; c++) std::swap(u(k - 1, c), u(k, c));
    for (size_t c = 0; c < n; c++) std::swap(g(k - 1, c), g(k, c));
    for (size_t r = 0; r < n; r++) std::swap(g(r, k - 1), g(r, k));
  };

  auto red = [&](size_t k, size_t l) {
    Rat m = mu(k, l);
    if (m > Rat(-1, 2) && m <= Rat(1, 2)) return;
    Int q = round_nearest(m);
    row_op(k, l, q);
    mu(k, l) -= q;
    for (size_t t = 0; t < l; t++) mu(k, t) -= Rat(q) * mu(l, t);
  };

  gso_init(n - 1);
  size_t k = 1;
  while (k < n) {
    red(k, k - 1);
    Rat lhs = B[k];
    Rat rhs = (delta - mu(k, k - 1) * mu(k, k - 1)) * B[k - 1];
    if (lhs < rhs) {
      swap_rows(k);
      // Incremental GSO swap update (Cohen 2.6.3 step 4 adapted):
      Rat muOld = mu(k, k - 1);
      Rat Bnew = B[k] + muOld * muOld * B[k - 1];
      mu(k, k - 1) = muOld * B[k - 1] / Bnew;
      Rat Bk = B[k - 1] * B[k] / Bnew;
      B[k - 1] = Bnew;
      B[k] = Bk;
      for (size_t j = 0; j < k - 1; j++) std::swap(mu(k - 1, j), mu(k, j));
      for (size_t i = k + 1; i < n; i++) {
        Rat t = mu(i, k);
        mu(i, k) = mu(i, k - 1) - muOld * t;
        mu(i, k - 1) = t + mu(k, k - 1) * mu(i, k);
      }
      if (k > 1) k--;
    } else {
      for (size_t l = k; l-- > 0;) red(k, l);
      k++;
    }
  }
  return {g, u};
}

}  // namespace ternlat
