#pragma once
// Exact arbitrary-precision linear algebra over Z, Q and F_p (p = 2, 3).
#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ternlat {

using Int = mpz_class;
using Rat = mpq_class;  // always canonical: reduced, denominator > 0

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(const std::string& s);  // "p/q" or "p"
std::string rat_to_string(const Rat& r);

// Round to nearest integer, ties toward even (deterministic).
Int round_nearest(const Rat& r);

template <class T>
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<T> a;  // row-major

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  T& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const T& operator()(size_t i, size_t j) const { return a[i * cols + j]; }
  bool operator==(const Mat&) const = default;

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; i++) m(i, i) = 1;
    return m;
  }
  Mat transposed() const {
    Mat t(cols, rows);
    for (size_t i = 0; i < rows; i++)
      for (size_t j = 0; j < cols; j++) t(j, i) = (*this)(i, j);
    return t;
  }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

RatMat to_rat(const IntMat& m);
IntMat to_int(const RatMat& m);  // throws if any entry non-integral

template <class T>
Mat<T> matmul(const Mat<T>& x, const Mat<T>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul shape");
  Mat<T> z(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; i++)
    for (size_t k = 0; k < x.cols; k++) {
      const T& v = x(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < y.cols; j++) z(i, j) += v * y(k, j);
    }
  return z;
}

// Row-style Hermite Normal Form: returns a matrix whose rows are the
// canonical basis of the integer row span; zero rows removed.
IntMat hnf(const IntMat& generators);

// HNF of rational rows with a common scale: rows are scaled by the global
// lcm of denominators, reduced, and scaled back.
RatMat hnf_rat(const RatMat& generators);

// Exact determinant (Bareiss fraction-free on a scaled integer matrix).
Rat det_exact(const RatMat& m);
Int det_exact(const IntMat& m);

// G = L D L^T with L lower-unitriangular. Throws if not positive-definite.
struct LDL {
  RatMat l;
  std::vector<Rat> d;
};
LDL ldl(const RatMat& gram);

// Reduced row echelon form over F_p; entries in {0..p-1}.
struct RrefResult {
  IntMat m;
  size_t rank;
};
RrefResult rref_mod_p(const IntMat& m, unsigned p);

// One solution of a*x = b (mod p), or nullopt if inconsistent.
std::optional<std::vector<Int>> solve_mod_p(const IntMat& a,
                                            const std::vector<Int>& b,
                                            unsigned p);

// Basis (rows) of {x in Z^n : a*x = 0}; n = a.cols.
IntMat int_kernel(const IntMat& a);

// Basis (rows) of {y in Z^t : y*c = 0 (mod m)}; t = c.rows.
IntMat int_kernel_mod(const IntMat& c, const Int& m);

// Solve y * b = v over Q (y row vector, b rows x cols). nullopt if v not in
// the row span.
std::optional<std::vector<Rat>> solve_left(const RatMat& b,
                                           const std::vector<Rat>& v);

}  // namespace ternlat
