#include "ternlat/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace ternlat {

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  if (r.get_den() <= 0) throw std::invalid_argument("bad rational: " + s);
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Int round_nearest(const Rat& r) {
  Int q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_num().get_mpz_t(),
              r.get_den().get_mpz_t());
  // r = q + rem/den with 0 <= rem < den
  Rat frac(rem, r.get_den());
  frac.canonicalize();
  Rat half(1, 2);
  if (frac > half || (frac == half && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return q;
}

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); i++) r.a[i] = m.a[i];
  return r;
}

IntMat to_int(const RatMat& m) {
  IntMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); i++) {
    if (m.a[i].get_den() != 1) throw std::invalid_argument("non-integer entry");
    r.a[i] = m.a[i].get_num();
  }
  return r;
}

IntMat hnf(const IntMat& generators) {
  IntMat m = generators;
  size_t r = 0;  // next pivot row
  for (size_t j = 0; j < m.cols && r < m.rows; j++) {
    // Eliminate column j below row r via gcd combinations.
    for (size_t i = r + 1; i < m.rows; i++) {
      if (m(i, j) == 0) continue;
      if (m(r, j) == 0) {
        for (size_t c = 0; c < m.cols; c++) std::swap(m(r, c), m(i, c));
        continue;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 m(r, j).get_mpz_t(), m(i, j).get_mpz_t());
      Int u = m(r, j) / g, v = m(i, j) / g;
      // (row_r, row_i) <- (s*row_r + t*row_i, -v*row_r + u*row_i)
      for (size_t c = 0; c < m.cols; c++) {
        Int x = m(r, c), y = m(i, c);
        m(r, c) = s * x + t * y;
        m(i, c) = u * y - v * x;
      }
    }
    if (m(r, j) == 0) continue;
    if (m(r, j) < 0)
      for (size_t c = 0; c < m.cols; c++) m(r, c) = -m(r, c);
    // Reduce entries above the pivot into [0, pivot).
    for (size_t i = 0; i < r; i++) {
      if (m(i, j) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, j).get_mpz_t(), m(r, j).get_mpz_t());
      if (q == 0) continue;
      for (size_t c = 0; c < m.cols; c++) m(i, c) -= q * m(r, c);
    }
    r++;
  }
  IntMat out(r, m.cols);
  for (size_t i = 0; i < r; i++)
    for (size_t c = 0; c < m.cols; c++) out(i, c) = m(i, c);
  return out;
}

RatMat hnf_rat(const RatMat& generators) {
  Int scale = 1;
  for (const Rat& x : generators.a)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den().get_mpz_t());
  IntMat m(generators.rows, generators.cols);
  for (size_t i = 0; i < m.a.size(); i++) {
    Rat v = generators.a[i] * scale;
    m.a[i] = v.get_num();
  }
  IntMat h = hnf(m);
  RatMat out(h.rows, h.cols);
  for (size_t i = 0; i < h.a.size(); i++) {
    out.a[i] = Rat(h.a[i], scale);
    out.a[i].canonicalize();
  }
  return out;
}

Int det_exact(const IntMat& in) {
  if (in.rows != in.cols) throw std::invalid_argument("det: non-square");
  size_t n = in.rows;
  if (n == 0) return 1;
  IntMat m = in;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; k++) {
    if (m(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m(p, k) == 0) p++;
      if (p == n) return 0;
      for (size_t c = k; c < n; c++) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; i++)
      for (size_t j = k + 1; j < n; j++) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Rat det_exact(const RatMat& in) {
  if (in.rows != in.cols) throw std::invalid_argument("det: non-square");
  size_t n = in.rows;
  if (n == 0) return 1;
  // Scale each row to integers; divide determinant by the product of scales.
  IntMat m(n, n);
  Rat denom = 1;
  for (size_t i = 0; i < n; i++) {
    Int s = 1;
    for (size_t j = 0; j < n; j++)
      mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), in(i, j).get_den().get_mpz_t());
    denom *= s;
    for (size_t j = 0; j < n; j++) {
      Rat v = in(i, j) * s;
      m(i, j) = v.get_num();
    }
  }
  Rat d(det_exact(m));
  d /= denom;
  return d;
}

LDL ldl(const RatMat& gram) {
  if (gram.rows != gram.cols) throw std::invalid_argument("ldl: non-square");
  size_t n = gram.rows;
  LDL out;
  out.l = RatMat::identity(n);
  out.d.resize(n);
  RatMat g = gram;
  for (size_t k = 0; k < n; k++) {
    out.d[k] = g(k, k);
    if (out.d[k] <= 0) throw std::domain_error("ldl: not positive-definite");
    for (size_t i = k + 1; i < n; i++) out.l(i, k) = g(i, k) / out.d[k];
    for (size_t i = k + 1; i < n; i++)
      for (size_t j = k + 1; j <= i; j++) {
        g(i, j) -= out.l(i, k) * out.l(j, k) * out.d[k];
        g(j, i) = g(i, j);
      }
  }
  return out;
}

static Int mod_p(const Int& x, unsigned p) {
  Int r;
  mpz_mod_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r;
}

static unsigned inv_mod_p(unsigned x, unsigned p) {
  // p is 2 or 3 in practice; generic small loop.
  for (unsigned y = 1; y < p; y++)
    if (x * y % p == 1) return y;
  throw std::domain_error("inv_mod_p: not invertible");
}

RrefResult rref_mod_p(const IntMat& in, unsigned p) {
  IntMat m(in.rows, in.cols);
  for (size_t i = 0; i < in.a.size(); i++) m.a[i] = mod_p(in.a[i], p);
  size_t r = 0;
  for (size_t j = 0; j < m.cols && r < m.rows; j++) {
    size_t piv = r;
    while (piv < m.rows && m(piv, j) == 0) piv++;
    if (piv == m.rows) continue;
    if (piv != r)
      for (size_t c = 0; c < m.cols; c++) std::swap(m(r, c), m(piv, c));
    unsigned inv = inv_mod_p((unsigned)m(r, j).get_ui(), p);
    for (size_t c = 0; c < m.cols; c++) m(r, c) = mod_p(m(r, c) * inv, p);
    for (size_t i = 0; i < m.rows; i++) {
      if (i == r || m(i, j) == 0) continue;
      Int f = m(i, j);
      for (size_t c = 0; c < m.cols; c++) m(i, c) = mod_p(m(i, c) - f * m(r, c), p);
    }
    r++;
  }
  return {m, r};
}

std::optional<std::vector<Int>> solve_mod_p(const IntMat& a,
                                            const std::vector<Int>& b,
                                            unsigned p) {
  if (b.size() != a.rows) throw std::invalid_argument("solve_mod_p shape");
  IntMat aug(a.rows, a.cols + 1);
  for (size_t i = 0; i < a.rows; i++) {
    for (size_t j = 0; j < a.cols; j++) aug(i, j) = a(i, j);
    aug(i, a.cols) = b[i];
  }
  auto [m, rank] = rref_mod_p(aug, p);
  std::vector<Int> x(a.cols, 0);
  for (size_t i = 0; i < rank; i++) {
    size_t j = 0;
    while (j <= a.cols && m(i, j) == 0) j++;
    if (j == a.cols) return std::nullopt;  // 0 = nonzero
    x[j] = m(i, a.cols);
  }
  return x;
}

IntMat int_kernel(const IntMat& a) {
  // Rows of [a^T | I] whose a^T-part reduces to zero carry kernel vectors.
  size_t n = a.cols, k = a.rows;
  IntMat m(n, k + n);
  for (size_t i = 0; i < n; i++) {
    for (size_t j = 0; j < k; j++) m(i, j) = a(j, i);
    m(i, k + i) = 1;
  }
  IntMat h = hnf(m);
  std::vector<size_t> zrows;
  for (size_t i = 0; i < h.rows; i++) {
    bool zero = true;
    for (size_t j = 0; j < k && zero; j++) zero = h(i, j) == 0;
    if (zero) zrows.push_back(i);
  }
  IntMat out(zrows.size(), n);
  for (size_t i = 0; i < zrows.size(); i++)
    for (size_t j = 0; j < n; j++) out(i, j) = h(zrows[i], k + j);
  return hnf(out);
}

IntMat int_kernel_mod(const IntMat& c, const Int& m) {
  // {y : y*c = 0 mod m} via kernel of [[c | I],[m*I | 0]].
  size_t t = c.rows, s = c.cols;
  IntMat big(t + s, s + t);
  for (size_t i = 0; i < t; i++) {
    for (size_t j = 0; j < s; j++) big(i, j) = c(i, j);
    big(i, s + i) = 1;
  }
  for (size_t i = 0; i < s; i++) big(t + i, i) = m;
  IntMat h = hnf(big);
  std::vector<size_t> zrows;
  for (size_t i = 0; i < h.rows; i++) {
    bool zero = true;
    for (size_t j = 0; j < s && zero; j++) zero = h(i, j) == 0;
    if (zero) zrows.push_back(i);
  }
  IntMat out(zrows.size(), t);
  for (size_t i = 0; i < zrows.size(); i++)
    for (size_t j = 0; j < t; j++) out(i, j) = h(zrows[i], s + j);
  return hnf(out);
}

std::optional<std::vector<Rat>> solve_left(const RatMat& b,
                                           const std::vector<Rat>& v) {
  if (v.size() != b.cols) throw std::invalid_argument("solve_left shape");
  // Solve b^T * y^T = v^T by Gaussian elimination on [b^T | v].
  size_t n = b.cols, r = b.rows;
  RatMat m(n, r + 1);
  for (size_t i = 0; i < n; i++) {
    for (size_t j = 0; j < r; j++) m(i, j) = b(j, i);
    m(i, r) = v[i];
  }
  size_t row = 0;
  std::vector<size_t> pivcol;
  for (size_t j = 0; j < r && row < n; j++) {
    size_t piv = row;
    while (piv < n && m(piv, j) == 0) piv++;
    if (piv == n) continue;
    if (piv != row)
      for (size_t c = 0; c <= r; c++) std::swap(m(row, c), m(piv, c));
    Rat inv = 1 / m(row, j);
    for (size_t c = 0; c <= r; c++) m(row, c) *= inv;
    for (size_t i = 0; i < n; i++) {
      if (i == row || m(i, j) == 0) continue;
      Rat f = m(i, j);
      for (size_t c = 0; c <= r; c++) m(i, c) -= f * m(row, c);
    }
    pivcol.push_back(j);
    row++;
  }
  for (size_t i = row; i < n; i++)
    if (m(i, r) != 0) return std::nullopt;
  std::vector<Rat> y(r, Rat(0));
  for (size_t i = 0; i < row; i++) y[pivcol[i]] = m(i, r);
  return y;
}

}  // namespace ternlat
