#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ternlat/exact_linalg.hpp"

using namespace ternlat;

static IntMat im(std::initializer_list<std::initializer_list<long>> rows) {
  IntMat m(rows.size(), rows.begin()->size());
  size_t i = 0;
  for (auto& r : rows) {
    size_t j = 0;
    for (long v : r) m(i, j++) = v;
    i++;
  }
  return m;
}

TEST_CASE("rationals parse, print, round") {
  CHECK(rat_from_string("3/2") == rat(3, 2));
  CHECK(rat_from_string("-7") == rat(-7));
  CHECK(rat_to_string(rat(-9, 6)) == "-3/2");
  CHECK(round_nearest(rat(3, 2)) == 2);    // ties to even
  CHECK(round_nearest(rat(5, 2)) == 2);
  CHECK(round_nearest(rat(-3, 2)) == -2);
  CHECK(round_nearest(rat(7, 3)) == 2);
  CHECK(round_nearest(rat(-7, 3)) == -2);
}

TEST_CASE("hnf: glue of 2Z^2") {
  IntMat h = hnf(im({{2, 0}, {0, 2}, {1, 1}}));
  CHECK(h == im({{1, 1}, {0, 2}}));
}

TEST_CASE("hnf: identity fixed point") {
  IntMat id = IntMat::identity(5);
  CHECK(hnf(id) == id);
}

TEST_CASE("hnf: small full-rank lattice") {
  IntMat h = hnf(im({{3, 3, 0}, {0, 3, 3}, {1, 1, 1}}));
  REQUIRE(h.rows == 3);
  Int det = det_exact(h);
  // |det| = index in Z^3; brute-force count of lattice points in the
  // fundamental box [0,3)^3: the span contains (1,1,1),(0,3,0),(0,0,3).
  CHECK(abs(det) == 9);
  CHECK(abs(det) == abs(det_exact(im({{3, 3, 0}, {0, 3, 3}, {1, 1, 1}}))));
}

static bool in_row_span(const IntMat& basis, const std::vector<Rat>& v) {
  RatMat b(basis.rows, basis.cols);
  for (size_t i = 0; i < basis.a.size(); i++) b.a[i] = basis.a[i];
  auto y = solve_left(b, v);
  if (!y) return false;
  for (auto& c : *y)
    if (c.get_den() != 1) return false;
  return true;
}

TEST_CASE("hnf preserves the row span (random matrices)") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> dist(-4, 4);
  for (int trial = 0; trial < 20; trial++) {
    IntMat m(4, 3);
    for (auto& v : m.a) v = dist(rng);
    IntMat h = hnf(m);
    // span(m) subset of span(h): every input row solves integrally against
    // the (independent) HNF rows.
    for (size_t i = 0; i < m.rows; i++) {
      std::vector<Rat> row(m.cols);
      for (size_t j = 0; j < m.cols; j++) row[j] = Rat(m(i, j));
      if (h.rows) CHECK(in_row_span(h, row));
    }
    // span(h) subset of span(m): adjoining h's rows to m changes nothing.
    IntMat stacked(m.rows + h.rows, m.cols);
    for (size_t i = 0; i < m.rows; i++)
      for (size_t j = 0; j < m.cols; j++) stacked(i, j) = m(i, j);
    for (size_t i = 0; i < h.rows; i++)
      for (size_t j = 0; j < m.cols; j++) stacked(m.rows + i, j) = h(i, j);
    CHECK(hnf(stacked) == h);
  }
}

TEST_CASE("det_exact basics") {
  CHECK(det_exact(IntMat::identity(5)) == 1);
  IntMat d(12, 12);
  for (size_t i = 0; i < 12; i++) d(i, i) = 36;
  Int want = 1;
  for (int i = 0; i < 12; i++) want *= 36;
  CHECK(det_exact(d) == want);
}

TEST_CASE("det multiplicativity on random rational 4x4") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> dist(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  for (int trial = 0; trial < 10; trial++) {
    RatMat a(4, 4), b(4, 4);
    for (auto& v : a.a) v = rat(dist(rng), den(rng));
    for (auto& v : b.a) v = rat(dist(rng), den(rng));
    CHECK(det_exact(matmul(a, b)) == det_exact(a) * det_exact(b));
  }
}

TEST_CASE("ldl closed forms and reconstruction") {
  RatMat id = RatMat::identity(3);
  LDL r = ldl(id);
  CHECK(r.l == id);
  for (auto& d : r.d) CHECK(d == 1);

  RatMat g(2, 2);
  g(0, 0) = 2;
  g(0, 1) = 1;
  g(1, 0) = 1;
  g(1, 1) = 2;
  r = ldl(g);
  CHECK(r.l(1, 0) == rat(1, 2));
  CHECK(r.d[0] == 2);
  CHECK(r.d[1] == rat(3, 2));

  // reconstruction on a random SPD matrix
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-3, 3);
  RatMat b(4, 4);
  for (auto& v : b.a) v = Rat(dist(rng));
  RatMat gg = matmul(b, b.transposed());
  for (size_t i = 0; i < 4; i++) gg(i, i) += 5;
  r = ldl(gg);
  RatMat ld = r.l;
  for (size_t i = 0; i < 4; i++)
    for (size_t j = 0; j < 4; j++) ld(i, j) *= r.d[j];
  CHECK(matmul(ld, r.l.transposed()) == gg);
}

TEST_CASE("ldl rejects indefinite input") {
  RatMat g(2, 2);
  g(0, 0) = 1;
  g(0, 1) = 2;
  g(1, 0) = 2;
  g(1, 1) = 1;
  CHECK_THROWS_AS(ldl(g), std::domain_error);
}

TEST_CASE("rref_mod_p ranks") {
  IntMat golay = im({{1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
                     {0, 1, 0, 0, 0, 0, -1, 0, 1, -1, -1, 1},
                     {0, 0, 1, 0, 0, 0, -1, 1, 0, 1, -1, -1},
                     {0, 0, 0, 1, 0, 0, -1, -1, 1, 0, 1, -1},
                     {0, 0, 0, 0, 1, 0, -1, -1, -1, 1, 0, 1},
                     {0, 0, 0, 0, 0, 1, -1, 1, -1, -1, 1, 0}});
  CHECK(rref_mod_p(golay, 3).rank == 6);
  IntMat c82 = im({{1, -1, 1, 1, -1, -1, 0, 0}, {0, 0, 1, -1, 1, -1, 1, -1}});
  CHECK(rref_mod_p(c82, 3).rank == 2);
  IntMat zero(3, 4);
  CHECK(rref_mod_p(zero, 2).rank == 0);
  // idempotence
  auto r1 = rref_mod_p(golay, 3);
  CHECK(rref_mod_p(r1.m, 3).m == r1.m);
}

TEST_CASE("rref rank agrees with minor expansion on small matrices") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> dist(0, 2);
  for (int trial = 0; trial < 30; trial++) {
    IntMat m(3, 3);
    for (auto& v : m.a) v = dist(rng);
    size_t rank = rref_mod_p(m, 3).rank;
    // independent: rank = 3 iff det != 0 mod 3; rank >= 1 iff nonzero, etc.
    Int det = det_exact(m);
    bool detNonzero = mpz_fdiv_ui(det.get_mpz_t(), 3) != 0;
    CHECK((rank == 3) == detNonzero);
    bool anyNonzero = false;
    for (auto& v : m.a) anyNonzero |= mpz_fdiv_ui(v.get_mpz_t(), 3) != 0;
    CHECK((rank >= 1) == anyNonzero);
  }
}

TEST_CASE("solve_mod_p") {
  IntMat id = IntMat::identity(3);
  auto x = solve_mod_p(id, {Int(5), Int(-1), Int(3)}, 3);
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 2);
  CHECK((*x)[2] == 0);
  // inconsistent: 0*x = 1
  IntMat z(1, 2);
  CHECK_FALSE(solve_mod_p(z, {Int(1)}, 3));
}

TEST_CASE("int_kernel: sum-zero sublattice") {
  IntMat a(1, 4);
  for (size_t j = 0; j < 4; j++) a(0, j) = 1;
  IntMat k = int_kernel(a);
  REQUIRE(k.rows == 3);
  for (size_t i = 0; i < k.rows; i++) {
    Int s = 0;
    for (size_t j = 0; j < 4; j++) s += k(i, j);
    CHECK(s == 0);
  }
}

TEST_CASE("int_kernel_mod: D_n parity condition") {
  // {y in Z^3 : y * (1,1,1)^T = 0 mod 2} has index 2 in Z^3.
  IntMat c(3, 1);
  for (size_t i = 0; i < 3; i++) c(i, 0) = 1;
  IntMat k = int_kernel_mod(c, 2);
  REQUIRE(k.rows == 3);
  CHECK(abs(det_exact(k)) == 2);
}

TEST_CASE("solve_left") {
  RatMat b(2, 3);
  b(0, 0) = 1;
  b(0, 1) = 2;
  b(0, 2) = 0;
  b(1, 0) = 0;
  b(1, 1) = 1;
  b(1, 2) = 1;
  auto y = solve_left(b, {rat(1), rat(3), rat(1)});
  REQUIRE(y);
  CHECK((*y)[0] == 1);
  CHECK((*y)[1] == 1);
  CHECK_FALSE(solve_left(b, {rat(0), rat(0), rat(1)}));
}
