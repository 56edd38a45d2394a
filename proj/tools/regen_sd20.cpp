// Regenerates data/codes/sd20_10_6.txt: a self-dual [20,10,6] ternary code.
//
// Exhaustive search over four-circulant generator matrices [I | A] with
// A = [[X, Y], [-Y^T, X^T]] for 5x5 circulants X, Y. Circulants commute, so
// A A^T = diag(X X^T + Y Y^T, X^T X + Y^T Y) and G G^T = 0 mod 3 reduces to
// X X^T + Y Y^T = -I mod 3. The first (lexicographically smallest) pair whose
// code also has minimum weight 6 is written out.
//
// Usage: regen_sd20 [output-path]   (default: <data_dir>/codes/sd20_10_6.txt)
#include <array>
#include <iostream>

#include "ternlat/catalog.hpp"

using namespace ternlat;

using Circ = std::array<int, 5>;

static int corr(const Circ& a, const Circ& b, int shift) {
  int s = 0;
  for (int k = 0; k < 5; k++) s += a[k] * b[(k + shift) % 5];
  return ((s % 3) + 3) % 3;
}

// X X^T + Y Y^T = -I: autocorrelation 2 at shift 0, 0 at shifts 1..4.
static bool pair_ok(const Circ& x, const Circ& y) {
  for (int s = 0; s < 5; s++) {
    int want = s == 0 ? 2 : 0;
    if ((corr(x, x, s) + corr(y, y, s)) % 3 != want) return false;
  }
  return true;
}

static LinearCode four_circulant(const Circ& x, const Circ& y) {
  IntMat g(10, 20);
  for (size_t i = 0; i < 10; i++) g(i, i) = 1;
  for (size_t i = 0; i < 5; i++)
    for (size_t j = 0; j < 5; j++) {
      int xv = x[(j + 5 - i) % 5], yv = y[(j + 5 - i) % 5];
      g(i, 10 + j) = xv == 2 ? -1 : xv;          // X
      g(i, 15 + j) = yv == 2 ? -1 : yv;          // Y
      int nyt = (3 - y[(i + 5 - j) % 5]) % 3;    // -Y^T
      g(5 + i, 10 + j) = nyt == 2 ? -1 : nyt;
      int xt = x[(i + 5 - j) % 5];               // X^T
      g(5 + i, 15 + j) = xt == 2 ? -1 : xt;
    }
  return code_from_generator(3, g);
}

int main(int argc, char** argv) {
  std::string out =
      argc > 1 ? argv[1] : data_dir() + "/codes/sd20_10_6.txt";
  static const int pw[5] = {1, 3, 9, 27, 81};
  Circ x{}, y{};
  for (int xi = 0; xi < 243; xi++) {
    for (int k = 0; k < 5; k++) x[k] = xi / pw[k] % 3;
    for (int yi = 0; yi < 243; yi++) {
      for (int k = 0; k < 5; k++) y[k] = yi / pw[k] % 3;
      if (!pair_ok(x, y)) continue;
      LinearCode c = four_circulant(x, y);
      if (c.k != 10 || !same_code(c, dual_code(c))) continue;
      if (min_weight(c) != 6) continue;
      write_code_file(out, c);
      auto wd = weight_distribution(c);
      std::cout << "wrote " << out << "  x=(";
      for (int k = 0; k < 5; k++) std::cout << x[k] << (k < 4 ? "," : ")");
      std::cout << " y=(";
      for (int k = 0; k < 5; k++) std::cout << y[k] << (k < 4 ? "," : ")");
      std::cout << "  weights:";
      for (size_t w = 0; w <= 20; w++)
        if (wd.counts[w]) std::cout << " A" << w << "=" << wd.counts[w];
      std::cout << std::endl;
      return 0;
    }
  }
  std::cerr << "no four-circulant self-dual [20,10,6]_3 code found"
            << std::endl;
  return 1;
}
