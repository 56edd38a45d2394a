#include "ternlat/codes.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ternlat {

static constexpr uint64_t kEnumGuard = uint64_t(1) << 24;

static uint64_t pow_u64(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

LinearCode code_from_generator(unsigned p, const IntMat& rows) {
  if (p != 2 && p != 3) throw std::invalid_argument("p must be 2 or 3");
  auto [m, rank] = rref_mod_p(rows, p);
  if (rank == 0) throw std::invalid_argument("zero code");
  LinearCode c;
  c.p = p;
  c.n = rows.cols;
  c.k = rank;
  c.generator = IntMat(rank, rows.cols);
  for (size_t i = 0; i < rank; i++)
    for (size_t j = 0; j < rows.cols; j++) c.generator(i, j) = m(i, j);
  return c;
}

// Small dense generator for fast enumeration.
static std::vector<std::vector<uint8_t>> gen_rows(const LinearCode& c) {
  std::vector<std::vector<uint8_t>> g(c.k, std::vector<uint8_t>(c.n));
  for (size_t i = 0; i < c.k; i++)
    for (size_t j = 0; j < c.n; j++)
      g[i][j] = (uint8_t)c.generator(i, j).get_ui();
  return g;
}

template <class Visit>
static void enumerate_words(const LinearCode& c, Visit&& visit) {
  uint64_t total = pow_u64(c.p, c.k);
  if (total > kEnumGuard) throw std::length_error("codeword enumeration guard");
  auto g = gen_rows(c);
  std::vector<uint8_t> word(c.n, 0);
  // DFS over coefficients, updating the partial sum in place.
  auto rec = [&](auto&& self, size_t depth) -> void {
    if (depth == c.k) {
      visit(word);
      return;
    }
    for (unsigned coef = 0; coef < c.p; coef++) {
      self(self, depth + 1);
      for (size_t j = 0; j < c.n; j++) {
        unsigned v = word[j] + g[depth][j];
        word[j] = (uint8_t)(v >= c.p ? v - c.p : v);
      }
    }
    // Undo the p additions (p*g = 0 mod p), restoring word exactly.
  };
  rec(rec, 0);
}

WeightDistribution weight_distribution_serial(const LinearCode& c) {
  WeightDistribution wd;
  wd.counts.assign(c.n + 1, 0);
  enumerate_words(c, [&](const std::vector<uint8_t>& w) {
    size_t wt = 0;
    for (uint8_t x : w) wt += x != 0;
    wd.counts[wt]++;
  });
  return wd;
}

WeightDistribution weight_distribution(const LinearCode& c) {
  uint64_t total = pow_u64(c.p, c.k);
  if (total > kEnumGuard) throw std::length_error("codeword enumeration guard");
  // Shard on the first coefficient's value; each worker enumerates the
  // shortened tail code offset by its share of the leading row.
  auto g = gen_rows(c);
  std::vector<WeightDistribution> parts(c.p);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (unsigned shard = 0; shard < c.p; shard++) {
    std::vector<uint8_t> word(c.n, 0);
    for (size_t j = 0; j < c.n; j++)
      word[j] = (uint8_t)((shard * g[0][j]) % c.p);
    WeightDistribution local;
    local.counts.assign(c.n + 1, 0);
    auto rec = [&](auto&& self, size_t depth) -> void {
      if (depth == c.k) {
        size_t wt = 0;
        for (uint8_t x : word) wt += x != 0;
        local.counts[wt]++;
        return;
      }
      for (unsigned coef = 0; coef < c.p; coef++) {
        self(self, depth + 1);
        for (size_t j = 0; j < c.n; j++) {
          unsigned v = word[j] + g[depth][j];
          word[j] = (uint8_t)(v >= c.p ? v - c.p : v);
        }
      }
    };
    rec(rec, 1);
    parts[shard] = std::move(local);
  }
  WeightDistribution wd;
  wd.counts.assign(c.n + 1, 0);
  for (unsigned shard = 0; shard < c.p; shard++)
    for (size_t i = 0; i <= c.n; i++) wd.counts[i] += parts[shard].counts[i];
  if (c.k == 0) {
    wd.counts.assign(c.n + 1, 0);
    wd.counts[0] = 1;
  }
  return wd;
}

std::vector<std::vector<uint8_t>> all_codewords(const LinearCode& c) {
  std::vector<std::vector<uint8_t>> out;
  out.reserve(pow_u64(c.p, c.k));
  enumerate_words(c, [&](const std::vector<uint8_t>& w) { out.push_back(w); });
  return out;
}

LinearCode dual_code(const LinearCode& c) {
  // Dual = null space of the generator over F_p.
  // rref generator: pivot columns P, free columns F; dual basis from
  // parity relations: for each free column f, word with 1 at f and
  // -g(i,f) at pivot column of row i.
  auto [m, rank] = rref_mod_p(c.generator, c.p);
  std::vector<size_t> pivots;
  std::vector<bool> isPivot(c.n, false);
  for (size_t i = 0; i < rank; i++) {
    size_t j = 0;
    while (j < c.n && m(i, j) == 0) j++;
    pivots.push_back(j);
    isPivot[j] = true;
  }
  IntMat d(c.n - rank, c.n);
  size_t row = 0;
  for (size_t f = 0; f < c.n; f++) {
    if (isPivot[f]) continue;
    d(row, f) = 1;
    for (size_t i = 0; i < rank; i++)
      d(row, pivots[i]) = (c.p - m(i, f).get_ui()) % c.p;
    row++;
  }
  if (row == 0) {
    // Dual of the full space: zero code, represented with k=0 and an
    // all-zero 1 x n generator.
    LinearCode z;
    z.p = c.p;
    z.n = c.n;
    z.k = 0;
    z.generator = IntMat(1, c.n);
    return z;
  }
  return code_from_generator(c.p, d);
}

LinearCode shorten(const LinearCode& c, const std::vector<size_t>& positions) {
  if (positions.empty()) return c;
  // Solve for the subcode vanishing on `positions` over F_p: row space of
  // kernel-combinations of the generator restricted to those columns.
  IntMat sub(c.k, positions.size());
  for (size_t i = 0; i < c.k; i++)
    for (size_t j = 0; j < positions.size(); j++)
      sub(i, j) = c.generator(i, positions[j]);
  // Kernel over F_p of sub^T * y = 0, i.e. combinations y with y*sub = 0.
  auto [m, rank] = rref_mod_p(sub.transposed(), c.p);
  std::vector<size_t> pivots;
  std::vector<bool> isPivot(c.k, false);
  for (size_t i = 0; i < rank; i++) {
    size_t j = 0;
    while (j < c.k && m(i, j) == 0) j++;
    pivots.push_back(j);
    isPivot[j] = true;
  }
  std::vector<bool> drop(c.n, false);
  for (size_t p : positions) drop[p] = true;
  size_t keep = 0;
  for (size_t j = 0; j < c.n; j++) keep += !drop[j];
  std::vector<std::vector<Int>> rows;
  for (size_t f = 0; f < c.k; f++) {
    if (isPivot[f]) continue;
    std::vector<Int> y(c.k, 0);
    y[f] = 1;
    for (size_t i = 0; i < rank; i++)
      y[pivots[i]] = (c.p - m(i, f).get_ui()) % c.p;
    std::vector<Int> word(keep, 0);
    size_t col = 0;
    for (size_t j = 0; j < c.n; j++) {
      if (drop[j]) continue;
      Int s = 0;
      for (size_t i = 0; i < c.k; i++) s += y[i] * c.generator(i, j);
      mpz_mod_ui(s.get_mpz_t(), s.get_mpz_t(), c.p);
      word[col++] = s;
    }
    rows.push_back(word);
  }
  if (rows.empty()) {
    LinearCode z;
    z.p = c.p;
    z.n = keep;
    z.k = 0;
    z.generator = IntMat(1, keep);
    return z;
  }
  IntMat g(rows.size(), keep);
  for (size_t i = 0; i < rows.size(); i++)
    for (size_t j = 0; j < keep; j++) g(i, j) = rows[i][j];
  return code_from_generator(c.p, g);
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (a.p != b.p || a.n != b.n || a.k != b.k) return false;
  return rref_mod_p(a.generator, a.p).m == rref_mod_p(b.generator, b.p).m;
}

size_t min_weight(const LinearCode& c) {
  size_t best = c.n + 1;
  enumerate_words(c, [&](const std::vector<uint8_t>& w) {
    size_t wt = 0;
    for (uint8_t x : w) wt += x != 0;
    if (wt != 0 && wt < best) best = wt;
  });
  return best;
}

std::vector<SupportViolation> support_conditions_48(const LinearCode& ternary,
                                                    const LinearCode& binary,
                                                    uint32_t duumHalf) {
  if (ternary.n != 24 || binary.n != 24)
    throw std::invalid_argument("support_conditions_48: length must be 24");
  std::vector<SupportViolation> out;

  std::vector<uint32_t> octads;
  std::unordered_set<uint32_t> dodecads;
  if (binary.k > 0) {
    enumerate_words(binary, [&](const std::vector<uint8_t>& w) {
      uint32_t mask = 0;
      for (size_t j = 0; j < 24; j++)
        if (w[j]) mask |= uint32_t(1) << j;
      int wt = std::popcount(mask);
      if (wt == 8) octads.push_back(mask);
      if (wt == 12) dodecads.insert(mask);
    });
  }
  // unions of two weight-8 codewords can only have weight 12 when the
  // supports meet in exactly 4 positions
  std::unordered_set<uint32_t> octadPairUnions;
  for (size_t i = 0; i < octads.size(); i++)
    for (size_t j = i + 1; j < octads.size(); j++)
      if (std::popcount(octads[i] & octads[j]) == 4)
        octadPairUnions.insert(octads[i] | octads[j]);

  std::unordered_set<uint32_t> seen6, seen9, seen12;  // supports, deduped
  enumerate_words(ternary, [&](const std::vector<uint8_t>& w) {
    uint32_t mask = 0;
    for (size_t j = 0; j < 24; j++)
      if (w[j]) mask |= uint32_t(1) << j;
    int wt = std::popcount(mask);
    if (wt == 6 && seen6.insert(mask).second) {
      for (uint32_t o : octads)
        if ((mask & ~o) == 0) {
          out.push_back({1, mask, o});
          break;
        }
    } else if (wt == 9 && seen9.insert(mask).second) {
      for (uint32_t o : octads)
        if ((o & ~mask) == 0) {
          out.push_back({2, mask, o});
          break;
        }
    } else if (wt == 12 && seen12.insert(mask).second) {
      if (duumHalf != 0) {
        uint32_t other = ~duumHalf & 0xFFFFFFu;
        if ((mask & ~duumHalf) == 0 || (mask & ~other) == 0) return;
      }
      if (dodecads.count(mask)) out.push_back({3, mask, mask});
      else if (octadPairUnions.count(mask)) out.push_back({3, mask, mask});
    }
  });
  return out;
}

LinearCode read_code_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open code file: " + path);
  unsigned p;
  size_t n, k;
  f >> p >> n >> k;
  IntMat rows(k, n);
  for (size_t i = 0; i < k; i++)
    for (size_t j = 0; j < n; j++) {
      long v;
      if (!(f >> v)) throw std::runtime_error("truncated code file: " + path);
      rows(i, j) = v;
    }
  return code_from_generator(p, rows);
}

void write_code_file(const std::string& path, const LinearCode& c) {
  std::ofstream f(path);
  f << c.p << " " << c.n << " " << c.k << "\n";
  for (size_t i = 0; i < c.k; i++) {
    for (size_t j = 0; j < c.n; j++)
      f << (j ? " " : "") << c.generator(i, j).get_str();
    f << "\n";
  }
}

static IntMat mat_from(std::initializer_list<std::initializer_list<int>> rows) {
  size_t r = rows.size(), c = rows.begin()->size();
  IntMat m(r, c);
  size_t i = 0;
  for (auto& row : rows) {
    size_t j = 0;
    for (int v : row) m(i, j++) = v;
    i++;
  }
  return m;
}

LinearCode ternary_golay12() {
  return code_from_generator(3, mat_from({
      {1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
      {0, 1, 0, 0, 0, 0, -1, 0, 1, -1, -1, 1},
      {0, 0, 1, 0, 0, 0, -1, 1, 0, 1, -1, -1},
      {0, 0, 0, 1, 0, 0, -1, -1, 1, 0, 1, -1},
      {0, 0, 0, 0, 1, 0, -1, -1, -1, 1, 0, 1},
      {0, 0, 0, 0, 0, 1, -1, 1, -1, -1, 1, 0},
  }));
}

LinearCode tetracode() {
  return code_from_generator(3, mat_from({{1, 1, 1, 0}, {0, 1, -1, 1}}));
}

LinearCode binary_golay24() {
  // Standard extended Golay [24,12,8]: [I12 | B], B from the quadratic
  // residues mod 11 with an all-ones border. Verified A8 = 759, A12 = 2576.
  IntMat g(12, 24);
  bool qr[11] = {};
  qr[0] = true;
  for (int t = 1; t < 11; t++) qr[(t * t) % 11] = true;
  for (size_t i = 0; i < 12; i++) g(i, i) = 1;
  for (size_t i = 0; i < 11; i++) {
    g(i, 23) = 1;
    g(11, 12 + i) = 1;
    for (size_t j = 0; j < 11; j++)
      g(i, 12 + j) = qr[(11 + j - i) % 11] ? 1 : 0;
  }
  return code_from_generator(2, g);
}

}  // namespace ternlat
