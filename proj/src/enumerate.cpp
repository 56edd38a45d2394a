#include "ternlat/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ternlat {

namespace {

double to_d(const Rat& r) { return mpq_get_d(r.get_mpq_t()); }

template <class S>
struct Ops;
template <>
struct Ops<double> {
  static double from_rat(const Rat& r) { return to_d(r); }
  static long round_center(double c) { return (long)std::llround(c); }
};
template <>
struct Ops<Rat> {
  static Rat from_rat(const Rat& r) { return r; }
  static long round_center(const Rat& c) {
    return round_nearest(c).get_si();
  }
};

// Scalar-generic Schnorr-Euchner style depth-first enumeration over the
// coefficient tree of an LDL-decomposed Gram matrix. Coefficient vectors are
// canonicalized by forcing the outermost nonzero coefficient positive (the
// +- twin is suppressed); an optional rational offset turns the walk into a
// closest-vector search where the symmetry trick is disabled.
template <class S>
struct Enumerator {
  size_t n;
  std::vector<std::vector<S>> mu;  // mu[i][j], j < i
  std::vector<S> d;
  S bound;  // mutable: emit may shrink it
  bool hasOffset = false;
  std::vector<S> yoff;  // offset coefficients (reduced basis)
  std::vector<long> x;
  // emit(x): full coefficient vector accepted at float/exact level
  std::function<void(const std::vector<long>&)> emit;

  void run() {
    x.assign(n, 0);
    level(n - 1, S(0), !hasOffset);
  }
  // Run with the top coefficient fixed (parallel sharding).
  void run_top_fixed(long top) {
    x.assign(n, 0);
    x[n - 1] = top;
    S z = S(top) - (hasOffset ? yoff[n - 1] : S(0));
    S t = d[n - 1] * z * z;
    if (t > bound) return;
    if (n == 1) {
      if (hasOffset || top != 0) emit(x);
      return;
    }
    level(n - 2, t, !hasOffset && top == 0);
  }

  void level(size_t i, S partial, bool allZeroAbove) {
    S c(0);
    for (size_t j = i + 1; j < n; j++) {
      S z = S(x[j]) - (hasOffset ? yoff[j] : S(0));
      if (hasOffset || x[j] != 0) c += mu[j][i] * z;
    }
    S shift = c - (hasOffset ? yoff[i] : S(0));  // value term: (x_i + shift)
    long x0 = allZeroAbove ? 0 : Ops<S>::round_center(-shift);
    for (long xv = x0;; xv++) {
      S v = S(xv) + shift;
      S t = partial + d[i] * v * v;
      if (t > bound) break;
      step(i, xv, t, allZeroAbove && xv == 0);
    }
    if (!allZeroAbove) {
      for (long xv = x0 - 1;; xv--) {
        S v = S(xv) + shift;
        S t = partial + d[i] * v * v;
        if (t > bound) break;
        step(i, xv, t, false);
      }
    }
  }

  void step(size_t i, long xv, S t, bool allZero) {
    x[i] = xv;
    if (i == 0) {
      if (!allZero) emit(x);
    } else {
      level(i - 1, t, allZero);
    }
    x[i] = 0;
  }
};

struct Prepared {
  size_t n = 0;
  RatMat gr;  // LLL-reduced Gram
  IntMat u;   // reduced = u * g * u^T
  Int denom;  // gi = gr * denom is integral
  IntMat gi;
  bool fastInt = false;  // __int128 recheck path usable
  std::vector<std::vector<long>> giLL;
  std::vector<std::vector<double>> mud;
  std::vector<double> dd;
  LDL exact;
  bool useExactPath = false;  // float decomposition too ill-conditioned
};

Prepared prepare(const RatMat& g) {
  Prepared p;
  p.n = g.rows;
  LllResult red = lll_reduce(g);
  p.gr = red.gram;
  p.u = red.transform;
  p.denom = 1;
  for (const Rat& v : p.gr.a)
    mpz_lcm(p.denom.get_mpz_t(), p.denom.get_mpz_t(),
            v.get_den().get_mpz_t());
  p.gi = IntMat(p.n, p.n);
  for (size_t i = 0; i < p.gi.a.size(); i++) {
    Rat v = p.gr.a[i] * p.denom;
    p.gi.a[i] = v.get_num();
  }
  p.fastInt = true;
  p.giLL.assign(p.n, std::vector<long>(p.n));
  Int lim = Int(1) << 40;
  for (size_t i = 0; i < p.n && p.fastInt; i++)
    for (size_t j = 0; j < p.n; j++) {
      if (abs(p.gi(i, j)) >= lim) {
        p.fastInt = false;
        break;
      }
      p.giLL[i][j] = (long)p.gi(i, j).get_si();
    }
  p.exact = ldl(p.gr);
  p.mud.assign(p.n, std::vector<double>(p.n, 0.0));
  p.dd.resize(p.n);
  double dmin = HUGE_VAL, dmax = 0;
  for (size_t i = 0; i < p.n; i++) {
    p.dd[i] = to_d(p.exact.d[i]);
    dmin = std::min(dmin, p.dd[i]);
    dmax = std::max(dmax, p.dd[i]);
    for (size_t j = 0; j < i; j++) p.mud[i][j] = to_d(p.exact.l(i, j));
  }
  p.useExactPath = !(dmin > 0) || !std::isfinite(dmax) || dmax / dmin > 1e12;
  return p;
}

Rat exact_norm_reduced(const Prepared& p, const std::vector<long>& x) {
  bool small = p.fastInt;
  if (small)
    for (long v : x)
      if (v > (1 << 20) || v < -(1 << 20)) {
        small = false;
        break;
      }
  if (small) {
    __int128 acc = 0;
    for (size_t i = 0; i < p.n; i++) {
      if (x[i] == 0) continue;
      __int128 row = 0;
      for (size_t j = 0; j < i; j++)
        if (x[j] != 0) row += (__int128)p.giLL[i][j] * x[j];
      acc += ((__int128)x[i]) * (2 * row + (__int128)p.giLL[i][i] * x[i]);
    }
    bool neg = acc < 0;
    if (neg) acc = -acc;
    uint64_t hi = (uint64_t)(acc >> 64), lo = (uint64_t)acc;
    Int num;
    mpz_set_ui(num.get_mpz_t(), hi);
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 64);
    mpz_add_ui(num.get_mpz_t(), num.get_mpz_t(), lo);
    if (neg) num = -num;
    Rat r(num, p.denom);
    r.canonicalize();
    return r;
  }
  Int acc = 0;
  for (size_t i = 0; i < p.n; i++) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (size_t j = 0; j < i; j++)
      if (x[j] != 0) row += p.gi(i, j) * x[j];
    acc += Int(x[i]) * (2 * row + p.gi(i, i) * Int(x[i]));
  }
  Rat r(acc, p.denom);
  r.canonicalize();
  return r;
}

std::vector<Int> to_original_coeffs(const Prepared& p,
                                    const std::vector<long>& x) {
  std::vector<Int> y(p.n, 0);
  for (size_t i = 0; i < p.n; i++) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < p.n; j++) y[j] += Int(x[i]) * p.u(i, j);
  }
  for (const Int& v : y) {
    if (v > 0) break;
    if (v < 0) {
      for (Int& w : y) w = -w;
      break;
    }
  }
  return y;
}

constexpr double kSlack = 1e-6;

double float_bound(const Rat& bound) {
  double b = to_d(bound);
  return b * (1 + kSlack) + 1e-9;
}

size_t worker_count() {
#ifdef _OPENMP
  return (size_t)omp_get_max_threads();
#else
  return 1;
#endif
}

size_t worker_id() {
#ifdef _OPENMP
  return (size_t)omp_get_thread_num();
#else
  return 0;
#endif
}

template <class Accept>
void enumerate_all(const Prepared& p, const Rat& bound, bool parallel,
                   Accept&& accept) {
  // accept(workerId, x, exactNorm) with exactNorm <= bound, exact.
  if (p.useExactPath) {
    Enumerator<Rat> e;
    e.n = p.n;
    e.d = p.exact.d;
    e.mu.assign(p.n, std::vector<Rat>(p.n));
    for (size_t i = 0; i < p.n; i++)
      for (size_t j = 0; j < i; j++) e.mu[i][j] = p.exact.l(i, j);
    e.bound = bound;
    e.emit = [&](const std::vector<long>& x) {
      Rat nn = exact_norm_reduced(p, x);
      if (nn <= bound && nn > 0) accept(0, x, nn);
    };
    e.run();
    return;
  }
  double fb = float_bound(bound);
  auto make = [&](Enumerator<double>& e) {
    e.n = p.n;
    e.d = p.dd;
    e.mu = p.mud;
    e.bound = fb;
  };
  if (!parallel || p.n < 2) {
    Enumerator<double> e;
    make(e);
    e.emit = [&](const std::vector<long>& x) {
      Rat nn = exact_norm_reduced(p, x);
      if (nn <= bound && nn > 0) accept(0, x, nn);
    };
    e.run();
    return;
  }
  // Shard the outermost coefficient (canonically >= 0).
  long top = (long)std::floor(std::sqrt(fb / p.dd[p.n - 1])) + 1;
  std::vector<long> vals;
  for (long v = 0; v <= top; v++) vals.push_back(v);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (size_t t = 0; t < vals.size(); t++) {
    Enumerator<double> e;
    make(e);
    e.emit = [&](const std::vector<long>& x) {
      Rat nn = exact_norm_reduced(p, x);
      if (nn <= bound && nn > 0) accept(worker_id(), x, nn);
    };
    e.run_top_fixed(vals[t]);
  }
}

}  // namespace

std::vector<ShortVector> short_vectors_impl(const RatMat& g, const Rat& bound,
                                            bool parallel) {
  if (bound <= 0) throw std::invalid_argument("short_vectors: bound <= 0");
  Prepared p = prepare(g);
  std::vector<std::vector<ShortVector>> parts(worker_count());
  enumerate_all(p, bound, parallel,
                [&](size_t w, const std::vector<long>& x, const Rat& nn) {
                  parts[w].push_back({to_original_coeffs(p, x), nn});
                });
  std::vector<ShortVector> out;
  for (auto& v : parts)
    for (auto& sv : v) out.push_back(std::move(sv));
  std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return std::lexicographical_compare(
        a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end(),
        [](const Int& x, const Int& y) { return x < y; });
  });
  return out;
}

std::vector<ShortVector> short_vectors(const RatMat& g, const Rat& bound) {
  return short_vectors_impl(g, bound, true);
}
std::vector<ShortVector> short_vectors_serial(const RatMat& g, const Rat& bound) {
  return short_vectors_impl(g, bound, false);
}

std::vector<std::pair<Rat, uint64_t>> norm_histogram(const RatMat& g,
                                                     const Rat& bound) {
  Prepared p = prepare(g);
#ifdef _OPENMP
  size_t nthreads = (size_t)omp_get_max_threads();
#else
  size_t nthreads = 1;
#endif
  std::vector<std::map<Rat, uint64_t>> hists(nthreads);
  enumerate_all(p, bound, true,
                [&](size_t, const std::vector<long>&, const Rat& nn) {
#ifdef _OPENMP
                  size_t tid = (size_t)omp_get_thread_num();
#else
                  size_t tid = 0;
#endif
                  hists[tid][nn] += 2;  // canonical vector + its negative
                });
  std::map<Rat, uint64_t> total;
  for (const auto& h : hists)
    for (const auto& [k, v] : h) total[k] += v;
  return {total.begin(), total.end()};
}

Rat min_norm(const RatMat& g) {
  Prepared p = prepare(g);
  Rat best = p.gr(0, 0);
  for (size_t i = 1; i < p.n; i++) best = std::min(best, p.gr(i, i));
  if (p.useExactPath) {
    Enumerator<Rat> e;
    e.n = p.n;
    e.d = p.exact.d;
    e.mu.assign(p.n, std::vector<Rat>(p.n));
    for (size_t i = 0; i < p.n; i++)
      for (size_t j = 0; j < i; j++) e.mu[i][j] = p.exact.l(i, j);
    e.bound = best;
    e.emit = [&](const std::vector<long>& x) {
      Rat nn = exact_norm_reduced(p, x);
      if (nn > 0 && nn < best) {
        best = nn;
        e.bound = best;
      }
    };
    e.run();
    return best;
  }
  Enumerator<double> e;
  e.n = p.n;
  e.d = p.dd;
  e.mu = p.mud;
  e.bound = float_bound(best);
  e.emit = [&](const std::vector<long>& x) {
    Rat nn = exact_norm_reduced(p, x);
    if (nn > 0 && nn < best) {
      best = nn;
      e.bound = float_bound(best);
    }
  };
  e.run();
  return best;
}

std::vector<std::pair<Rat, uint64_t>> theta_prefix(const RatMat& g,
                                                   const Rat& maxNorm,
                                                   const Rat& scaleSquared) {
  if (maxNorm <= 0) return {};
  Rat bound = maxNorm / scaleSquared;
  auto hist = norm_histogram(g, bound);
  std::vector<std::pair<Rat, uint64_t>> out;
  for (auto& [norm, count] : hist) out.emplace_back(norm * scaleSquared, count);
  return out;
}

ShortVectorReport short_vector_report(const RatMat& g, const Rat& bound) {
  ShortVectorReport r;
  r.enumeratedBound = bound;
  r.thetaPrefix = norm_histogram(g, bound);
  if (r.thetaPrefix.empty()) {
    r.minNorm = min_norm(g);
    return r;
  }
  r.minNorm = r.thetaPrefix[0].first;
  r.kissingNumber = r.thetaPrefix[0].second;
  if (r.thetaPrefix.size() > 1) {
    r.secondLayerNorm = r.thetaPrefix[1].first;
    r.secondLayerCount = r.thetaPrefix[1].second;
  }
  return r;
}

std::pair<Rat, uint64_t> second_layer(const RatMat& g) {
  Rat m = min_norm(g);
  for (int mult = 2; mult <= 8; mult *= 2) {
    auto hist = norm_histogram(g, m * mult);
    for (const auto& [norm, count] : hist)
      if (norm > m) return {norm, count};
  }
  throw std::domain_error("second_layer: no second shell within 8x min");
}

Rat coset_min_norm(const RatMat& g, const std::vector<Rat>& offsetCoeffs,
                   const Rat& bound) {
  Prepared p = prepare(g);
  if (offsetCoeffs.size() != p.n)
    throw std::invalid_argument("coset_min_norm: offset size");
  // Offset in the reduced basis: y' = y * u^{-1}, i.e. solve y' * u = y.
  RatMat urat = to_rat(p.u);
  std::vector<Rat> y(offsetCoeffs);
  auto yr = solve_left(urat, y);
  if (!yr) throw std::domain_error("coset_min_norm: transform not invertible");
  auto exact_coset_norm = [&](const std::vector<long>& x) {
    std::vector<Rat> z(p.n);
    for (size_t i = 0; i < p.n; i++) z[i] = Rat(x[i]) - (*yr)[i];
    Rat s = 0;
    for (size_t i = 0; i < p.n; i++) {
      if (z[i] == 0) continue;
      for (size_t j = 0; j < p.n; j++)
        if (z[j] != 0) s += z[i] * z[j] * p.gr(i, j);
    }
    return s;
  };
  // Babai rounding gives a valid starting bound.
  std::vector<long> babai(p.n);
  {
    std::vector<Rat> zc(p.n, Rat(0));
    for (size_t i = p.n; i-- > 0;) {
      Rat c = (*yr)[i];
      for (size_t j = i + 1; j < p.n; j++)
        c -= p.exact.l(j, i) * (Rat(babai[j]) - (*yr)[j]);
      babai[i] = round_nearest(c).get_si();
    }
  }
  Rat best = exact_coset_norm(babai);
  if (bound > best) best = bound;  // caller may request a wider search
  Enumerator<double> e;
  e.n = p.n;
  e.d = p.dd;
  e.mu = p.mud;
  e.hasOffset = true;
  e.yoff.resize(p.n);
  for (size_t i = 0; i < p.n; i++) e.yoff[i] = to_d((*yr)[i]);
  e.bound = float_bound(best);
  e.emit = [&](const std::vector<long>& x) {
    Rat nn = exact_coset_norm(x);
    if (nn < best) {
      best = nn;
      e.bound = float_bound(best);
    }
  };
  e.run();
  return best;
}

std::vector<ShortVector> brute_force_short_vectors(const RatMat& g,
                                                   const Rat& bound, long box) {
  size_t n = g.rows;
  if (n > 6) throw std::invalid_argument("brute force: rank > 6");
  std::vector<long> boxes(n, box);
  if (box <= 0) {
    // Per-coordinate bound from the dual Gram: x_i^2 <= bound * (g^{-1})_ii.
    for (size_t i = 0; i < n; i++) {
      std::vector<Rat> e(n, Rat(0));
      e[i] = 1;
      auto row = solve_left(g, e);  // row * g = e_i, so row_i = (g^{-1})_ii
      if (!row) throw std::domain_error("brute force: singular gram");
      double lim = std::sqrt(std::max(0.0, to_d(bound * (*row)[i]))) + 1;
      boxes[i] = (long)lim;
    }
  }
  std::vector<long> x(n);
  for (size_t i = 0; i < n; i++) x[i] = -boxes[i];
  std::vector<ShortVector> out;
  while (true) {
    // canonical sign: first nonzero coefficient positive
    size_t f = 0;
    while (f < n && x[f] == 0) f++;
    if (f < n && x[f] > 0) {
      Rat s = 0;
      for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
          if (x[i] && x[j]) s += Rat(x[i]) * Rat(x[j]) * g(i, j);
      if (s <= bound) {
        ShortVector sv;
        sv.norm = s;
        for (long v : x) sv.coeffs.push_back(v);
        out.push_back(sv);
      }
    }
    size_t i = 0;
    while (i < n && x[i] == boxes[i]) {
      x[i] = -boxes[i];
      i++;
    }
    if (i == n) break;
    x[i]++;
  }
  std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return std::lexicographical_compare(
        a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end(),
        [](const Int& x, const Int& y) { return x < y; });
  });
  return out;
}

}  // namespace ternlat
