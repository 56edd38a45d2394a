// Benchmark: OpenMP kernels vs their serial reference implementations.
// Checks result parity exactly and reports wall times.
//
// Usage: bench_enum [entry] [bound]   (default: k12_codes at its min norm 36)
#include <chrono>
#include <iostream>

#include "ternlat/catalog.hpp"
#include "ternlat/enumerate.hpp"

using namespace ternlat;

template <class F>
static auto timed(const char* label, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  auto result = f();
  double s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::cout << label << ": " << s << " s" << std::endl;
  return result;
}

int main(int argc, char** argv) {
  std::string entry = argc > 1 ? argv[1] : "k12_codes";
  Rat bound = argc > 2 ? rat_from_string(argv[2]) : Rat(36);

  BuiltLattice b = build_catalog(entry);
  RatMat g = gram(b.lattice);
  std::cout << "short_vectors(" << entry << ", bound " << rat_to_string(bound)
            << ")" << std::endl;
  auto par = timed("  parallel", [&] { return short_vectors(g, bound); });
  auto ser = timed("  serial  ", [&] { return short_vectors_serial(g, bound); });
  std::cout << "  vectors: " << par.size() << "  parity: "
            << (par.size() == ser.size() &&
                        [&] {
                          for (size_t i = 0; i < par.size(); i++)
                            if (par[i].coeffs != ser[i].coeffs ||
                                par[i].norm != ser[i].norm)
                              return false;
                          return true;
                        }()
                    ? "EXACT"
                    : "MISMATCH")
            << std::endl;

  LinearCode c = catalog_code("golay12");
  std::cout << "weight_distribution(golay12)" << std::endl;
  auto wp = timed("  parallel", [&] { return weight_distribution(c); });
  auto ws = timed("  serial  ", [&] { return weight_distribution_serial(c); });
  std::cout << "  parity: " << (wp.counts == ws.counts ? "EXACT" : "MISMATCH")
            << std::endl;
  return 0;
}
