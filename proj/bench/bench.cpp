// Timing comparison of the parallel kernels against their serial reference
// implementations, plus an end-to-end sweep of the four-dimensional family.
// Results are wall-clock and informational only; correctness lives in the
// test suite.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polymux/large_facet.hpp"
#include "polymux/lattice.hpp"
#include "polymux/multiplex.hpp"
#include "polymux/ordinary.hpp"

using namespace polymux;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const std::chrono::duration<double> len = std::chrono::steady_clock::now() - start;
  return len.count();
}

void compare_flag_kernels(const char* name, const FaceLattice& lat) {
  FlagVector parallel(lat.dim());
  FlagVector serial(lat.dim());
  const double tp = seconds([&] { parallel = flag_vector(lat); });
  const double ts = seconds([&] { serial = flag_vector_reference(lat); });
  std::printf("%-28s %6zu faces  flag  parallel %8.4fs  serial %8.4fs  %s\n", name, lat.size(),
              tp, ts, parallel == serial ? "agree" : "DISAGREE");
}

void compare_eulerian_kernels(const char* name, const FaceLattice& lat) {
  bool a = false, b = false;
  const double tp = seconds([&] { a = eulerian_check(lat); });
  const double ts = seconds([&] { b = eulerian_check_reference(lat); });
  std::printf("%-28s %6zu faces  euler parallel %8.4fs  serial %8.4fs  %s\n", name, lat.size(),
              tp, ts, a == b ? "agree" : "DISAGREE");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available, running single-threaded\n\n");
#endif

  struct Named {
    const char* name;
    FacetList p;
  };
  const std::vector<Named> corpus = {
      {"multiplex d=4 n=10", multiplex_facets(4, 10)},
      {"multiplex d=5 n=10", multiplex_facets(5, 10)},
      {"multiplex d=6 n=10", multiplex_facets(6, 10)},
      {"cyclic d=5 N=11", cyclic_facets(5, 11)},
      {"cyclic d=6 N=11", cyclic_facets(6, 11)},
      {"large facet q=24", large_facet_construct(24).final_polytope},
  };

  for (const auto& item : corpus) {
    const FaceLattice lat = FaceLattice::build(item.p);
    compare_flag_kernels(item.name, lat);
    compare_eulerian_kernels(item.name, lat);
  }

  std::printf("\nfour-dimensional family, construct + full verification:\n");
  for (int q : {10, 20, 30, 40}) {
    LargeFacetReport rep;
    const double t = seconds([&] { rep = large_facet_verify(q); });
    std::printf("  q = %2d  %7.3fs  %s\n", q, t, rep.pass ? "pass" : "FAIL");
  }
  return 0;
}
