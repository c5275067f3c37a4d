// The chain-counting flag vector and the Moebius-based Eulerian test both
// split their work across threads; each has a serial reference that walks a
// different recursion. The two must agree bit for bit on every lattice.

#include <random>
#include <vector>

#include "doctest.h"

#include "polymux/large_facet.hpp"
#include "polymux/lattice.hpp"
#include "polymux/multiplex.hpp"
#include "polymux/ordinary.hpp"

using namespace polymux;

namespace {

void check_agreement(const FaceLattice& lat) {
  CHECK(flag_vector(lat) == flag_vector_reference(lat));
  CHECK(eulerian_check(lat) == eulerian_check_reference(lat));
}

}  // namespace

TEST_CASE("parallel kernels agree with the serial references on fixed corpora") {
  for (const auto& [d, n] : {std::pair{2, 8}, {3, 7}, {4, 8}, {5, 8}, {6, 9}})
    check_agreement(FaceLattice::build(multiplex_facets(d, n)));
  for (const auto& [d, N] : {std::pair{3, 8}, {4, 9}, {5, 9}, {6, 10}})
    check_agreement(FaceLattice::build(cyclic_facets(d, N)));
  for (int q : {7, 9, 11, 14})
    check_agreement(FaceLattice::build(large_facet_construct(q).final_polytope));
}

TEST_CASE("parallel kernels agree on randomly drawn instances") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    const int d = std::uniform_int_distribution<int>(2, 5)(rng);
    const int n = std::uniform_int_distribution<int>(d, 9)(rng);
    check_agreement(FaceLattice::build(multiplex_facets(d, n)));
  }
  for (int trial = 0; trial < 4; ++trial) {
    const int d = std::uniform_int_distribution<int>(3, 5)(rng);
    const int N = std::uniform_int_distribution<int>(d + 1, 9)(rng);
    check_agreement(FaceLattice::build(cyclic_facets(d, N)));
  }
  for (int trial = 0; trial < 3; ++trial) {
    const int q = std::uniform_int_distribution<int>(7, 18)(rng);
    check_agreement(FaceLattice::build(large_facet_construct(q).final_polytope));
  }
}

TEST_CASE("disagreement is impossible on non-polytopal but graded input") {
  // the references must track the parallel kernels on failing inputs too
  const FacetList glued{2, {0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}}};
  const FaceLattice lat = FaceLattice::build(glued);
  CHECK(eulerian_check(lat) == eulerian_check_reference(lat));
  CHECK(flag_vector(lat) == flag_vector_reference(lat));
}
