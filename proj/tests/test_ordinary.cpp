#include <vector>

#include "doctest.h"

#include "polymux/errors.hpp"
#include "polymux/lattice.hpp"
#include "polymux/multiplex.hpp"
#include "polymux/ordinary.hpp"

using namespace polymux;

TEST_CASE("ordinary parameter validation") {
  CHECK_NOTHROW(validate({5, 6, 8}));
  CHECK_NOTHROW(validate({5, 5, 5}));
  CHECK_THROWS_AS(validate({4, 5, 6}), BadParams);  // even dimension
  CHECK_THROWS_AS(validate({3, 3, 4}), BadParams);  // too small
  CHECK_THROWS_AS(validate({5, 4, 6}), BadParams);  // k below d
  CHECK_THROWS_AS(validate({5, 8, 7}), BadParams);  // k above n
}

TEST_CASE("sum forms agree with the simplified branches") {
  for (int d = 5; d <= 9; d += 2)
    for (int k = d; k <= d + 6; ++k)
      for (int i = 0; i <= d - 1; ++i) {
        CHECK(ordinary_alpha(d, k, i) == ordinary_alpha_sum(d, k, i));
        CHECK(ordinary_f_gain(d, k, i) == ordinary_f_gain_sum(d, k, i));
      }
  for (int d = 2; d <= 8; ++d)
    for (int k = d; k <= d + 8; ++k)
      for (int i = 0; i <= d - 1; ++i) CHECK(cyclic_f(d, k, i) == cyclic_f_sum(d, k, i));
}

TEST_CASE("cyclic face counts in low dimensions") {
  // 3-polytopes: simplicial with the maximum edge count
  for (int k = 3; k <= 12; ++k) {
    CHECK(cyclic_f(3, k, 0) == k + 1);
    CHECK(cyclic_f(3, k, 1) == 3 * (k + 1) - 6);
    CHECK(cyclic_f(3, k, 2) == 2 * (k + 1) - 4);
  }
  // the 4-dimensional cyclic polytope with 8 vertices
  CHECK(cyclic_f(4, 7, 0) == 8);
  CHECK(cyclic_f(4, 7, 1) == 28);  // neighborly: every vertex pair is an edge
  CHECK(cyclic_f(4, 7, 2) == 40);
  CHECK(cyclic_f(4, 7, 3) == 20);
  // simplices
  for (int d = 2; d <= 7; ++d)
    for (int i = 0; i <= d - 1; ++i) CHECK(cyclic_f(d, d, i) == binomial(d + 1, i + 1));
}

TEST_CASE("cyclic facet enumeration matches the closed form") {
  for (const auto& [d, N] : {std::pair{3, 7}, {4, 8}, {5, 8}, {6, 10}}) {
    const FacetList p = cyclic_facets(d, N);
    CHECK(static_cast<int>(p.vertices.size()) == N);
    for (const auto& f : p.facets) CHECK(static_cast<int>(f.size()) == d);
    CHECK(Integer(p.facets.size()) == cyclic_f(d, N - 1, d - 1));

    const FaceLattice lat = FaceLattice::build(p);
    const std::vector<Integer> fvec = lat.f_vector();
    for (int i = 0; i <= d - 1; ++i) CHECK(fvec[static_cast<std::size_t>(i)] == cyclic_f(d, N - 1, i));
    CHECK(euler_check(lat));
    CHECK(eulerian_check(lat));
  }
  CHECK_THROWS_AS(cyclic_facets(3, 31), BadParams);
  CHECK_THROWS_AS(cyclic_facets(7, 7), BadParams);  // needs N > d
}

TEST_CASE("the multiplex boundary k = d") {
  for (int n = 5; n <= 10; ++n) {
    const OrdinaryParams p{5, 5, n};
    for (int i = 0; i <= 4; ++i) CHECK(ordinary_f(p, i) == multiplex_f(5, n, i));
    for (int i = 1; i <= 4; ++i) CHECK(ordinary_f0(p, i) == multiplex_flag(5, n, {0, i}));
    CHECK(ordinary_flag_vector(p) == multiplex_flag_vector(5, n));
  }
}

TEST_CASE("the cyclic boundary k = n") {
  // simplicial: every i-face carries exactly i+1 vertices
  for (const auto& [d, n] : {std::pair{5, 7}, {5, 9}, {7, 9}}) {
    const OrdinaryParams p{d, n, n};
    for (int i = 1; i <= d - 1; ++i)
      CHECK(ordinary_f0(p, i) == Integer(i + 1) * ordinary_f(p, i));
  }
  // flag counts agree with chain counting on the Gale lattice
  const OrdinaryParams p{5, 7, 7};
  const FaceLattice lat = FaceLattice::build(cyclic_facets(5, 8));
  CHECK(flag_vector(lat) == ordinary_flag_vector(p));
}

TEST_CASE("interior instances satisfy the polytope identities") {
  for (int k = 6; k <= 9; ++k)
    for (int n = k + 1; n <= k + 4; ++n) {
      const OrdinaryParams p{5, k, n};
      const FlagVector fv = ordinary_flag_vector(p);
      CHECK(fv.at({0}) == n + 1);
      CHECK(fv.at({0, 1}) == 2 * fv.at({1}));
      CHECK(fv.at({3, 4}) == 2 * fv.at({3}));
      Integer euler = 0;
      for (int i = 0; i <= 4; ++i) euler += (i % 2 == 0 ? 1 : -1) * fv.at({i});
      CHECK(euler == 2);
      for (int t = 1; t <= 4; ++t) CHECK(dehn_sommerville_check(fv, t));
    }
}

TEST_CASE("vertex-edge incidences close the handshake") {
  for (const auto& [d, k, n] : {std::tuple{5, 6, 8}, {5, 8, 11}, {7, 9, 12}}) {
    const OrdinaryParams p{d, k, n};
    CHECK(ordinary_f0(p, 1) == 2 * ordinary_f(p, 1));
    CHECK(ordinary_f0(p, d - 1) == 2 * ordinary_f(p, d - 2));
  }
}
