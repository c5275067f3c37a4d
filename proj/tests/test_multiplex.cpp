#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "polymux/errors.hpp"
#include "polymux/lattice.hpp"
#include "polymux/multiplex.hpp"

using namespace polymux;

namespace {

std::set<std::set<int>> facet_sets(const std::vector<std::vector<int>>& facets) {
  std::set<std::set<int>> out;
  for (const auto& f : facets) out.insert(std::set<int>(f.begin(), f.end()));
  return out;
}

}  // namespace

TEST_CASE("small multiplexes have the expected facet families") {
  // d = 2: the quadrilateral, in the order 0-1-3-2 around the boundary
  const FacetList quad = multiplex_facets(2, 3);
  CHECK(quad.vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(facet_sets(quad.facets) ==
        facet_sets({{0, 1}, {0, 2}, {1, 3}, {2, 3}}));

  // n = d gives the simplex
  const FacetList simplex = multiplex_facets(4, 4);
  CHECK(simplex.facets.size() == 5);
  for (const auto& f : simplex.facets) CHECK(f.size() == 4);

  // d = 3, n = 4: the square pyramid, apex the middle vertex 2
  const FacetList pyr = multiplex_facets(3, 4);
  CHECK(facet_sets(pyr.facets) ==
        facet_sets({{0, 1, 2}, {0, 2, 3}, {0, 1, 3, 4}, {1, 2, 4}, {2, 3, 4}}));
}

TEST_CASE("multiplex face counts match the lattice") {
  for (const auto& [d, n] : {std::pair{2, 5}, {3, 5}, {4, 6}, {5, 7}}) {
    const FaceLattice lat = FaceLattice::build(multiplex_facets(d, n));
    const std::vector<Integer> f = lat.f_vector();
    for (int i = 0; i <= d - 1; ++i) CHECK(f[static_cast<std::size_t>(i)] == multiplex_f(d, n, i));
    CHECK(f[0] == n + 1);
    CHECK(f[static_cast<std::size_t>(d - 1)] == n + 1);  // as many facets as vertices
  }
}

TEST_CASE("closed-form flag counts") {
  CHECK(multiplex_f(4, 6, 0) == 7);
  CHECK(multiplex_f(4, 6, 1) == 16);
  CHECK(multiplex_f(4, 6, 2) == 16);
  CHECK(multiplex_f(4, 6, 3) == 7);
  CHECK(multiplex_flag(4, 6, {0, 3}) == 32);
  CHECK(multiplex_flag(5, 7, {0, 2}) == 98);
  CHECK(multiplex_flag(3, 3, {0, 1, 2}) == 24);  // simplex: complete flags = 4!

  const FlagVector fv = multiplex_flag_vector(4, 6);
  CHECK(fv.at({}) == 1);
  CHECK(fv.at({0, 3}) == 32);
  CHECK(fv.at({0}) == multiplex_f(4, 6, 0));

  // the closed form must agree with chain counting on the lattice
  for (const auto& [d, n] : {std::pair{3, 6}, {4, 7}, {5, 7}}) {
    const FaceLattice lat = FaceLattice::build(multiplex_facets(d, n));
    CHECK(flag_vector(lat) == multiplex_flag_vector(d, n));
  }
}

TEST_CASE("flag counts on random parameters stay integral and consistent") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = std::uniform_int_distribution<int>(2, 9)(rng);
    const int n = std::uniform_int_distribution<int>(d, d + 12)(rng);
    const FlagVector fv = multiplex_flag_vector(d, n);
    CHECK(fv.at({0, 1}) == 2 * fv.at({1}));
    CHECK(fv.at({d - 2, d - 1}) == 2 * fv.at({d - 2}));
    for (int i = 0; i <= d - 1; ++i)
      CHECK(fv.at({i}) == multiplex_f(d, n, i));
  }
}

TEST_CASE("toric g-polynomial of a multiplex") {
  const IntPolynomial g = multiplex_g(4, 6);
  CHECK(g.degree() == 1);
  CHECK(g.coefficient(0) == 1);
  CHECK(g.coefficient(1) == 2);
  CHECK(multiplex_g(3, 3).degree() == 0);  // the simplex has trivial g
}

TEST_CASE("order-multiplex recognition depends on the vertex order") {
  // square pyramid: accepted only with the apex in the middle of the order
  const std::vector<std::vector<int>> pyr = {
      {2, 4, 7, 8}, {2, 3, 4}, {3, 4, 8}, {3, 7, 8}, {2, 3, 7}};
  const auto good = is_order_multiplex({2, 4, 3, 7, 8}, pyr);
  REQUIRE(good.has_value());
  CHECK(good->d == 3);
  CHECK(good->n == 4);
  CHECK(!is_order_multiplex({2, 3, 4, 7, 8}, pyr).has_value());

  // the cyclic order of a quadrilateral is a multiplex order after one swap
  const std::vector<std::vector<int>> sq = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  CHECK(is_order_multiplex({0, 1, 3, 2}, sq).has_value());
  CHECK(!is_order_multiplex({0, 1, 2, 3}, sq).has_value());

  // every multiplex recognizes itself in its defining order
  for (const auto& [d, n] : {std::pair{2, 4}, {3, 6}, {4, 4}, {4, 8}, {5, 9}}) {
    const FacetList p = multiplex_facets(d, n);
    const auto m = is_order_multiplex(p.vertices, p.facets);
    REQUIRE(m.has_value());
    CHECK(m->d == d);
    CHECK(m->n == n);
  }
}

TEST_CASE("multiplex parameter validation") {
  CHECK_THROWS_AS(multiplex_facets(1, 3), BadParams);
  CHECK_THROWS_AS(multiplex_facets(3, 2), BadParams);
  CHECK_THROWS_AS(multiplex_f(4, 3, 0), BadParams);
  CHECK_THROWS_AS(multiplex_flag(4, 6, {0, 5}), BadParams);
}
