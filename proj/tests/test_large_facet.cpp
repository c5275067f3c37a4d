#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "polymux/errors.hpp"
#include "polymux/large_facet.hpp"
#include "polymux/lattice.hpp"
#include "polymux/multiplex.hpp"
#include "polymux/multiplicial.hpp"
#include "polymux/toric.hpp"

using namespace polymux;

namespace {

std::set<std::set<int>> facet_sets(const std::vector<std::vector<int>>& facets) {
  std::set<std::set<int>> out;
  for (const auto& f : facets) out.insert(std::set<int>(f.begin(), f.end()));
  return out;
}

std::vector<Integer> iv(std::initializer_list<long long> xs) {
  std::vector<Integer> out;
  for (long long x : xs) out.push_back(Integer(x));
  return out;
}

}  // namespace

TEST_CASE("base labels skip the interior multiples of three") {
  CHECK(large_facet_base_labels(7) == std::vector<int>{0, 1, 2, 4, 5, 6});
  CHECK(large_facet_base_labels(8) == std::vector<int>{0, 1, 2, 4, 5, 7});
  CHECK(large_facet_base_labels(10) == std::vector<int>{0, 1, 2, 4, 5, 7, 8, 9});
  CHECK(large_facet_base_labels(12) == std::vector<int>{0, 1, 2, 4, 5, 7, 8, 10, 11});
  CHECK_THROWS_AS(large_facet_base_labels(6), BadParams);

  // the base always has ceil((2q+2)/3) vertices
  for (int q = 7; q <= 40; ++q)
    CHECK(static_cast<int>(large_facet_base_labels(q).size()) == (2 * q + 4) / 3);
}

TEST_CASE("the seven-vertex instance is the plain pyramid") {
  const ConstructionTrace tr = large_facet_construct(7);
  CHECK(tr.steps.empty());
  CHECK(!tr.multiplex_path);
  CHECK(facet_sets(tr.final_polytope.facets) ==
        facet_sets({{0, 1, 2, 4, 5, 6},
                    {0, 1, 2, 3},
                    {0, 2, 3, 4},
                    {2, 3, 4, 6},
                    {3, 4, 5, 6},
                    {0, 1, 3, 4, 5},
                    {1, 2, 3, 5, 6}}));
}

TEST_CASE("construction path bookkeeping") {
  for (int q : {5, 6}) {
    const ConstructionTrace tr = large_facet_construct(q);
    CHECK(tr.multiplex_path);
    CHECK(tr.steps.empty());
    CHECK(facet_sets(tr.final_polytope.facets) == facet_sets(multiplex_facets(4, q - 1).facets));
  }

  // one step kind per congruence class of q
  CHECK(large_facet_construct(8).steps.size() == 1);
  CHECK(large_facet_construct(8).steps[0].kind == StepKind::BeyondSimplex);
  CHECK(large_facet_construct(9).steps.size() == 1);
  CHECK(large_facet_construct(9).steps[0].kind == StepKind::BeyondPyramid);
  CHECK(large_facet_construct(10).steps.size() == 1);
  CHECK(large_facet_construct(10).steps[0].kind == StepKind::SplitFacetPair);
  CHECK(large_facet_construct(11).steps.size() == 2);
  CHECK(large_facet_construct(13).steps.size() == 2);

  // every label 3j missing from the base is introduced by exactly one step
  for (int q = 7; q <= 25; ++q) {
    const ConstructionTrace tr = large_facet_construct(q);
    std::set<int> introduced = {3};  // the pyramid apex
    for (int x : tr.base_labels) introduced.insert(x);
    for (const auto& st : tr.steps) {
      CHECK(introduced.count(st.new_vertex) == 0);
      introduced.insert(st.new_vertex);
    }
    CHECK(static_cast<int>(introduced.size()) == q);
    CHECK(tr.final_polytope.vertices.size() == static_cast<std::size_t>(q));
  }

  CHECK_THROWS_AS(large_facet_construct(4), BadParams);
}

TEST_CASE("every intermediate polytope stays Eulerian") {
  for (int q : {7, 8, 9, 10, 11, 12, 13, 16}) CHECK_NOTHROW(large_facet_construct(q, true));
}

TEST_CASE("closed-form counts for small q") {
  CHECK(large_facet_expected_f(7).f == iv({7, 16, 16, 7}));
  CHECK(large_facet_expected_f(7).f02 == 50);
  CHECK(large_facet_expected_h(7) == iv({1, 3, 3, 3, 1}));

  CHECK(large_facet_expected_f(8).f == iv({8, 20, 22, 10}));
  CHECK(large_facet_expected_f(8).f02 == 68);
  CHECK(large_facet_expected_h(8) == iv({1, 4, 4, 4, 1}));

  CHECK(large_facet_expected_f(9).f == iv({9, 24, 27, 12}));
  CHECK(large_facet_expected_f(9).f02 == 84);
  CHECK(large_facet_expected_h(9) == iv({1, 5, 6, 5, 1}));

  CHECK_THROWS_AS(large_facet_expected_f(6), BadParams);
  CHECK_THROWS_AS(large_facet_expected_h(6), BadParams);

  // Euler relation on the closed forms for the whole range
  for (int q = 7; q <= 60; ++q) {
    const ExpectedCounts e = large_facet_expected_f(q);
    CHECK(e.f[0] - e.f[1] + e.f[2] - e.f[3] == 0);
    const HVector h = large_facet_expected_h(q);
    CHECK(h[1] == e.f[0] - 4);
  }
}

TEST_CASE("full verification of representative instances") {
  for (int q : {5, 6, 7, 8, 9, 10, 11, 12, 15}) {
    const LargeFacetReport rep = large_facet_verify(q);
    for (const auto& c : rep.checks) {
      INFO("q = " << q << ", check " << c.name << ": " << c.detail);
      CHECK(c.pass);
    }
    CHECK(rep.pass);
    CHECK(rep.largest_facet_size == (2 * q + 4) / 3);
    CHECK(rep.stacked_final_vertex == (q >= 7 && q % 3 == 2));
  }
}

TEST_CASE("the computed lattice data matches the closed forms directly") {
  const ConstructionTrace tr = large_facet_construct(12);
  const FaceLattice lat = FaceLattice::build(tr.final_polytope);
  CHECK(lat.f_vector() == large_facet_expected_f(12).f);
  CHECK(flag_vector(lat).at({0, 2}) == large_facet_expected_f(12).f02);
  CHECK(toric_hg(lat, true).h == large_facet_expected_h(12));
  CHECK(is_order_multiplicial(lat));
  CHECK(is_weakly_multiplicial(lat));
}

TEST_CASE("the intermediate pyramid for q = 10 is weakly but not order multiplicial") {
  // pyramid, apex 3, over the 3-multiplex on the remaining labels of q = 10
  const std::vector<int> lab = large_facet_base_labels(10);
  FacetList pyr;
  pyr.dim = 4;
  pyr.vertices = lab;
  pyr.vertices.push_back(3);
  std::sort(pyr.vertices.begin(), pyr.vertices.end());
  pyr.facets.push_back(lab);
  for (const auto& facet : multiplex_facets(3, static_cast<int>(lab.size()) - 1).facets) {
    std::vector<int> f;
    for (int pos : facet) f.push_back(lab[static_cast<std::size_t>(pos)]);
    f.push_back(3);
    std::sort(f.begin(), f.end());
    pyr.facets.push_back(std::move(f));
  }
  const FaceLattice lat = FaceLattice::build(pyr);
  CHECK(eulerian_check(lat));
  CHECK(is_weakly_multiplicial(lat));
  // the facet {2,3,4,7,8} is a square pyramid whose apex 3 sits at position
  // 1 of the label order, not in the middle
  CHECK(!is_order_multiplicial(lat));
}
