#include <random>
#include <vector>

#include "doctest.h"

#include "polymux/errors.hpp"
#include "polymux/lattice.hpp"
#include "polymux/multiplex.hpp"
#include "polymux/multiplicial.hpp"
#include "polymux/ordinary.hpp"

using namespace polymux;

namespace {

// vertex v = x + 2y + 4z + 8w
FacetList cube4() {
  FacetList p;
  p.dim = 4;
  for (int v = 0; v < 16; ++v) p.vertices.push_back(v);
  for (int axis = 0; axis < 4; ++axis)
    for (int side = 0; side < 2; ++side) {
      std::vector<int> f;
      for (int v = 0; v < 16; ++v)
        if (((v >> axis) & 1) == side) f.push_back(v);
      p.facets.push_back(std::move(f));
    }
  return p;
}

}  // namespace

TEST_CASE("Gale evenness") {
  const std::vector<int> V = {0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(is_gale_subset(V, {0, 1, 4, 5}));      // two blocks, interior block even
  CHECK(is_gale_subset(V, {2, 3, 6, 7}));      // end blocks are unconstrained
  CHECK(!is_gale_subset(V, {0, 2, 3, 4}));     // odd block between 1 and 5
  CHECK(is_gale_subset(V, {}));
  CHECK(is_gale_subset(V, {0, 1, 2, 3, 4, 5, 6, 7}));

  // cyclic polytopes are Gale by construction
  CHECK(is_gale_polytope(cyclic_facets(4, 8)));
  CHECK(is_gale_polytope(cyclic_facets(5, 9)));

  // among multiplexes, the odd-dimensional ones are Gale, the even ones not
  CHECK(is_gale_polytope(multiplex_facets(5, 7)));
  CHECK(is_gale_polytope(multiplex_facets(3, 6)));
  CHECK(!is_gale_polytope(multiplex_facets(4, 6)));
}

TEST_CASE("multiplexes are order-multiplicial, cubes are not even weakly") {
  CHECK(is_order_multiplicial(multiplex_facets(4, 7)));
  CHECK(is_order_multiplicial(multiplex_facets(3, 8)));
  CHECK(is_order_multiplicial(FaceLattice::build(multiplex_facets(5, 7))));

  // cyclic polytopes are simplicial, hence multiplicial in any order
  CHECK(is_order_multiplicial(cyclic_facets(4, 8)));

  const FaceLattice c4 = FaceLattice::build(cube4());
  CHECK(!is_order_multiplicial(c4));
  CHECK(!is_weakly_multiplicial(c4));

  // order sensitivity: a square pyramid whose base is the 4-cycle 0-1-2-3
  // in label order fails (the base quad needs its diagonals at the outer
  // label positions), while the order-free weak test still passes
  const FacetList bad_pyr{
      3, {0, 1, 2, 3, 4}, {{0, 1, 2, 3}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}}};
  CHECK(!is_order_multiplicial(bad_pyr));
  CHECK(is_weakly_multiplicial(FaceLattice::build(bad_pyr)));
}

TEST_CASE("flag coefficients against the multiplex closed form") {
  const FlagCoefficients simple = flag_coefficients({2});
  CHECK(simple.a == 1);
  CHECK(simple.b == 0);

  const FlagCoefficients vt = flag_coefficients({0, 3});
  CHECK(vt.a == 0);
  CHECK(vt.b == 1);

  const FlagCoefficients deg = flag_coefficients({0, 1});
  CHECK(deg.a == 2);
  CHECK(deg.b == 0);

  const FlagCoefficients mid = flag_coefficients({1, 3});
  CHECK(mid.a == -2);
  CHECK(mid.b == 2);

  // a f_t + b f_{0,t} reproduces every flag count of a multiplex
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = std::uniform_int_distribution<int>(2, 7)(rng);
    const int n = std::uniform_int_distribution<int>(d, d + 9)(rng);
    const unsigned mask = std::uniform_int_distribution<unsigned>(0, (1u << d) - 1)(rng);
    std::vector<int> S;
    for (int i = 0; i < d; ++i)
      if (mask & (1u << i)) S.push_back(i);
    if (S.empty()) continue;
    const int t = S.back();
    const Rational f_t(multiplex_f(d, n, t));
    const Rational f_0t(
        multiplex_flag(d, n, t == 0 ? std::vector<int>{0} : std::vector<int>{0, t}));
    CHECK(flag_from_face_data(S, f_t, f_0t) == Rational(multiplex_flag(d, n, S)));
  }
}

TEST_CASE("reduction table rows") {
  const ReductionTable t4(4);
  CHECK(t4.dim() == 4);
  // f_{0,2} = -2 f_0 + 2 f_1 + 2 f_2 on multiplicial 4-polytopes
  CHECK(t4.row(0b00101u) ==
        std::vector<Rational>{Rational(0), Rational(-2), Rational(2), Rational(2)});
  // the empty set row is the constant 1
  CHECK(t4.row(0u) == std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0)});
  // basis rows are coordinate projections
  CHECK(t4.row(0b00010u) ==
        std::vector<Rational>{Rational(0), Rational(0), Rational(1), Rational(0)});

  const ReductionTable t5(5);
  CHECK(t5.row(0b00101u) == std::vector<Rational>{Rational(-10), Rational(5), Rational(-3),
                                                  Rational(5), Rational(-1)});

  CHECK_THROWS_AS(ReductionTable(1), BadParams);
  CHECK_THROWS_AS(ReductionTable(21), BadParams);
}

TEST_CASE("reduction rows evaluate correctly on multiplex and cyclic polytopes") {
  for (const auto& [d, n] : {std::pair{3, 6}, {4, 6}, {4, 9}, {5, 7}, {6, 9}}) {
    const ReductionTable table(d);
    const FlagVector fv = multiplex_flag_vector(d, n);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      Rational acc = table.row(mask)[0];
      for (int i = 0; i <= d - 2; ++i)
        acc += table.row(mask)[static_cast<std::size_t>(i) + 1] * Rational(multiplex_f(d, n, i));
      CHECK(acc == Rational(fv.at_mask(mask)));
    }
  }
}

TEST_CASE("full flag reconstruction from the f-vector") {
  // multiplex: closed form on both sides
  CHECK(full_flag_from_f(4, {Integer(7), Integer(16), Integer(16), Integer(7)}) ==
        multiplex_flag_vector(4, 6));

  // simplicial instance: cyclic 4-polytope with 8 vertices
  const FaceLattice c = FaceLattice::build(cyclic_facets(4, 8));
  CHECK(full_flag_from_f(4, c.f_vector()) == flag_vector(c));

  // malformed input: wrong length, or counts violating the Euler relation
  CHECK_THROWS_AS(full_flag_from_f(4, {Integer(7), Integer(16), Integer(16)}), BadParams);
  CHECK_THROWS_AS(full_flag_from_f(4, {Integer(7), Integer(16), Integer(16), Integer(8)}),
                  NonIntegral);
}

TEST_CASE("span rank of structured families") {
  // multiplex flag vectors move along a line as n grows: rank 2
  std::vector<FlagVector> line;
  for (int n = 4; n <= 10; ++n) line.push_back(multiplex_flag_vector(4, n));
  CHECK(span_rank(line) == 2);

  // a single vector has rank 1; the ordinary sweep reaches the dimension
  CHECK(span_rank({multiplex_flag_vector(4, 6)}) == 1);
  std::vector<FlagVector> ordinary;
  for (int k = 5; k <= 11; ++k)
    for (int n = k; n <= k + 6; ++n) ordinary.push_back(ordinary_flag_vector({5, k, n}));
  CHECK(span_rank(ordinary) == 5);

  CHECK_THROWS_AS(span_rank({multiplex_flag_vector(4, 6), multiplex_flag_vector(3, 6)}),
                  BadParams);
}
