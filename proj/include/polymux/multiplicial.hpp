#ifndef POLYMUX_MULTIPLICIAL_HPP
#define POLYMUX_MULTIPLICIAL_HPP

#include <vector>

#include "polymux/exact.hpp"
#include "polymux/lattice.hpp"

namespace polymux {

/**
 * Gale evenness: Y is a Gale subset of the ordered vertex list V when
 * between any two elements of V \ Y there is an even number of elements
 * of Y. Checking consecutive elements of V \ Y suffices.
 */
bool is_gale_subset(const std::vector<int>& ordered_vertices, const std::vector<int>& subset);

/// Every facet is a Gale subset of the polytope's vertex order.
bool is_gale_polytope(const FacetList& p);

/**
 * Order-multiplicial: every proper face of the lattice, carrying the vertex
 * order induced from the polytope, has exactly the multiplex facet family
 * in that order. Faces of dimension at most 1 pass trivially.
 */
bool is_order_multiplicial(const FaceLattice& lat);
bool is_order_multiplicial(const FacetList& p);

/**
 * Weakly multiplicial: every proper face's lower interval is isomorphic,
 * as a lattice, to the face lattice of some multiplex of the same
 * dimension and vertex count. No vertex order is involved.
 */
bool is_weakly_multiplicial(const FaceLattice& lat);

/**
 * Coefficients (a, b) with f_S = a f_t + b f_{0,t} on any multiplicial
 * polytope, where t = max S. For S = {t} this is (1, 0); for S = {0,1}
 * the closed form degenerates to 0/0 and the value is the trivial (2, 0).
 * Otherwise, with r = |S| and W = sum_{j<r} (s_j+1)(s_{j+1}-s_j)(s_{j+1}-1):
 *   a = (t+1; s_1+1, s_2-s_1, ..., s_r-s_{r-1}) * (1 - W/(t(t-1)))
 *   b = (t+1; ...) * W/((t+1)t(t-1)).
 */
struct FlagCoefficients {
  Rational a;
  Rational b;
};
FlagCoefficients flag_coefficients(const std::vector<int>& S);

/// a f_t + b f_{0,t} for the given S.
Rational flag_from_face_data(const std::vector<int>& S, const Rational& f_t,
                             const Rational& f_0t);

/**
 * For each S within {0..d-1}, the expression of f_S as an affine combination
 * of the basis (1, f_0, ..., f_{d-2}), valid on every multiplicial
 * d-polytope. Built by eliminating f_{d-1} through the Euler relation and
 * the flag counts f_{0,t} through downward induction on t, each step using
 * f_{0,t} = f_{t-1,t} (faces are multiplexes, which have as many vertices
 * as facets) and the Dehn-Sommerville relation at level t.
 */
class ReductionTable {
 public:
  explicit ReductionTable(int d);

  int dim() const { return d_; }
  /// Row for the subset bitmask: [constant, coeff of f_0, ..., coeff of f_{d-2}].
  const std::vector<Rational>& row(unsigned mask) const;

 private:
  int d_;
  std::vector<std::vector<Rational>> rows_;
};

inline ReductionTable reduction_table(int d) { return ReductionTable(d); }

/**
 * Every flag count of a multiplicial d-polytope from its f-vector alone.
 * Requires f of length d satisfying the Euler relation; every produced
 * count is checked to be a nonnegative integer (NonIntegral otherwise).
 */
FlagVector full_flag_from_f(int d, const std::vector<Integer>& f);

/// Rank of the linear span of the given flag vectors (all of one dimension).
std::size_t span_rank(const std::vector<FlagVector>& flags);

}  // namespace polymux

#endif
