#ifndef POLYMUX_ORDINARY_HPP
#define POLYMUX_ORDINARY_HPP

#include <vector>

#include "polymux/exact.hpp"
#include "polymux/lattice.hpp"

namespace polymux {

/**
 * Parameters of an ordinary polytope P^{d,k,n}: odd dimension d >= 5,
 * characteristic k and vertex count n+1 with d <= k <= n. The boundary
 * cases are the multiplex (k = d) and the cyclic polytope (k = n).
 */
struct OrdinaryParams {
  int d = 0;
  int k = 0;
  int n = 0;
};

/// Throws BadParams unless d is odd, d >= 5, and d <= k <= n.
void validate(const OrdinaryParams& p);

/**
 * Block arrangement count used by the incidence formulas:
 * C(u-t,t) C(s-u+t,u-t) + C(u-1-t,t) C(s-u+t,u-1-t).
 */
Integer paired_block_count(int s, int t, int u);

/**
 * alpha_i(d,k): i-face count correction attached to each vertex beyond the
 * cyclic part. General sum over j of 2 N(k-1,j,i) - N(k-2,j,i) for
 * i-m <= j <= i/2; collapses to C(k-1,i) + C(k-2,i-1) when i <= m, m = (d-1)/2.
 */
Integer ordinary_alpha(int d, int k, int i);
/// The unsimplified sum, exposed so the two branches can be cross-checked.
Integer ordinary_alpha_sum(int d, int k, int i);

/**
 * c_i(d,k): the number of i-faces gained per vertex beyond the cyclic part,
 * sum over 0 <= j <= m-1 of C(m+1,i-j) C(k-m-2,j); equals C(k-1,i) for
 * i <= m-1.
 */
Integer ordinary_f_gain(int d, int k, int i);
Integer ordinary_f_gain_sum(int d, int k, int i);

/**
 * f_i of the cyclic d-polytope with k+1 vertices, valid for every d >= 2
 * (m = floor(d/2); the correction term appears for even d only):
 * sum_j [C(j,d-1-i) + C(d-j,d-1-i)] C(k-d+j,j) - [d even] C(m,2m-1-i) C(k-m,m).
 * Equals C(k+1,i+1) for i <= m-1.
 */
Integer cyclic_f(int d, int k, int i);
Integer cyclic_f_sum(int d, int k, int i);

/// f_i(P^{d,k,n}) = cyclic_f(d,k,i) + (n-k) c_i(d,k).
Integer ordinary_f(const OrdinaryParams& p, int i);

/**
 * Vertex-face incidences, 1 <= i <= d-1:
 * f_{0,i} = (i+1) phi_i(d,k)
 *         + (n-k) [(i+1) c_i(d,k) + phi_{i-1}(d-1,k-1) - alpha_i(d,k)].
 */
Integer ordinary_f0(const OrdinaryParams& p, int i);

/**
 * The full flag vector, assembled from f and f_{0,t} through the
 * multiplicial flag coefficients. Integrality of every count is asserted.
 */
FlagVector ordinary_flag_vector(const OrdinaryParams& p);

/**
 * Facets of the cyclic d-polytope with N vertices by the Gale evenness
 * criterion: the d-subsets Y of the ordered vertices such that between any
 * two non-members of Y lies an even number of members.
 */
FacetList cyclic_facets(int d, int N);

}  // namespace polymux

#endif
