#ifndef POLYMUX_MULTIPLEX_HPP
#define POLYMUX_MULTIPLEX_HPP

#include <optional>
#include <vector>

#include "polymux/exact.hpp"
#include "polymux/lattice.hpp"

namespace polymux {

/// Parameters of a multiplex M^{d,n}: dimension d >= 2 and n+1 vertices, n >= d.
struct MultiplexParams {
  int d = 0;
  int n = 0;
};

/**
 * Facets of the multiplex M^{d,n} on ordered vertices x_0..x_n:
 * F_i = {x_{i-d+1}, ..., x_{i-1}, x_{i+1}, ..., x_{i+d-1}} for 0 <= i <= n,
 * reading x_j as x_0 for j < 0 and as x_n for j > n, duplicates collapsed.
 * For n = d this yields the d-simplex.
 */
FacetList multiplex_facets(int d, int n);

/// Closed form f_i(M^{d,n}) = C(d+1,i+1) + (n-d) C(d-1,i).
Integer multiplex_f(int d, int n, int i);

/**
 * Closed-form flag count f_S(M^{d,n}) for S = {s_1 < ... < s_r} within
 * {0..d-1}: the multinomial (d+1; s_1+1, s_2-s_1, ..., d-s_r) scaled by
 * 1 + (n-d)/((d+1)d(d-1)) * sum_j (s_j+1)(s_{j+1}-s_j)(s_{j+1}-1)
 * with s_{r+1} = d. The value is always integral; that is asserted.
 */
Integer multiplex_flag(int d, int n, const std::vector<int>& S);

/// All 2^d closed-form flag counts at once.
FlagVector multiplex_flag_vector(int d, int n);

/// Toric g-polynomial g(M^{d,n}, t) = 1 + (n-d) t.
IntPolynomial multiplex_g(int d, int n);

/**
 * Recognizer: does the facet family, relabeled through the given vertex
 * order, equal the multiplex facet family for some d? Returns the matched
 * parameters, or nothing. The vertex order matters; a square pyramid
 * matches only when its apex is the middle vertex of the order.
 */
std::optional<MultiplexParams> is_order_multiplex(const std::vector<int>& vertices,
                                                  const std::vector<std::vector<int>>& facets);

}  // namespace polymux

#endif
