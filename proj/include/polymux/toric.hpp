#ifndef POLYMUX_TORIC_HPP
#define POLYMUX_TORIC_HPP

#include <vector>

#include "polymux/exact.hpp"
#include "polymux/lattice.hpp"
#include "polymux/ordinary.hpp"

namespace polymux {

/// Toric h-vector h_0..h_d, encoded by h(P,t) = sum_i h_i t^(d-i).
using HVector = std::vector<Integer>;
/// Toric g-vector g_0..g_{floor(d/2)}, g_i = h_i - h_{i-1}.
using GVector = std::vector<Integer>;

struct ToricHG {
  HVector h;
  GVector g;
};

/**
 * Stanley's recursion on an Eulerian face lattice: g(empty face) = 1 and
 * h(F, t) = sum over proper faces G of F of g(G, t) (t-1)^(dim F - 1 - dim G),
 * with g truncating h differences at the middle. Throws NotEulerian when the
 * lattice fails the interval conditions and AsymmetricResult if the computed
 * h-vector is not palindromic.
 *
 * With face_classes_by_size = true, g-polynomials are cached by
 * (dimension, vertex count); valid when every proper face with equal
 * dimension and vertex count has the same g (true for multiplicial
 * polytopes, where each face is a multiplex). Defaults to off.
 */
ToricHG toric_hg(const FaceLattice& lat, bool face_classes_by_size = false);

/**
 * Closed form for multiplicial polytopes, from the f-vector and the
 * vertex-face incidences f0[i] = f_{0,i} (i = 1..d-1, with f0[0] ignored):
 * h(P,t) = (t-1)^d + f_0 (t-1)^(d-1) + sum_i f_i (t-1)^(d-1-i)
 *        + sum_i (f_{0,i} - (i+1) f_i) t (t-1)^(d-1-i).
 */
HVector toric_h_multiplicial(int d, const std::vector<Integer>& f,
                             const std::vector<Integer>& f0);

/// h_i(P^{d,k,n}) = C(k-d+i,i) + (n-k) C(k-d+i-1,i-1) for i <= (d-1)/2, symmetric above.
Integer ordinary_h(const OrdinaryParams& p, int i);
HVector ordinary_h_vector(const OrdinaryParams& p);

/**
 * The h-vector increment per vertex beyond the characteristic:
 * A(d,k)(t) = sum_i c_i(d,k) (t-1)^(d-1-i)
 *           + sum_i [phi_{i-1}(d-1,k-1) - alpha_i(d,k)] t (t-1)^(d-1-i),
 * so that h(P^{d,k,n}) = h(P^{d,k,k}) + (n-k) A(d,k).
 */
IntPolynomial A_polynomial(int d, int k);

/// Coefficient identity A_j = C(k-j-1, d-j-1) for all j above the middle.
bool A_identity_check(int d, int k);

/// g_i(P^{d,k,n}) = h_i(P^{d,k-1,n-1}) for all i, requires k >= d+1.
bool g_shift_check(int d, int k, int n);

}  // namespace polymux

#endif
