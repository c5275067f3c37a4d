#include "polymux/toric.hpp"

#include <map>
#include <string>
#include <utility>

#include "polymux/errors.hpp"

namespace polymux {

namespace {

// The h-polynomial of a face stores h_m as the coefficient of t^(dim - m);
// g keeps the running differences h_m - h_{m-1} up to the middle degree.
IntPolynomial g_from_h(const IntPolynomial& h, int dim) {
  std::vector<Integer> g(static_cast<std::size_t>(dim / 2) + 1);
  Integer prev = 0;
  for (int m = 0; m <= dim / 2; ++m) {
    const Integer& hm = h.coefficient(dim - m);
    g[static_cast<std::size_t>(m)] = hm - prev;
    prev = hm;
  }
  return IntPolynomial(std::move(g));
}

HVector h_vector_of(const IntPolynomial& h, int dim) {
  HVector out(static_cast<std::size_t>(dim) + 1);
  for (int i = 0; i <= dim; ++i)
    out[static_cast<std::size_t>(i)] = h.coefficient(dim - i);
  return out;
}

void require_palindromic(const HVector& h) {
  for (std::size_t i = 0, j = h.size() - 1; i < j; ++i, --j)
    if (h[i] != h[j])
      throw AsymmetricResult("h_" + std::to_string(i) + " = " + to_string(h[i]) +
                             " differs from h_" + std::to_string(j) + " = " + to_string(h[j]));
}

}  // namespace

ToricHG toric_hg(const FaceLattice& lat, bool face_classes_by_size) {
  if (!eulerian_check(lat)) throw NotEulerian("face lattice is not Eulerian");

  const int d = lat.dim();
  const std::size_t n = lat.size();
  std::vector<IntPolynomial> g(n);
  g[0] = IntPolynomial::constant(1);  // the empty face

  std::map<std::pair<int, int>, IntPolynomial> classes;
  IntPolynomial top_h;
  for (std::size_t i = 1; i < n; ++i) {
    const int dim_f = lat.rank_of(i);
    const bool is_top = i + 1 == n;
    const std::pair<int, int> key{dim_f, popcount(lat.face(i))};
    if (face_classes_by_size && !is_top) {
      auto hit = classes.find(key);
      if (hit != classes.end()) {
        g[i] = hit->second;
        continue;
      }
    }

    // Faces are sorted by rank and a strict subface has strictly smaller
    // rank, so everything below face i precedes it in the array.
    IntPolynomial h;
    for (std::size_t j = 0; j < i; ++j)
      if (subset_of(lat.face(j), lat.face(i)))
        h = h + g[j] * IntPolynomial::t_minus_one_pow(dim_f - 1 - lat.rank_of(j));
    if (h.degree() > dim_f)
      throw AsymmetricResult("h-polynomial degree exceeds the face dimension");

    if (is_top) {
      top_h = h;
    } else {
      g[i] = g_from_h(h, dim_f);
      if (face_classes_by_size) classes.emplace(key, g[i]);
    }
  }

  ToricHG out;
  out.h = h_vector_of(top_h, d);
  require_palindromic(out.h);
  const IntPolynomial gp = g_from_h(top_h, d);
  out.g.resize(static_cast<std::size_t>(d / 2) + 1);
  for (int m = 0; m <= d / 2; ++m) out.g[static_cast<std::size_t>(m)] = gp.coefficient(m);
  return out;
}

HVector toric_h_multiplicial(int d, const std::vector<Integer>& f,
                             const std::vector<Integer>& f0) {
  if (d < 1) throw BadParams("dimension must be positive");
  if (f.size() != static_cast<std::size_t>(d) || f0.size() != static_cast<std::size_t>(d))
    throw BadParams("need face counts f_0..f_{d-1} and incidences f_{0,1}..f_{0,d-1}");

  IntPolynomial h =
      IntPolynomial::t_minus_one_pow(d) + IntPolynomial::t_minus_one_pow(d - 1) * f[0];
  for (int i = 1; i <= d - 1; ++i) {
    const IntPolynomial base = IntPolynomial::t_minus_one_pow(d - 1 - i);
    const std::size_t ui = static_cast<std::size_t>(i);
    h = h + base * f[ui];
    h = h + base.shifted(1) * (f0[ui] - (i + 1) * f[ui]);
  }
  HVector out = h_vector_of(h, d);
  require_palindromic(out);
  return out;
}

Integer ordinary_h(const OrdinaryParams& p, int i) {
  validate(p);
  if (i < 0 || i > p.d) throw BadParams("h-vector index out of range");
  const int m = (p.d - 1) / 2;
  if (i > m) i = p.d - i;
  return binomial(p.k - p.d + i, i) + (p.n - p.k) * binomial(p.k - p.d + i - 1, i - 1);
}

HVector ordinary_h_vector(const OrdinaryParams& p) {
  HVector h(static_cast<std::size_t>(p.d) + 1);
  for (int i = 0; i <= p.d; ++i) h[static_cast<std::size_t>(i)] = ordinary_h(p, i);
  return h;
}

IntPolynomial A_polynomial(int d, int k) {
  validate(OrdinaryParams{d, k, k});
  IntPolynomial a;
  for (int i = 0; i <= d - 1; ++i) {
    const IntPolynomial base = IntPolynomial::t_minus_one_pow(d - 1 - i);
    a = a + base * ordinary_f_gain(d, k, i);
    if (i >= 1)
      a = a + base.shifted(1) * (cyclic_f(d - 1, k - 1, i - 1) - ordinary_alpha(d, k, i));
  }
  return a;
}

bool A_identity_check(int d, int k) {
  const IntPolynomial a = A_polynomial(d, k);
  const int m = (d - 1) / 2;
  for (int j = m + 1; j <= d - 1; ++j)
    if (a.coefficient(j) != binomial(k - j - 1, d - j - 1)) return false;
  return true;
}

bool g_shift_check(int d, int k, int n) {
  const OrdinaryParams p{d, k, n};
  validate(p);
  if (k < d + 1) throw BadParams("the shifted polytope needs k >= d + 1");
  const OrdinaryParams shifted{d, k - 1, n - 1};
  Integer prev = 0;
  for (int i = 0; i <= (d - 1) / 2; ++i) {
    const Integer hi = ordinary_h(p, i);
    if (hi - prev != ordinary_h(shifted, i)) return false;
    prev = hi;
  }
  return true;
}

}  // namespace polymux
