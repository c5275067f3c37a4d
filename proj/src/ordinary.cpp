#include "polymux/ordinary.hpp"

#include <algorithm>

#include "polymux/errors.hpp"
#include "polymux/multiplicial.hpp"

namespace polymux {

void validate(const OrdinaryParams& p) {
  if (p.d < 5 || p.d % 2 == 0) throw BadParams("ordinary polytope dimension must be odd, >= 5");
  if (p.k < p.d || p.n < p.k) throw BadParams("ordinary polytope needs d <= k <= n");
}

Integer paired_block_count(int s, int t, int u) {
  return binomial(u - t, t) * binomial(s - u + t, u - t) +
         binomial(u - 1 - t, t) * binomial(s - u + t, u - 1 - t);
}

Integer ordinary_alpha_sum(int d, int k, int i) {
  const int m = (d - 1) / 2;
  Integer total = 0;
  for (int j = std::max(0, i - m); j <= i / 2; ++j)
    total += 2 * paired_block_count(k - 1, j, i) - paired_block_count(k - 2, j, i);
  return total;
}

Integer ordinary_alpha(int d, int k, int i) {
  const int m = (d - 1) / 2;
  if (i <= m) return binomial(k - 1, i) + binomial(k - 2, i - 1);
  return ordinary_alpha_sum(d, k, i);
}

Integer ordinary_f_gain_sum(int d, int k, int i) {
  const int m = (d - 1) / 2;
  Integer total = 0;
  for (int j = 0; j <= m - 1; ++j) total += binomial(m + 1, i - j) * binomial(k - m - 2, j);
  return total;
}

Integer ordinary_f_gain(int d, int k, int i) {
  const int m = (d - 1) / 2;
  if (i <= m - 1) return binomial(k - 1, i);
  return ordinary_f_gain_sum(d, k, i);
}

Integer cyclic_f_sum(int d, int k, int i) {
  const int m = d / 2;
  Integer total = 0;
  for (int j = 0; j <= m; ++j)
    total += (binomial(j, d - 1 - i) + binomial(d - j, d - 1 - i)) * binomial(k - d + j, j);
  if (d % 2 == 0) total -= binomial(m, 2 * m - 1 - i) * binomial(k - m, m);
  return total;
}

Integer cyclic_f(int d, int k, int i) {
  if (d < 2 || k < d) throw BadParams("cyclic polytope needs k >= d >= 2");
  const int m = d / 2;
  if (i <= m - 1) return binomial(k + 1, i + 1);
  return cyclic_f_sum(d, k, i);
}

Integer ordinary_f(const OrdinaryParams& p, int i) {
  validate(p);
  if (i < 0 || i > p.d - 1) throw BadParams("face dimension out of range");
  return cyclic_f(p.d, p.k, i) + Integer(p.n - p.k) * ordinary_f_gain(p.d, p.k, i);
}

Integer ordinary_f0(const OrdinaryParams& p, int i) {
  validate(p);
  if (i < 1 || i > p.d - 1) throw BadParams("face dimension out of range");
  Integer base = Integer(i + 1) * cyclic_f(p.d, p.k, i);
  Integer gain = Integer(i + 1) * ordinary_f_gain(p.d, p.k, i) +
                 cyclic_f(p.d - 1, p.k - 1, i - 1) - ordinary_alpha(p.d, p.k, i);
  return base + Integer(p.n - p.k) * gain;
}

FlagVector ordinary_flag_vector(const OrdinaryParams& p) {
  validate(p);
  FlagVector fv(p.d);
  for (unsigned mask = 0; mask < (1u << p.d); ++mask) {
    std::vector<int> S;
    for (int i = 0; i < p.d; ++i)
      if (mask & (1u << i)) S.push_back(i);
    if (S.empty()) {
      fv.at_mask(mask) = 1;
      continue;
    }
    const int t = S.back();
    Rational f_t(ordinary_f(p, t));
    Rational f_0t = t >= 1 ? Rational(ordinary_f0(p, t)) : f_t;
    fv.at_mask(mask) = to_integer(flag_from_face_data(S, f_t, f_0t));
  }
  return fv;
}

FacetList cyclic_facets(int d, int N) {
  if (d < 2) throw BadParams("cyclic polytope dimension must be at least 2");
  if (N < d + 1) throw BadParams("cyclic polytope needs at least d+1 vertices");
  if (N > 30) throw BadParams("cyclic facet enumeration capped at 30 vertices");
  FacetList p;
  p.dim = d;
  p.vertices.resize(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) p.vertices[static_cast<std::size_t>(i)] = i;

  std::vector<int> pick(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    if (is_gale_subset(p.vertices, pick)) p.facets.push_back(pick);
    int j = d - 1;
    while (j >= 0 && pick[static_cast<std::size_t>(j)] == N - d + j) --j;
    if (j < 0) break;
    ++pick[static_cast<std::size_t>(j)];
    for (int l = j + 1; l < d; ++l)
      pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
  }
  return p;
}

}  // namespace polymux
