#include "polymux/multiplex.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "polymux/errors.hpp"

namespace polymux {

namespace {

void validate_params(int d, int n) {
  if (d < 2) throw BadParams("multiplex dimension must be at least 2");
  if (n < d) throw BadParams("multiplex needs n >= d");
  if (n > 62) throw BadParams("multiplex vertex count exceeds capacity");
}

// Facet vertex positions of M^{d,n}, one sorted set per facet.
std::vector<std::vector<int>> facet_positions(int d, int n) {
  std::vector<std::vector<int>> facets;
  facets.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    std::set<int> f;
    for (int j = i - d + 1; j <= i + d - 1; ++j) {
      if (j == i) continue;
      f.insert(std::clamp(j, 0, n));
    }
    facets.emplace_back(f.begin(), f.end());
  }
  return facets;
}

}  // namespace

FacetList multiplex_facets(int d, int n) {
  validate_params(d, n);
  FacetList p;
  p.dim = d;
  p.vertices.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) p.vertices[static_cast<std::size_t>(i)] = i;
  p.facets = facet_positions(d, n);
  return p;
}

Integer multiplex_f(int d, int n, int i) {
  validate_params(d, n);
  return binomial(d + 1, i + 1) + Integer(n - d) * binomial(d - 1, i);
}

Integer multiplex_flag(int d, int n, const std::vector<int>& S) {
  validate_params(d, n);
  for (std::size_t j = 0; j < S.size(); ++j) {
    if (S[j] < 0 || S[j] >= d) throw BadParams("flag dimension out of range");
    if (j > 0 && S[j] <= S[j - 1]) throw BadParams("flag set must be strictly increasing");
  }
  std::vector<long long> parts;
  int prev = -1;
  for (int s : S) {
    parts.push_back(s - prev);
    prev = s;
  }
  parts.push_back(d - prev);
  Integer multi = multinomial(d + 1, parts);

  Integer weighted = 0;
  for (std::size_t j = 0; j < S.size(); ++j) {
    long long sj = S[j];
    long long snext = j + 1 < S.size() ? S[j + 1] : d;
    weighted += Integer(sj + 1) * Integer(snext - sj) * Integer(snext - 1);
  }
  Rational bracket = 1 + Rational(Integer(n - d) * weighted,
                                  Integer(d + 1) * Integer(d) * Integer(d - 1));
  return to_integer(Rational(multi) * bracket);
}

FlagVector multiplex_flag_vector(int d, int n) {
  validate_params(d, n);
  FlagVector fv(d);
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> S;
    for (int i = 0; i < d; ++i)
      if (mask & (1u << i)) S.push_back(i);
    fv.at_mask(mask) = multiplex_flag(d, n, S);
  }
  return fv;
}

IntPolynomial multiplex_g(int d, int n) {
  validate_params(d, n);
  return IntPolynomial(std::vector<Integer>{1, n - d});
}

std::optional<MultiplexParams> is_order_multiplex(
    const std::vector<int>& vertices, const std::vector<std::vector<int>>& facets) {
  if (vertices.empty()) throw EmptyInput("no vertices");
  std::unordered_map<int, int> position;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!position.emplace(vertices[i], static_cast<int>(i)).second)
      throw BadParams("duplicate vertex label");

  const int n = static_cast<int>(vertices.size()) - 1;
  if (n < 2 || n > 62) return std::nullopt;
  if (facets.size() != vertices.size()) return std::nullopt;

  std::set<std::vector<int>> given;
  for (const auto& facet : facets) {
    std::vector<int> pos;
    for (int label : facet) {
      auto it = position.find(label);
      if (it == position.end()) throw UnknownVertex("facet uses unknown vertex");
      pos.push_back(it->second);
    }
    std::sort(pos.begin(), pos.end());
    given.insert(std::move(pos));
  }
  if (given.size() != vertices.size()) return std::nullopt;

  for (int d = 2; d <= n; ++d) {
    auto family = facet_positions(d, n);
    std::set<std::vector<int>> expected(family.begin(), family.end());
    if (expected == given) return MultiplexParams{d, n};
  }
  return std::nullopt;
}

}  // namespace polymux
