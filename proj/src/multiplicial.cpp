#include "polymux/multiplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "polymux/errors.hpp"
#include "polymux/multiplex.hpp"
#include "polymux/poset.hpp"

namespace polymux {

bool is_gale_subset(const std::vector<int>& ordered_vertices, const std::vector<int>& subset) {
  std::set<int> members(subset.begin(), subset.end());
  for (int label : subset)
    if (std::find(ordered_vertices.begin(), ordered_vertices.end(), label) ==
        ordered_vertices.end())
      throw UnknownVertex("subset uses unknown vertex");
  int run = -1;  // Y-elements seen since the previous non-member, -1 before the first
  for (int label : ordered_vertices) {
    if (members.count(label)) {
      if (run >= 0) ++run;
    } else {
      if (run > 0 && run % 2 != 0) return false;
      run = 0;
    }
  }
  return true;
}

bool is_gale_polytope(const FacetList& p) {
  if (p.facets.empty()) throw EmptyInput("no facets");
  for (const auto& facet : p.facets)
    if (!is_gale_subset(p.vertices, facet)) return false;
  return true;
}

bool is_order_multiplicial(const FaceLattice& lat) {
  for (std::size_t idx = 0; idx < lat.size(); ++idx) {
    int dim = lat.rank_of(idx);
    if (dim < 2 || dim > lat.dim() - 1) continue;
    std::vector<std::vector<int>> child_labels;
    for (int c : lat.children(idx))
      child_labels.push_back(lat.face_labels(static_cast<std::size_t>(c)));
    auto params = is_order_multiplex(lat.face_labels(idx), child_labels);
    if (!params || params->d != dim) return false;
  }
  return true;
}

bool is_order_multiplicial(const FacetList& p) {
  return is_order_multiplicial(FaceLattice::build(p));
}

bool is_weakly_multiplicial(const FaceLattice& lat) {
  std::map<std::pair<int, int>, Poset> references;
  for (std::size_t idx = 0; idx < lat.size(); ++idx) {
    int dim = lat.rank_of(idx);
    if (dim < 2 || dim > lat.dim() - 1) continue;
    int nverts = popcount(lat.face(idx));
    if (nverts - 1 < dim) return false;
    auto key = std::make_pair(dim, nverts);
    auto it = references.find(key);
    if (it == references.end())
      it = references.emplace(key, to_poset(FaceLattice::build(multiplex_facets(dim, nverts - 1))))
               .first;
    if (!poset_isomorphic(interval_poset(lat, 0, lat.face(idx)), it->second)) return false;
  }
  return true;
}

namespace {

void validate_flag_set(const std::vector<int>& S) {
  if (S.empty()) throw BadParams("flag set is empty");
  for (std::size_t j = 0; j < S.size(); ++j) {
    if (S[j] < 0) throw BadParams("flag dimension is negative");
    if (j > 0 && S[j] <= S[j - 1]) throw BadParams("flag set must be strictly increasing");
  }
}

}  // namespace

FlagCoefficients flag_coefficients(const std::vector<int>& S) {
  validate_flag_set(S);
  if (S.size() == 1) return {Rational(1), Rational(0)};
  const int t = S.back();
  if (t <= 1) {
    // S = {0,1}: every 1-face has two vertices. The generic formula reads
    // 0/0 here because every summand carries the factor (s_{j+1} - 1) = 0.
    return {Rational(2), Rational(0)};
  }
  std::vector<long long> parts;
  int prev = -1;
  for (int s : S) {
    parts.push_back(s - prev);
    prev = s;
  }
  Integer multi = multinomial(t + 1, parts);
  Integer weighted = 0;
  for (std::size_t j = 0; j + 1 < S.size(); ++j)
    weighted += Integer(S[j] + 1) * Integer(S[j + 1] - S[j]) * Integer(S[j + 1] - 1);
  Rational a = Rational(multi) * (1 - Rational(weighted, Integer(t) * Integer(t - 1)));
  Rational b = Rational(multi) *
               Rational(weighted, Integer(t + 1) * Integer(t) * Integer(t - 1));
  return {a, b};
}

Rational flag_from_face_data(const std::vector<int>& S, const Rational& f_t,
                             const Rational& f_0t) {
  auto [a, b] = flag_coefficients(S);
  return a * f_t + b * f_0t;
}

ReductionTable::ReductionTable(int d) : d_(d) {
  if (d < 2 || d > 20) throw BadParams("reduction table dimension out of range");
  const std::size_t width = static_cast<std::size_t>(d);  // columns: 1, f_0..f_{d-2}

  auto zero_row = [&] { return std::vector<Rational>(width); };
  auto axpy = [&](std::vector<Rational>& dst, const Rational& c,
                  const std::vector<Rational>& src) {
    for (std::size_t j = 0; j < width; ++j) dst[j] += c * src[j];
  };

  // f_{d-1} eliminated through the Euler relation.
  std::vector<Rational> euler_row = zero_row();
  {
    int sign = (d - 1) % 2 == 0 ? 1 : -1;
    euler_row[0] = Rational(sign * (1 - (d % 2 == 0 ? 1 : -1)));
    for (int i = 0; i <= d - 2; ++i)
      euler_row[static_cast<std::size_t>(i) + 1] =
          Rational(-sign * (i % 2 == 0 ? 1 : -1));
  }
  auto f_row = [&](int i) {
    if (i == d - 1) return euler_row;
    auto row = zero_row();
    row[static_cast<std::size_t>(i) + 1] = 1;
    return row;
  };

  // f_{0,t} rows by downward induction on t. Base: every (d-1)-face is a
  // multiplex, so it has as many vertices as facets and f_{0,d-1} = 2 f_{d-2}.
  std::vector<std::vector<Rational>> f0t(static_cast<std::size_t>(d));
  f0t[static_cast<std::size_t>(d - 1)] = zero_row();
  axpy(f0t[static_cast<std::size_t>(d - 1)], 2, f_row(d - 2));
  for (int t = d - 2; t >= 1; --t) {
    auto row = zero_row();
    axpy(row, Rational(1 - ((d - t) % 2 == 0 ? 1 : -1)), f_row(t - 1));
    for (int k = t + 1; k <= d - 1; ++k) {
      auto [a, b] = flag_coefficients({t - 1, k});
      Rational sign((k - t) % 2 == 0 ? -1 : 1);
      axpy(row, sign * a, f_row(k));
      axpy(row, sign * b, f0t[static_cast<std::size_t>(k)]);
    }
    f0t[static_cast<std::size_t>(t)] = std::move(row);
  }

  rows_.resize(std::size_t{1} << d);
  for (unsigned mask = 0; mask < rows_.size(); ++mask) {
    std::vector<int> S;
    for (int i = 0; i < d; ++i)
      if (mask & (1u << i)) S.push_back(i);
    auto row = zero_row();
    if (S.empty()) {
      row[0] = 1;
    } else if (S.size() == 1) {
      row = f_row(S[0]);
    } else {
      auto [a, b] = flag_coefficients(S);
      axpy(row, a, f_row(S.back()));
      axpy(row, b, f0t[static_cast<std::size_t>(S.back())]);
    }
    rows_[mask] = std::move(row);
  }
}

const std::vector<Rational>& ReductionTable::row(unsigned mask) const {
  if (mask >= rows_.size()) throw BadParams("flag subset out of range");
  return rows_[mask];
}

FlagVector full_flag_from_f(int d, const std::vector<Integer>& f) {
  if (static_cast<int>(f.size()) != d) throw BadParams("f-vector must have length d");
  Integer euler = 0;
  for (int i = 0; i < d; ++i)
    euler += (i % 2 == 0) ? f[static_cast<std::size_t>(i)] : -f[static_cast<std::size_t>(i)];
  if (euler != (d % 2 == 0 ? 0 : 2))
    throw NonIntegral("f-vector violates the Euler relation");

  ReductionTable table(d);
  FlagVector fv(d);
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    const auto& row = table.row(mask);
    Rational value = row[0];
    for (int i = 0; i <= d - 2; ++i)
      value += row[static_cast<std::size_t>(i) + 1] * Rational(f[static_cast<std::size_t>(i)]);
    if (!is_integral(value) || value < 0)
      throw NonIntegral("flag count for subset {" + FlagVector::subset_key(mask) +
                        "} is " + to_string(value));
    fv.at_mask(mask) = to_integer(value);
  }
  return fv;
}

std::size_t span_rank(const std::vector<FlagVector>& flags) {
  if (flags.empty()) return 0;
  const int d = flags.front().dim();
  for (const auto& fv : flags)
    if (fv.dim() != d) throw BadParams("flag vectors of mixed dimension");
  RationalMatrix m(flags.size(), std::size_t{1} << d);
  for (std::size_t r = 0; r < flags.size(); ++r)
    for (unsigned c = 0; c < (1u << d); ++c) m.at(r, c) = Rational(flags[r].at_mask(c));
  return m.rank();
}

}  // namespace polymux
