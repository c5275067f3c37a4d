#include "polymux/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace polymux {

Poset dual(const Poset& p) {
  Poset d;
  int max_rank = 0;
  for (int r : p.rank) max_rank = std::max(max_rank, r);
  d.rank.resize(p.size());
  d.up = p.down;
  d.down = p.up;
  for (std::size_t i = 0; i < p.size(); ++i) d.rank[i] = max_rank - p.rank[i];
  return d;
}

namespace {

// One round of color refinement. Colors start as ranks; each round a color
// becomes (old color, sorted down-neighbor colors, sorted up-neighbor colors)
// canonicalized to a small integer shared across both posets.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Poset& a, const Poset& b) {
  std::vector<int> ca(a.rank.begin(), a.rank.end());
  std::vector<int> cb(b.rank.begin(), b.rank.end());
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<int>, int> dict;
    auto signature = [](const Poset& p, const std::vector<int>& c, std::size_t i) {
      std::vector<int> sig{c[i]};
      std::vector<int> nbr;
      for (int j : p.down[i]) nbr.push_back(c[static_cast<std::size_t>(j)]);
      std::sort(nbr.begin(), nbr.end());
      sig.push_back(-1);
      sig.insert(sig.end(), nbr.begin(), nbr.end());
      nbr.clear();
      for (int j : p.up[i]) nbr.push_back(c[static_cast<std::size_t>(j)]);
      std::sort(nbr.begin(), nbr.end());
      sig.push_back(-2);
      sig.insert(sig.end(), nbr.begin(), nbr.end());
      return sig;
    };
    std::vector<int> na(a.size()), nb(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto [it, ignored] = dict.try_emplace(signature(a, ca, i), static_cast<int>(dict.size()));
      na[i] = it->second;
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto [it, ignored] = dict.try_emplace(signature(b, cb, i), static_cast<int>(dict.size()));
      nb[i] = it->second;
    }
    if (dict.size() == classes) return {na, nb};
    classes = dict.size();
    ca = std::move(na);
    cb = std::move(nb);
  }
}

struct IsoSearch {
  const Poset& a;
  const Poset& b;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<int> map_ab;
  std::vector<int> map_ba;
  std::vector<std::vector<int>> candidates_by_color;
  std::vector<std::size_t> order;

  bool consistent(std::size_t x, std::size_t y) const {
    // All already-mapped covers of x must map exactly onto covers of y.
    for (int c : a.down[x]) {
      int m = map_ab[static_cast<std::size_t>(c)];
      if (m < 0) continue;
      if (std::find(b.down[y].begin(), b.down[y].end(), m) == b.down[y].end()) return false;
    }
    for (int c : a.up[x]) {
      int m = map_ab[static_cast<std::size_t>(c)];
      if (m < 0) continue;
      if (std::find(b.up[y].begin(), b.up[y].end(), m) == b.up[y].end()) return false;
    }
    return true;
  }

  bool assign(std::size_t pos) {
    if (pos == order.size()) return true;
    std::size_t x = order[pos];
    for (int y : candidates_by_color[static_cast<std::size_t>(ca[x])]) {
      if (map_ba[static_cast<std::size_t>(y)] >= 0) continue;
      if (!consistent(x, static_cast<std::size_t>(y))) continue;
      map_ab[x] = y;
      map_ba[static_cast<std::size_t>(y)] = static_cast<int>(x);
      if (assign(pos + 1)) return true;
      map_ab[x] = -1;
      map_ba[static_cast<std::size_t>(y)] = -1;
    }
    return false;
  }
};

}  // namespace

bool poset_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  auto [ca, cb] = refine_colors(a, b);
  std::map<int, std::pair<int, int>> histogram;
  for (int c : ca) histogram[c].first++;
  for (int c : cb) histogram[c].second++;
  for (const auto& [ignored, counts] : histogram)
    if (counts.first != counts.second) return false;

  int ncolors = 0;
  for (int c : ca) ncolors = std::max(ncolors, c + 1);
  for (int c : cb) ncolors = std::max(ncolors, c + 1);

  IsoSearch search{a, b, ca, cb, {}, {}, {}, {}};
  search.map_ab.assign(a.size(), -1);
  search.map_ba.assign(b.size(), -1);
  search.candidates_by_color.resize(static_cast<std::size_t>(ncolors));
  for (std::size_t i = 0; i < b.size(); ++i)
    search.candidates_by_color[static_cast<std::size_t>(cb[i])].push_back(static_cast<int>(i));
  search.order.resize(a.size());
  std::iota(search.order.begin(), search.order.end(), 0);
  // Rank-major order keeps each element adjacent to already-mapped ones,
  // so the cover-consistency test bites early; rare colors first within rank.
  std::sort(search.order.begin(), search.order.end(), [&](std::size_t x, std::size_t y) {
    if (a.rank[x] != a.rank[y]) return a.rank[x] < a.rank[y];
    std::size_t sx = search.candidates_by_color[static_cast<std::size_t>(ca[x])].size();
    std::size_t sy = search.candidates_by_color[static_cast<std::size_t>(ca[y])].size();
    if (sx != sy) return sx < sy;
    return x < y;
  });
  return search.assign(0);
}

}  // namespace polymux
