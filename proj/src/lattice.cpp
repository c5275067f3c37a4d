#include "polymux/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <set>
#include <sstream>

#include "polymux/errors.hpp"

namespace polymux {

FlagVector::FlagVector(int dim) : dim_(dim) {
  if (dim < 1 || dim > 20) throw BadParams("flag vector dimension out of range");
  counts_.assign(std::size_t{1} << dim, Integer(0));
}

Integer& FlagVector::at_mask(unsigned mask) {
  if (mask >= counts_.size()) throw BadParams("flag subset out of range");
  return counts_[mask];
}

const Integer& FlagVector::at_mask(unsigned mask) const {
  if (mask >= counts_.size()) throw BadParams("flag subset out of range");
  return counts_[mask];
}

const Integer& FlagVector::at(std::initializer_list<int> dims) const {
  unsigned mask = 0;
  for (int d : dims) {
    if (d < 0 || d >= dim_) throw BadParams("flag dimension out of range");
    mask |= 1u << d;
  }
  return counts_[mask];
}

std::string FlagVector::subset_key(unsigned mask) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; mask >> i; ++i) {
    if (!(mask & (1u << i))) continue;
    if (!first) out << ",";
    out << i;
    first = false;
  }
  return out.str();
}

namespace {

std::vector<int> mask_positions(FaceSet m) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (m & (FaceSet{1} << i)) out.push_back(i);
  return out;
}

}  // namespace

FaceLattice FaceLattice::build(const FacetList& p) {
  if (p.dim < 1) throw BadParams("dimension must be at least 1");
  if (p.vertices.empty()) throw EmptyInput("no vertices");
  if (p.vertices.size() > 64) throw BadParams("more than 64 vertices");
  if (p.facets.empty()) throw EmptyInput("no facets");

  std::unordered_map<int, int> position;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (!position.emplace(p.vertices[i], static_cast<int>(i)).second)
      throw BadParams("duplicate vertex label");
  }
  const FaceSet full = p.vertices.size() == 64 ? ~FaceSet{0}
                                               : (FaceSet{1} << p.vertices.size()) - 1;

  std::vector<FaceSet> generators;
  for (const auto& facet : p.facets) {
    if (facet.empty()) throw EmptyInput("empty facet");
    FaceSet m = 0;
    for (int label : facet) {
      auto it = position.find(label);
      if (it == position.end())
        throw UnknownVertex("facet uses unknown vertex " + std::to_string(label));
      m |= FaceSet{1} << it->second;
    }
    if (m == full) throw BadParams("facet equals the whole vertex set");
    generators.push_back(m);
  }

  // Closure under intersection: intersecting against the generator set only
  // is enough, since any intersection of facets folds one generator at a time.
  std::set<FaceSet> closed;
  std::deque<FaceSet> work;
  closed.insert(full);
  closed.insert(0);
  for (FaceSet g : generators)
    if (closed.insert(g).second) work.push_back(g);
  while (!work.empty()) {
    FaceSet m = work.front();
    work.pop_front();
    for (FaceSet g : generators) {
      FaceSet x = m & g;
      if (closed.insert(x).second) work.push_back(x);
    }
  }

  return from_masks(p.dim, p.vertices, std::vector<FaceSet>(closed.begin(), closed.end()));
}

FaceLattice FaceLattice::from_masks(int dim, std::vector<int> labels,
                                    std::vector<FaceSet> masks) {
  FaceLattice lat;
  lat.dim_ = dim;
  lat.labels_ = std::move(labels);

  // Longest-chain heights, computed in popcount order so strict subsets of a
  // face are always finished first.
  std::sort(masks.begin(), masks.end(), [](FaceSet a, FaceSet b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<int> height(masks.size(), 0);
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (masks[j] != masks[i] && subset_of(masks[j], masks[i]))
        height[i] = std::max(height[i], height[j] + 1);

  if (masks.empty() || masks.front() != 0) throw NotGraded("missing bottom element");
  FaceSet all = 0;
  for (FaceSet m : masks) all |= m;
  if (masks.back() != all) throw NotGraded("no unique top element");
  if (height.back() != dim + 1)
    throw NotGraded("top rank is " + std::to_string(height.back() - 1) +
                    ", expected " + std::to_string(dim));

  std::vector<std::size_t> order(masks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return height[a] != height[b] ? height[a] < height[b] : masks[a] < masks[b];
  });

  lat.faces_.reserve(masks.size());
  lat.ranks_.reserve(masks.size());
  for (std::size_t i : order) {
    lat.index_[masks[i]] = lat.faces_.size();
    lat.faces_.push_back(masks[i]);
    lat.ranks_.push_back(height[i] - 1);
  }

  lat.rank_begin_.assign(static_cast<std::size_t>(dim) + 3, lat.faces_.size());
  for (std::size_t i = lat.faces_.size(); i-- > 0;)
    lat.rank_begin_[static_cast<std::size_t>(lat.ranks_[i] + 1)] = i;

  // Cover relation: the maximal strict subsets of each face. Scanning
  // candidates by descending rank lets earlier picks absorb later ones.
  lat.children_.resize(lat.faces_.size());
  lat.parents_.resize(lat.faces_.size());
  for (std::size_t y = 0; y < lat.faces_.size(); ++y) {
    for (std::size_t x = y; x-- > 0;) {
      if (lat.faces_[x] == lat.faces_[y] || !subset_of(lat.faces_[x], lat.faces_[y])) continue;
      bool covered = false;
      for (int c : lat.children_[y])
        if (subset_of(lat.faces_[x], lat.faces_[static_cast<std::size_t>(c)])) {
          covered = true;
          break;
        }
      if (covered) continue;
      lat.children_[y].push_back(static_cast<int>(x));
      lat.parents_[x].push_back(static_cast<int>(y));
      if (lat.ranks_[y] != lat.ranks_[x] + 1)
        throw NotGraded("cover step from rank " + std::to_string(lat.ranks_[x]) + " to " +
                        std::to_string(lat.ranks_[y]));
    }
  }

  auto atom_span = lat.rank_range(0);
  if (atom_span.second - atom_span.first != lat.labels_.size())
    throw NotGraded("atom count differs from vertex count");
  for (std::size_t i = atom_span.first; i < atom_span.second; ++i)
    if (popcount(lat.faces_[i]) != 1) throw NotGraded("atom is not a single vertex");

  return lat;
}

std::pair<std::size_t, std::size_t> FaceLattice::rank_range(int rank) const {
  if (rank < -1 || rank > dim_) throw BadParams("rank out of range");
  auto r = static_cast<std::size_t>(rank + 1);
  return {rank_begin_[r], rank_begin_[r + 1]};
}

std::size_t FaceLattice::index_of(FaceSet f) const {
  auto it = index_.find(f);
  if (it == index_.end()) throw BadParams("not a face of the lattice");
  return it->second;
}

std::vector<int> FaceLattice::face_labels(std::size_t idx) const {
  std::vector<int> out;
  for (int pos : mask_positions(faces_[idx])) out.push_back(labels_[static_cast<std::size_t>(pos)]);
  return out;
}

std::vector<Integer> FaceLattice::f_vector() const {
  std::vector<Integer> f(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    auto span = rank_range(i);
    f[static_cast<std::size_t>(i)] = static_cast<long long>(span.second - span.first);
  }
  return f;
}

namespace {

// Chains with dimension set exactly `dims`: one pass of counting per level,
// summing over containments between consecutive levels.
Integer count_chains(const FaceLattice& lat, const std::vector<int>& dims) {
  if (dims.empty()) return 1;
  auto first = lat.rank_range(dims[0]);
  std::vector<Integer> cur(first.second - first.first, Integer(1));
  std::size_t cur_begin = first.first;
  for (std::size_t level = 1; level < dims.size(); ++level) {
    auto next = lat.rank_range(dims[level]);
    std::vector<Integer> nxt(next.second - next.first, Integer(0));
    for (std::size_t g = next.first; g < next.second; ++g)
      for (std::size_t f = cur_begin; f < cur_begin + cur.size(); ++f)
        if (subset_of(lat.face(f), lat.face(g))) nxt[g - next.first] += cur[f - cur_begin];
    cur = std::move(nxt);
    cur_begin = next.first;
  }
  Integer total = 0;
  for (const Integer& c : cur) total += c;
  return total;
}

}  // namespace

FlagVector flag_vector(const FaceLattice& lat) {
  FlagVector fv(lat.dim());
  const int nsub = 1 << lat.dim();
#pragma omp parallel for schedule(dynamic)
  for (int mask = 0; mask < nsub; ++mask) {
    std::vector<int> dims;
    for (int i = 0; i < lat.dim(); ++i)
      if (mask & (1 << i)) dims.push_back(i);
    fv.at_mask(static_cast<unsigned>(mask)) = count_chains(lat, dims);
  }
  return fv;
}

FlagVector flag_vector_reference(const FaceLattice& lat) {
  FlagVector fv(lat.dim());
  fv.at_mask(0) = 1;

  // Strict proper supersets of each proper face, by index.
  auto proper = lat.rank_range(0).first;
  auto proper_end = lat.rank_range(lat.dim() - 1).second;
  std::vector<std::vector<std::size_t>> above(lat.size());
  for (std::size_t f = proper; f < proper_end; ++f)
    for (std::size_t g = f + 1; g < proper_end; ++g)
      if (lat.face(f) != lat.face(g) && subset_of(lat.face(f), lat.face(g)))
        above[f].push_back(g);

  struct Walker {
    const FaceLattice& lat;
    const std::vector<std::vector<std::size_t>>& above;
    FlagVector& fv;
    void walk(std::size_t f, unsigned mask) {
      mask |= 1u << lat.rank_of(f);
      fv.at_mask(mask) += 1;
      for (std::size_t g : above[f]) walk(g, mask);
    }
  } walker{lat, above, fv};
  for (std::size_t f = proper; f < proper_end; ++f) walker.walk(f, 0);
  return fv;
}

bool euler_check(const FaceLattice& lat) {
  Integer sum = 0;
  auto f = lat.f_vector();
  for (int i = 0; i < lat.dim(); ++i)
    sum += (i % 2 == 0) ? f[static_cast<std::size_t>(i)] : -f[static_cast<std::size_t>(i)];
  return sum == (lat.dim() % 2 == 0 ? 0 : 2);
}

namespace {

// Moebius function of every interval with the given bottom; returns false on
// the first interval violating mu(x,y) = (-1)^(rank(y)-rank(x)).
bool moebius_from(const FaceLattice& lat, std::size_t x) {
  std::vector<std::size_t> up;
  for (std::size_t y = x; y < lat.size(); ++y)
    if (subset_of(lat.face(x), lat.face(y))) up.push_back(y);
  std::vector<Integer> mu(up.size());
  for (std::size_t yi = 0; yi < up.size(); ++yi) {
    std::size_t y = up[yi];
    if (y == x) {
      mu[yi] = 1;
      continue;
    }
    Integer acc = 0;
    for (std::size_t zi = 0; zi < yi; ++zi)
      if (subset_of(lat.face(up[zi]), lat.face(y)) && lat.face(up[zi]) != lat.face(y))
        acc += mu[zi];
    mu[yi] = -acc;
    int diff = lat.rank_of(y) - lat.rank_of(x);
    if (mu[yi] != (diff % 2 == 0 ? 1 : -1)) return false;
  }
  return true;
}

}  // namespace

bool eulerian_check(const FaceLattice& lat) {
  std::atomic<bool> ok{true};
  const auto n = static_cast<long long>(lat.size());
#pragma omp parallel for schedule(dynamic)
  for (long long x = 0; x < n; ++x) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    if (!moebius_from(lat, static_cast<std::size_t>(x))) ok.store(false, std::memory_order_relaxed);
  }
  return ok.load();
}

bool eulerian_check_reference(const FaceLattice& lat) {
  for (std::size_t x = 0; x < lat.size(); ++x) {
    std::vector<std::size_t> up;
    for (std::size_t y = x; y < lat.size(); ++y)
      if (subset_of(lat.face(x), lat.face(y))) up.push_back(y);
    for (std::size_t y : up) {
      if (y == x) continue;
      long long balance = 0;
      for (std::size_t z : up)
        if (subset_of(lat.face(z), lat.face(y))) balance += lat.rank_of(z) % 2 == 0 ? 1 : -1;
      if (balance != 0) return false;
    }
  }
  return true;
}

bool is_self_dual(const FaceLattice& lat) {
  Poset p = to_poset(lat);
  return poset_isomorphic(p, dual(p));
}

FaceLattice vertex_figure(const FaceLattice& lat, int vertex_label) {
  int pos = -1;
  for (std::size_t i = 0; i < lat.labels().size(); ++i)
    if (lat.labels()[i] == vertex_label) pos = static_cast<int>(i);
  if (pos < 0) throw UnknownVertex("vertex " + std::to_string(vertex_label) + " not in lattice");
  if (lat.dim() < 2) throw BadParams("vertex figure needs dimension at least 2");
  const FaceSet vmask = FaceSet{1} << pos;

  // Edges through v become the vertices of the figure, labeled by the
  // opposite endpoint.
  auto edge_span = lat.rank_range(1);
  std::vector<int> nbr_labels;
  std::vector<FaceSet> edge_masks;
  for (std::size_t e = edge_span.first; e < edge_span.second; ++e) {
    FaceSet m = lat.face(e);
    if (!(m & vmask)) continue;
    if (popcount(m) != 2) throw NotGraded("rank-1 face is not an edge");
    edge_masks.push_back(m & ~vmask);
    nbr_labels.push_back(lat.labels()[static_cast<std::size_t>(
        mask_positions(m & ~vmask).front())]);
  }

  std::vector<int> nbr_order(nbr_labels.size());
  for (std::size_t i = 0; i < nbr_order.size(); ++i) nbr_order[i] = static_cast<int>(i);
  std::sort(nbr_order.begin(), nbr_order.end(), [&](int a, int b) {
    return mask_positions(edge_masks[static_cast<std::size_t>(a)]).front() <
           mask_positions(edge_masks[static_cast<std::size_t>(b)]).front();
  });
  std::vector<int> new_labels;
  std::unordered_map<FaceSet, int> edge_to_newpos;
  for (int i : nbr_order) {
    edge_to_newpos[edge_masks[static_cast<std::size_t>(i)]] = static_cast<int>(new_labels.size());
    new_labels.push_back(nbr_labels[static_cast<std::size_t>(i)]);
  }

  std::set<FaceSet> masks;
  masks.insert(0);
  for (std::size_t f = 0; f < lat.size(); ++f) {
    if (!(lat.face(f) & vmask) || lat.face(f) == vmask) continue;
    FaceSet nm = 0;
    for (const auto& [em, npos] : edge_to_newpos)
      if (subset_of(em, lat.face(f) & ~vmask)) nm |= FaceSet{1} << npos;
    if (!masks.insert(nm).second)
      throw NotGraded("vertex figure faces are not determined by their edges");
  }
  return FaceLattice::from_masks(lat.dim() - 1, std::move(new_labels),
                                 std::vector<FaceSet>(masks.begin(), masks.end()));
}

bool dehn_sommerville_check(const FlagVector& fv, int t) {
  const int d = fv.dim();
  if (t < 1 || t > d - 1) throw BadParams("level out of range");
  Integer lhs = 0;
  for (int k = t; k <= d - 1; ++k) {
    unsigned mask = (1u << (t - 1)) | (1u << k);
    lhs += ((k - t) % 2 == 0) ? fv.at_mask(mask) : -fv.at_mask(mask);
  }
  Integer rhs = Integer(1 - ((d - t) % 2 == 0 ? 1 : -1)) * fv.at_mask(1u << (t - 1));
  return lhs == rhs;
}

Poset to_poset(const FaceLattice& lat) {
  Poset p;
  p.rank.resize(lat.size());
  p.up.resize(lat.size());
  p.down.resize(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    p.rank[i] = lat.rank_of(i) + 1;
    p.up[i] = lat.parents(i);
    p.down[i] = lat.children(i);
  }
  return p;
}

Poset interval_poset(const FaceLattice& lat, FaceSet lo, FaceSet hi) {
  if (!subset_of(lo, hi)) throw BadParams("interval bounds not nested");
  lat.index_of(lo);
  lat.index_of(hi);
  std::vector<int> local(lat.size(), -1);
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (subset_of(lo, lat.face(i)) && subset_of(lat.face(i), hi)) {
      local[i] = static_cast<int>(members.size());
      members.push_back(i);
    }
  Poset p;
  p.rank.resize(members.size());
  p.up.resize(members.size());
  p.down.resize(members.size());
  const int base = lat.rank_of(lat.index_of(lo));
  for (std::size_t m = 0; m < members.size(); ++m) {
    p.rank[m] = lat.rank_of(members[m]) - base;
    for (int c : lat.children(members[m]))
      if (local[static_cast<std::size_t>(c)] >= 0)
        p.down[m].push_back(local[static_cast<std::size_t>(c)]);
    for (int c : lat.parents(members[m]))
      if (local[static_cast<std::size_t>(c)] >= 0)
        p.up[m].push_back(local[static_cast<std::size_t>(c)]);
  }
  return p;
}

}  // namespace polymux
