#ifndef POLYMUX_LATTICE_HPP
#define POLYMUX_LATTICE_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "polymux/exact.hpp"
#include "polymux/poset.hpp"

namespace polymux {

/// Vertex subset as a bitmask over vertex positions. Capacity 64 vertices.
using FaceSet = std::uint64_t;

inline bool subset_of(FaceSet a, FaceSet b) { return (a & b) == a; }
inline int popcount(FaceSet a) { return __builtin_popcountll(a); }

/**
 * A polytope described combinatorially: an ordered vertex list (the order
 * carries meaning for the order-sensitive multiplex checks) and the facets
 * as subsets of vertex labels.
 */
struct FacetList {
  int dim = 0;
  std::vector<int> vertices;
  std::vector<std::vector<int>> facets;
};

/**
 * Flag vector of a d-polytope: one exact count per subset S of {0..d-1},
 * indexed by bitmask (bit i set means dimension i occurs in the chain).
 */
class FlagVector {
 public:
  explicit FlagVector(int dim);

  int dim() const { return dim_; }
  Integer& at_mask(unsigned mask);
  const Integer& at_mask(unsigned mask) const;
  /// Count for an explicit dimension set, e.g. at({0,2}).
  const Integer& at(std::initializer_list<int> dims) const;

  /// Canonical key: sorted comma-joined dimensions, "" for the empty set.
  static std::string subset_key(unsigned mask);

  bool operator==(const FlagVector& o) const { return dim_ == o.dim_ && counts_ == o.counts_; }

 private:
  int dim_;
  std::vector<Integer> counts_;
};

/**
 * Face lattice of a polytope given by facet vertex sets: all intersections
 * of facets, together with the empty face and the polytope itself, ordered
 * by inclusion. Ranks are assigned by longest chain from the bottom and
 * validated to be a grading (every cover step raises rank by one, top rank
 * equals dim). Faces are stored sorted by (rank, mask) so every traversal
 * is deterministic.
 *
 * Passing these checks is necessary for the input to be a polytope's facet
 * list but not sufficient; no polytopality certificate is computed.
 */
class FaceLattice {
 public:
  /// Throws EmptyInput / UnknownVertex / BadParams / NotGraded.
  static FaceLattice build(const FacetList& p);

  int dim() const { return dim_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  std::size_t size() const { return faces_.size(); }

  const std::vector<FaceSet>& faces() const { return faces_; }
  FaceSet face(std::size_t idx) const { return faces_[idx]; }
  int rank_of(std::size_t idx) const { return ranks_[idx]; }
  FaceSet top() const { return faces_.back(); }

  /// Index range [first, last) of the faces with the given rank, -1..dim.
  std::pair<std::size_t, std::size_t> rank_range(int rank) const;
  std::size_t index_of(FaceSet f) const;
  bool contains(FaceSet f) const { return index_.count(f) != 0; }

  const std::vector<int>& children(std::size_t idx) const { return children_[idx]; }
  const std::vector<int>& parents(std::size_t idx) const { return parents_[idx]; }

  /// Labels of a face, in induced vertex order.
  std::vector<int> face_labels(std::size_t idx) const;

  /// f_i counts for 0 <= i <= dim-1.
  std::vector<Integer> f_vector() const;

 private:
  int dim_ = 0;
  std::vector<int> labels_;
  std::vector<FaceSet> faces_;
  std::vector<int> ranks_;
  std::vector<std::size_t> rank_begin_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> parents_;
  std::unordered_map<FaceSet, std::size_t> index_;

  static FaceLattice from_masks(int dim, std::vector<int> labels, std::vector<FaceSet> masks);
  friend FaceLattice vertex_figure(const FaceLattice&, int);
};

/// Chain-count flag vector. Work is split over the 2^dim dimension subsets.
FlagVector flag_vector(const FaceLattice& lat);

/// Serial reference: enumerates every chain of proper faces once.
FlagVector flag_vector_reference(const FaceLattice& lat);

/// Alternating sum of face counts equals 1 - (-1)^dim.
bool euler_check(const FaceLattice& lat);

/**
 * Eulerian test: Moebius function of every interval equals
 * (-1)^(rank difference). Work is split over interval bottoms.
 */
bool eulerian_check(const FaceLattice& lat);

/// Serial reference: every proper interval has as many elements of even as of odd rank.
bool eulerian_check_reference(const FaceLattice& lat);

/// Order-reversing self-equivalence test on the underlying poset.
bool is_self_dual(const FaceLattice& lat);

/**
 * The interval above the given vertex, re-graded as a (dim-1)-lattice.
 * Its vertices are the edges through v, labeled by the opposite endpoint.
 */
FaceLattice vertex_figure(const FaceLattice& lat, int vertex_label);

/**
 * Dehn-Sommerville relation at level t (1 <= t <= dim-1):
 * sum_{k=t}^{d-1} (-1)^(k-t) f_{t-1,k} = (1 - (-1)^(d-t)) f_{t-1}.
 */
bool dehn_sommerville_check(const FlagVector& fv, int t);

/// Hasse diagram of the whole lattice, ranks normalized to start at 0.
Poset to_poset(const FaceLattice& lat);

/// Hasse diagram of the interval {z : lo <= z <= hi}; both bounds must be faces.
Poset interval_poset(const FaceLattice& lat, FaceSet lo, FaceSet hi);

}  // namespace polymux

#endif
