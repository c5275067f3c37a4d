#ifndef POLYMUX_POSET_HPP
#define POLYMUX_POSET_HPP

#include <cstddef>
#include <vector>

namespace polymux {

/**
 * Finite graded poset given by its cover relation (Hasse diagram).
 * rank[i] is normalized so the minimum element has rank 0; up[i] lists
 * covers of i, down[i] lists elements covered by i.
 */
struct Poset {
  std::vector<int> rank;
  std::vector<std::vector<int>> up;
  std::vector<std::vector<int>> down;

  std::size_t size() const { return rank.size(); }
};

/// Order-reversing copy: covers flipped, ranks mirrored to max_rank - rank.
Poset dual(const Poset& p);

/**
 * Rank- and cover-preserving bijection test.
 *
 * Backtracking over elements grouped by a stable refinement of the
 * (rank, down-degree, up-degree) invariant; the refinement repeatedly
 * replaces each element's color by the multiset of neighbor colors, which
 * prunes the search to near nothing on the lattices handled here.
 */
bool poset_isomorphic(const Poset& a, const Poset& b);

}  // namespace polymux

#endif
