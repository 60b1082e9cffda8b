#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>

#include "sbond/graph.hpp"

namespace sbond {

/// Bitmask branch-and-bound over closed neighborhoods for the set-cover
/// formulation of domination. Works on raw adjacency masks so that callers
/// probing many edge-deleted variants of one graph avoid building Graph
/// objects.
///
/// Branching picks the undominated vertex with the fewest admissible
/// dominators and tries each of them, forbidding earlier siblings in later
/// branches; every vertex set is therefore reached at most once. The lower
/// bound packs undominated vertices whose admissible dominator sets are
/// pairwise disjoint.
class DominationKernel {
public:
  DominationKernel(std::span<const VertexMask> adjacency, std::uint64_t node_budget);

  int order() const noexcept { return n_; }

  /// Is there a dominating set of size <= limit? On success solution() holds one.
  bool exists_within(int limit);

  /// Is there S within `allowed`, |S| <= limit, dominating every vertex of
  /// `undominated`? On success solution() holds S.
  bool exists_within(VertexMask undominated, VertexMask allowed, int limit);

  /// Exact domination number; solution() holds a minimum dominating set.
  int minimum();

  /// Lexicographically smallest minimum dominating set, given gamma.
  VertexMask lex_smallest_minimum(int gamma);

  /// Calls visit(D) for every dominating set D with |D| == gamma, where gamma
  /// must be the domination number. Order is unspecified.
  void for_each_minimum(int gamma, const std::function<void(VertexMask)>& visit);

  VertexMask solution() const noexcept { return solution_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

  /// Vertices with no neighbors; they belong to every dominating set.
  VertexMask isolated() const noexcept { return isolated_; }

private:
  int n_;
  std::array<VertexMask, kMaxVertices> closed_{};
  VertexMask isolated_ = 0;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  VertexMask solution_ = 0;

  void tick();
  int packing_bound(VertexMask undominated, VertexMask allowed) const;
  int greedy_cover(VertexMask undominated, VertexMask allowed, VertexMask& chosen) const;
  bool search(VertexMask undominated, VertexMask allowed, int limit, VertexMask chosen);
  void enumerate(VertexMask undominated, VertexMask allowed, int remaining, VertexMask chosen,
                 const std::function<void(VertexMask)>& visit);
};

}  // namespace sbond
