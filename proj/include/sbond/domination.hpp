#pragma once

#include <vector>

#include "sbond/graph.hpp"
#include "sbond/limits.hpp"

namespace sbond {

struct DominationResult {
  int gamma = 0;
  /// Lexicographically smallest minimum dominating set.
  VertexSet witness;
  /// Branch nodes spent.
  std::uint64_t nodes = 0;
};

bool is_dominating(const Graph& g, const VertexSet& d);
bool is_dominating(const Graph& g, VertexMask d);

/// Exact domination number with its canonical witness. The empty graph has
/// gamma 0. Throws SearchBudgetExceeded when limits.domination_nodes runs out.
DominationResult domination_number(const Graph& g, const SearchLimits& limits = {});

/// gamma(g) without building a canonical witness.
int gamma(const Graph& g, const SearchLimits& limits = {});

/// Every minimum dominating set, sorted lexicographically.
std::vector<VertexSet> all_min_dominating_sets(const Graph& g, const SearchLimits& limits = {});

/// Vertices with at least two degree-1 neighbors. Each one lies in every
/// minimum dominating set: swapping its two leaves for it would shrink the set.
VertexSet forced_pendant_vertices(const Graph& g);

struct PendantPartition {
  /// Vertices with at least two degree-1 neighbors.
  VertexSet roots;
  /// Degree-1 vertices adjacent to a member of `roots`.
  VertexSet leaves;
};

PendantPartition pendant_partition(const Graph& g);

}  // namespace sbond
