#include "sbond/domination.hpp"

#include <algorithm>

#include "sbond/domination_kernel.hpp"

namespace sbond {

bool is_dominating(const Graph& g, VertexMask d) {
  VertexMask covered = d;
  for (VertexMask m = d; m; m &= m - 1) covered |= g.neighbors(std::countr_zero(m));
  return (covered & g.vertices()) == g.vertices();
}

bool is_dominating(const Graph& g, const VertexSet& d) {
  d.validate(g.order());
  return is_dominating(g, d.mask());
}

DominationResult domination_number(const Graph& g, const SearchLimits& limits) {
  DominationKernel kernel(g.adjacency(), limits.domination_nodes);
  DominationResult result;
  result.gamma = kernel.minimum();
  result.witness = VertexSet::from_mask(kernel.lex_smallest_minimum(result.gamma));
  result.nodes = kernel.nodes();
  return result;
}

int gamma(const Graph& g, const SearchLimits& limits) {
  DominationKernel kernel(g.adjacency(), limits.domination_nodes);
  return kernel.minimum();
}

std::vector<VertexSet> all_min_dominating_sets(const Graph& g, const SearchLimits& limits) {
  DominationKernel kernel(g.adjacency(), limits.domination_nodes);
  const int target = kernel.minimum();
  std::vector<VertexSet> sets;
  kernel.for_each_minimum(target, [&](VertexMask d) { sets.push_back(VertexSet::from_mask(d)); });
  std::sort(sets.begin(), sets.end());
  return sets;
}

namespace {

VertexMask leaf_mask(const Graph& g) {
  VertexMask leaves = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) leaves |= vertex_bit(v);
  return leaves;
}

VertexMask roots_mask(const Graph& g, VertexMask leaves) {
  VertexMask roots = 0;
  for (int v = 0; v < g.order(); ++v)
    if (std::popcount(g.neighbors(v) & leaves) >= 2) roots |= vertex_bit(v);
  return roots;
}

}  // namespace

VertexSet forced_pendant_vertices(const Graph& g) {
  return VertexSet::from_mask(roots_mask(g, leaf_mask(g)));
}

PendantPartition pendant_partition(const Graph& g) {
  const VertexMask leaves = leaf_mask(g);
  const VertexMask roots = roots_mask(g, leaves);
  VertexMask attached = 0;
  for (VertexMask m = roots; m; m &= m - 1) attached |= g.neighbors(std::countr_zero(m)) & leaves;
  return {VertexSet::from_mask(roots), VertexSet::from_mask(attached)};
}

}  // namespace sbond
