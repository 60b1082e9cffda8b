#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sbond/graph.hpp"
#include "sbond/limits.hpp"

namespace sbond {

// Closed forms. Each guards the standing assumption gamma + k <= |V| and
// throws InfeasibleIncrease outside it.

/// b(P_n): 2 when n = 1 (mod 3), else 1. Requires n >= 2.
std::size_t bondage_path_formula(int n);
/// Sb_2(P_n): 2 when n = 0 (mod 3), else 3.
std::size_t sb2_path_formula(int n);
/// Sb_k(P_n) keyed on n mod 3: floor((3k-1)/2), floor((3k+1)/2), ceil((3k-1)/2).
std::size_t sbk_path_formula(int n, int k);
/// Sb_k(C_n): the path value for the same residue, plus one.
std::size_t sbk_cycle_formula(int n, int k);
/// Sb_k(K_n) = C(n,2) - floor((n-k-1)(n-k+1)/2), for 1 <= k <= n-1.
std::size_t sbk_complete_formula(int n, int k);

/// Largest edge count of an order-n graph with domination number d, 2 <= d <= n:
/// floor((n-d)(n-d+2)/2).
std::size_t vizing_max_edges(int n, int d);

/// A graph attaining vizing_max_edges(n, d): the clique on 0..p-1
/// (p = n-d+2) minus a minimum edge cover {(0,1), (2,3), ...} (plus (p-2,p-1)
/// when p is odd), then d-2 isolated vertices p..n-1.
Graph vizing_extremal_graph(int n, int d);

struct TreeBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
};

/// k <= Sb_k(T) <= 2k for any tree T admitting the increase.
TreeBounds tree_bounds(int k);

struct PendantSb {
  int k_star = 0;
  std::size_t value = 0;
};

/// With R the vertices carrying two or more pendant leaves and A those leaves,
/// Sb_{|A|-|R|}(G) = |A|-|R| whenever |A| > |R|.
std::optional<PendantSb> pendant_sbk(const Graph& g);

/// Structural upper bound on Sb_2: the edges incident to a small vertex
/// pattern, minimized over occurrences of the pattern.
struct BoundReport {
  std::string bound_name;
  std::size_t value = 0;
  VertexSet witness;
};

/// Number of edges with at least one endpoint in s (degree sum minus edges
/// inside s).
std::size_t incident_edge_count(const Graph& g, const VertexSet& s);

/// Minimum incident-edge count over vertex triples u-v-w with v adjacent to
/// both ends. Throws PatternAbsent when no such triple exists.
BoundReport induced_p3_bound(const Graph& g);

/// Minimum incident-edge count over pairs of edges uv, st spanning four
/// vertices with no further edges among them. Throws PatternAbsent.
BoundReport induced_2p2_bound(const Graph& g);

/// tables[i][j-1] = Sb_j of component i, or nullopt when component i cannot
/// rise by j. Returns the cheapest way to split k over the components, each
/// used component taking l_i >= 1 with sum l_i = k. Throws
/// InfeasibleIncrease when no split exists.
std::size_t disjoint_compose_sbk(const std::vector<std::vector<std::optional<std::size_t>>>& tables, int k);

/// Per-component Sb_j tables for j = 1..k, computed by exhaustive search.
std::vector<std::vector<std::optional<std::size_t>>> component_sb_tables(const Graph& g, int k,
                                                                         const SearchLimits& limits = {});

}  // namespace sbond
