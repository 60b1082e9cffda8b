#include "sbond/bounds.hpp"

#include <algorithm>
#include <limits>

#include "sbond/bondage.hpp"
#include "sbond/domination.hpp"
#include "sbond/error.hpp"

namespace sbond {

namespace {

std::size_t as_size(long long v) { return static_cast<std::size_t>(v); }

int ceil_third(int n) { return (n + 2) / 3; }

void require_k(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidParam, "k must be >= 1, got " + std::to_string(k));
}

// gamma(P_n) = gamma(C_n) = ceil(n/3).
void require_feasible_third(int n, int k, const char* family) {
  if (ceil_third(n) + k > n) {
    throw Error(ErrorKind::InfeasibleIncrease, std::string(family) + " of order " + std::to_string(n) +
                                                   " cannot rise by " + std::to_string(k));
  }
}

std::size_t path_value(int n, int k) {
  switch (n % 3) {
    case 0: return as_size((3LL * k - 1) / 2);
    case 1: return as_size((3LL * k + 1) / 2);
    default: return as_size((3LL * k - 1 + 1) / 2);  // ceil((3k-1)/2)
  }
}

}  // namespace

std::size_t bondage_path_formula(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidParam, "path bondage needs n >= 2");
  return n % 3 == 1 ? 2 : 1;
}

std::size_t sb2_path_formula(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParam, "path order must be positive");
  require_feasible_third(n, 2, "path");
  return n % 3 == 0 ? 2 : 3;
}

std::size_t sbk_path_formula(int n, int k) {
  require_k(k);
  if (n < 1) throw Error(ErrorKind::InvalidParam, "path order must be positive");
  require_feasible_third(n, k, "path");
  return path_value(n, k);
}

std::size_t sbk_cycle_formula(int n, int k) {
  require_k(k);
  if (n < 3) throw Error(ErrorKind::InvalidParam, "cycle order must be >= 3");
  require_feasible_third(n, k, "cycle");
  return path_value(n, k) + 1;
}

std::size_t sbk_complete_formula(int n, int k) {
  require_k(k);
  if (n < 1) throw Error(ErrorKind::InvalidParam, "complete graph order must be positive");
  if (k > n - 1) {
    throw Error(ErrorKind::InfeasibleIncrease, "K_" + std::to_string(n) + " cannot rise by " + std::to_string(k));
  }
  const long long all = 1LL * n * (n - 1) / 2;
  const long long kept = (1LL * (n - k - 1) * (n - k + 1)) / 2;
  return as_size(all - kept);
}

std::size_t vizing_max_edges(int n, int d) {
  if (d < 2 || d > n) {
    throw Error(ErrorKind::InvalidParam, "need 2 <= d <= n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
  return as_size(1LL * (n - d) * (n - d + 2) / 2);
}

Graph vizing_extremal_graph(int n, int d) {
  vizing_max_edges(n, d);
  if (n > kMaxVertices) throw Error(ErrorKind::InvalidParam, "order exceeds 64");
  const int p = n - d + 2;
  auto in_cover = [p](int u, int v) {
    if (v == u + 1 && u % 2 == 0) return true;
    return p % 2 == 1 && u == p - 2 && v == p - 1;
  };
  std::vector<Edge> edges;
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v)
      if (!in_cover(u, v)) edges.push_back({u, v});
  return Graph(n, edges);
}

TreeBounds tree_bounds(int k) {
  require_k(k);
  return {static_cast<std::size_t>(k), 2 * static_cast<std::size_t>(k)};
}

std::optional<PendantSb> pendant_sbk(const Graph& g) {
  const auto [roots, leaves] = pendant_partition(g);
  if (leaves.size() <= roots.size()) return std::nullopt;
  const auto diff = leaves.size() - roots.size();
  return PendantSb{static_cast<int>(diff), diff};
}

std::size_t incident_edge_count(const Graph& g, const VertexSet& s) {
  s.validate(g.order());
  int degrees = 0;
  for (int v : s) degrees += g.degree(v);
  return static_cast<std::size_t>(degrees - induced_edge_count(g, s));
}

BoundReport induced_p3_bound(const Graph& g) {
  std::optional<BoundReport> best;
  for (int v = 0; v < g.order(); ++v) {
    const auto nb = VertexSet::from_mask(g.neighbors(v)).members();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const int u = nb[i];
        const int w = nb[j];
        const int sigma = 2 + (g.adjacent(u, w) ? 1 : 0);
        const auto value = static_cast<std::size_t>(g.degree(u) + g.degree(v) + g.degree(w) - sigma);
        if (!best || value < best->value) {
          best = BoundReport{"induced-p3", value, VertexSet::from_mask(vertex_bit(u) | vertex_bit(v) | vertex_bit(w))};
        }
      }
    }
  }
  if (!best) throw Error(ErrorKind::PatternAbsent, "graph has no path on three vertices");
  return *best;
}

BoundReport induced_2p2_bound(const Graph& g) {
  std::optional<BoundReport> best;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const VertexMask s = vertex_bit(edges[i].u) | vertex_bit(edges[i].v) | vertex_bit(edges[j].u) |
                           vertex_bit(edges[j].v);
      if (std::popcount(s) != 4 || induced_edge_count(g, s) != 2) continue;
      int degrees = 0;
      for (VertexMask m = s; m; m &= m - 1) degrees += g.degree(std::countr_zero(m));
      const auto value = static_cast<std::size_t>(degrees - 2);
      if (!best || value < best->value) best = BoundReport{"induced-2p2", value, VertexSet::from_mask(s)};
    }
  }
  if (!best) throw Error(ErrorKind::PatternAbsent, "graph has no induced pair of disjoint edges");
  return *best;
}

std::size_t disjoint_compose_sbk(const std::vector<std::vector<std::optional<std::size_t>>>& tables, int k) {
  require_k(k);
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  const auto K = static_cast<std::size_t>(k);
  // cost[j]: cheapest removal raising the components seen so far by exactly j.
  std::vector<std::size_t> cost(K + 1, kInf);
  cost[0] = 0;
  for (const auto& table : tables) {
    auto next = cost;
    for (std::size_t j = 1; j <= K; ++j) {
      for (std::size_t l = 1; l <= j && l <= table.size(); ++l) {
        if (!table[l - 1] || cost[j - l] == kInf) continue;
        next[j] = std::min(next[j], cost[j - l] + *table[l - 1]);
      }
    }
    cost = std::move(next);
  }
  if (cost[K] == kInf) {
    throw Error(ErrorKind::InfeasibleIncrease, "no split of k = " + std::to_string(k) + " over the components");
  }
  return cost[K];
}

std::vector<std::vector<std::optional<std::size_t>>> component_sb_tables(const Graph& g, int k,
                                                                         const SearchLimits& limits) {
  require_k(k);
  std::vector<std::vector<std::optional<std::size_t>>> tables;
  for (const auto& c : components(g)) {
    std::vector<std::optional<std::size_t>> table(static_cast<std::size_t>(k));
    const int g0 = gamma(c.graph, limits);
    for (int j = 1; j <= k && g0 + j <= c.graph.order(); ++j) {
      table[static_cast<std::size_t>(j - 1)] = sb_k(c.graph, j, limits).size;
    }
    tables.push_back(std::move(table));
  }
  return tables;
}

}  // namespace sbond
