#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sbond {

/// Bit v is set iff vertex v is a member.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask vertex_bit(int v) noexcept { return VertexMask{1} << v; }

inline constexpr VertexMask full_mask(int n) noexcept {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Strictly increasing list of vertex indices.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> members);
  explicit VertexSet(std::vector<int> members);

  static VertexSet from_mask(VertexMask mask);

  VertexMask mask() const noexcept;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(int v) const noexcept;
  const std::vector<int>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Throws VertexOutOfRange if any member is >= n.
  void validate(int n) const;

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
  std::vector<int> members_;
};

/// Strictly increasing list of indices into a graph's canonical edge list.
class EdgeSet {
public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<std::size_t> indices);
  explicit EdgeSet(std::vector<std::size_t> indices);

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(std::size_t index) const noexcept;
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }

  /// Throws EdgeIndexOutOfRange if any index is >= edge_count.
  void validate(std::size_t edge_count) const;

  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

private:
  std::vector<std::size_t> indices_;
};

/// Immutable labeled simple graph on vertices 0..n-1 (n <= 64).
///
/// Adjacency is kept as one neighbor bitmask per vertex. The edge list holds
/// each edge once as (u, v) with u < v, sorted lexicographically; EdgeSet
/// indices refer to positions in that list.
class Graph {
public:
  Graph() = default;

  /// Rejects loops, duplicate pairs (in either orientation) and endpoints >= n.
  Graph(int n, std::span<const Edge> pairs);
  Graph(int n, std::initializer_list<Edge> pairs);

  /// Builds from symmetric, loop-free adjacency masks. Not validated beyond an
  /// assertion; intended for internal hot paths.
  static Graph from_adjacency(std::span<const VertexMask> adjacency);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  VertexMask vertices() const noexcept { return full_mask(n_); }
  VertexMask neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  VertexMask closed_neighborhood(int v) const noexcept { return neighbors(v) | vertex_bit(v); }
  int degree(int v) const noexcept { return std::popcount(neighbors(v)); }
  bool adjacent(int u, int v) const noexcept { return (neighbors(u) >> v) & 1U; }

  std::span<const VertexMask> adjacency() const noexcept { return adj_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }
  std::optional<std::size_t> edge_index(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  int n_ = 0;
  std::vector<VertexMask> adj_;
  std::vector<Edge> edges_;

  void rebuild_edges();
};

Graph build_graph(int n, std::span<const Edge> pairs);

/// G - es: same vertex set, edges in es dropped.
Graph remove_edges(const Graph& g, const EdgeSet& es);

/// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

struct Component {
  Graph graph;
  /// vertex_map[i] is the vertex of the parent graph labeled i in `graph`.
  std::vector<int> vertex_map;
};

/// Connected components ordered by their smallest parent vertex.
std::vector<Component> components(const Graph& g);
bool is_connected(const Graph& g);

/// Number of edges with both endpoints in s.
int induced_edge_count(const Graph& g, const VertexSet& s);
int induced_edge_count(const Graph& g, VertexMask s);

std::string to_string(const VertexSet& s);
std::string to_string(const Edge& e);

}  // namespace sbond
