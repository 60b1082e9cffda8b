#include "sbond/graph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "sbond/error.hpp"

namespace sbond {

namespace {

void require_strictly_increasing(const auto& values, const char* what) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1] >= values[i]) {
      throw Error(ErrorKind::InvalidParam, std::string(what) + " members must be strictly increasing");
    }
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> members) : VertexSet(std::vector<int>(members)) {}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  require_strictly_increasing(members_, "VertexSet");
  if (!members_.empty() && members_.front() < 0) {
    throw Error(ErrorKind::VertexOutOfRange, "negative vertex index");
  }
}

VertexSet VertexSet::from_mask(VertexMask mask) {
  VertexSet s;
  s.members_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask) {
    s.members_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

VertexMask VertexSet::mask() const noexcept {
  VertexMask m = 0;
  for (int v : members_) m |= vertex_bit(v);
  return m;
}

bool VertexSet::contains(int v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::validate(int n) const {
  if (!members_.empty() && members_.back() >= n) {
    throw Error(ErrorKind::VertexOutOfRange,
                "vertex " + std::to_string(members_.back()) + " >= order " + std::to_string(n));
  }
}

EdgeSet::EdgeSet(std::initializer_list<std::size_t> indices) : EdgeSet(std::vector<std::size_t>(indices)) {}

EdgeSet::EdgeSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  require_strictly_increasing(indices_, "EdgeSet");
}

bool EdgeSet::contains(std::size_t index) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

void EdgeSet::validate(std::size_t edge_count) const {
  if (!indices_.empty() && indices_.back() >= edge_count) {
    throw Error(ErrorKind::EdgeIndexOutOfRange,
                "edge index " + std::to_string(indices_.back()) + " >= " + std::to_string(edge_count));
  }
}

Graph::Graph(int n, std::span<const Edge> pairs) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorKind::VertexOutOfRange, "order must be in [0, 64], got " + std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::VertexOutOfRange, "pair " + to_string(Edge{u, v}) + " outside order " + std::to_string(n));
    }
    if (u == v) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) throw Error(ErrorKind::DuplicateEdge, "pair " + to_string(Edge{u, v}) + " repeated");
    adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
    adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
  }
  rebuild_edges();
}

Graph::Graph(int n, std::initializer_list<Edge> pairs) : Graph(n, std::span<const Edge>(pairs.begin(), pairs.size())) {}

Graph Graph::from_adjacency(std::span<const VertexMask> adjacency) {
  Graph g;
  g.n_ = static_cast<int>(adjacency.size());
  assert(g.n_ <= kMaxVertices);
  g.adj_.assign(adjacency.begin(), adjacency.end());
#ifndef NDEBUG
  for (int v = 0; v < g.n_; ++v) {
    assert(!g.adjacent(v, v));
    for (int u = 0; u < g.n_; ++u) assert(g.adjacent(u, v) == g.adjacent(v, u));
  }
#endif
  g.rebuild_edges();
  return g;
}

void Graph::rebuild_edges() {
  edges_.clear();
  for (int u = 0; u < n_; ++u) {
    VertexMask later = adj_[static_cast<std::size_t>(u)] & ~full_mask(u + 1);
    while (later) {
      edges_.push_back({u, std::countr_zero(later)});
      later &= later - 1;
    }
  }
}

std::optional<std::size_t> Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph build_graph(int n, std::span<const Edge> pairs) { return Graph(n, pairs); }

Graph remove_edges(const Graph& g, const EdgeSet& es) {
  es.validate(g.size());
  std::vector<VertexMask> adj(g.adjacency().begin(), g.adjacency().end());
  for (std::size_t index : es) {
    const auto& [u, v] = g.edge(index);
    adj[static_cast<std::size_t>(u)] &= ~vertex_bit(v);
    adj[static_cast<std::size_t>(v)] &= ~vertex_bit(u);
  }
  return Graph::from_adjacency(adj);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  if (n > kMaxVertices) throw Error(ErrorKind::VertexOutOfRange, "disjoint union exceeds 64 vertices");
  std::vector<VertexMask> adj(a.adjacency().begin(), a.adjacency().end());
  for (VertexMask m : b.adjacency()) adj.push_back(m << a.order());
  return Graph::from_adjacency(adj);
}

std::vector<Component> components(const Graph& g) {
  std::vector<Component> out;
  VertexMask unseen = g.vertices();
  while (unseen) {
    VertexMask reached = vertex_bit(std::countr_zero(unseen));
    VertexMask frontier = reached;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      frontier = next & ~reached;
      reached |= next;
    }
    unseen &= ~reached;

    Component c;
    c.vertex_map = VertexSet::from_mask(reached).members();
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < c.vertex_map.size(); ++i) local[static_cast<std::size_t>(c.vertex_map[i])] = static_cast<int>(i);
    std::vector<VertexMask> adj(c.vertex_map.size(), 0);
    for (std::size_t i = 0; i < c.vertex_map.size(); ++i) {
      for (VertexMask nb = g.neighbors(c.vertex_map[i]); nb; nb &= nb - 1) {
        adj[i] |= vertex_bit(local[static_cast<std::size_t>(std::countr_zero(nb))]);
      }
    }
    c.graph = Graph::from_adjacency(adj);
    out.push_back(std::move(c));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

int induced_edge_count(const Graph& g, VertexMask s) {
  int twice = 0;
  for (VertexMask m = s; m; m &= m - 1) twice += std::popcount(g.neighbors(std::countr_zero(m)) & s);
  return twice / 2;
}

int induced_edge_count(const Graph& g, const VertexSet& s) {
  s.validate(g.order());
  return induced_edge_count(g, s.mask());
}

std::string to_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.members()[i];
  os << '}';
  return os.str();
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace sbond
