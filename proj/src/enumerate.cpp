#include "sbond/enumerate.hpp"

#include <vector>

#include "sbond/combinations.hpp"
#include "sbond/error.hpp"

namespace sbond {

namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return pairs;
}

void check_cap(int n, int cap) {
  if (n < 0) throw Error(ErrorKind::InvalidParam, "negative order");
  if (n > cap || n > kHardEnumerationLimit) {
    throw Error(ErrorKind::EnumerationCapExceeded,
                "order " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(std::min(cap, kHardEnumerationLimit)));
  }
}

}  // namespace

Graph labeled_graph_from_code(int n, std::uint64_t code) {
  std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1U) {
        adj[static_cast<std::size_t>(u)] |= vertex_bit(v);
        adj[static_cast<std::size_t>(v)] |= vertex_bit(u);
      }
    }
  }
  return Graph::from_adjacency(adj);
}

LabeledGraphRange::LabeledGraphRange(int n, bool connected_only)
    : n_(n), connected_only_(connected_only), limit_(std::uint64_t{1} << (n * (n - 1) / 2)) {}

LabeledGraphRange::iterator::iterator(const LabeledGraphRange* range, std::uint64_t code) : range_(range), code_(code) {
  settle();
}

void LabeledGraphRange::iterator::settle() {
  for (; code_ < range_->limit_; ++code_) {
    current_ = labeled_graph_from_code(range_->n_, code_);
    if (!range_->connected_only_ || is_connected(current_)) return;
  }
}

LabeledGraphRange::iterator& LabeledGraphRange::iterator::operator++() {
  ++code_;
  settle();
  return *this;
}

LabeledGraphRange enumerate_labeled_graphs(int n, bool connected_only, int cap) {
  check_cap(n, cap);
  return LabeledGraphRange(n, connected_only);
}

void for_each_graph_with_edges(int n, std::size_t m, const std::function<bool(const Graph&)>& visit, int cap) {
  check_cap(n, cap);
  const auto pairs = all_pairs(n);
  if (m > pairs.size()) {
    throw Error(ErrorKind::InvalidParam,
                "m = " + std::to_string(m) + " exceeds n(n-1)/2 = " + std::to_string(pairs.size()));
  }
  auto idx = first_combination(m);
  std::vector<Edge> chosen(m);
  do {
    for (std::size_t i = 0; i < m; ++i) chosen[i] = pairs[idx[i]];
    if (!visit(Graph(n, chosen))) return;
  } while (next_combination(idx, pairs.size()));
}

}  // namespace sbond
