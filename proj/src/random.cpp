#include "sbond/random.hpp"

#include <vector>

#include "sbond/enumerate.hpp"
#include "sbond/error.hpp"

namespace sbond {

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxVertices) throw Error(ErrorKind::InvalidParam, "tree order must be in [1, 64]");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = pick(rng);

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::vector<Edge> edges;
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        edges.push_back({std::min(leaf, c), std::max(leaf, c)});
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(c)];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.push_back({a, v});
        break;
      }
    }
  }
  return Graph(n, edges);
}

Graph random_connected_graph(int n, std::mt19937_64& rng) {
  if (n < 1 || n > kHardEnumerationLimit) throw Error(ErrorKind::InvalidParam, "random connected order must be in [1, 11]");
  const int pairs = n * (n - 1) / 2;
  while (true) {
    const std::uint64_t code = pairs == 0 ? 0 : rng() & ((std::uint64_t{1} << pairs) - 1);
    Graph g = labeled_graph_from_code(n, code);
    if (is_connected(g)) return g;
  }
}

}  // namespace sbond
