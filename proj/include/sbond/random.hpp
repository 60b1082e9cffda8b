#pragma once

#include <random>

#include "sbond/graph.hpp"

namespace sbond {

/// Uniform labeled tree on n >= 1 vertices (Pruefer decoding).
Graph random_tree(int n, std::mt19937_64& rng);

/// Uniform over connected labeled graphs on n >= 1 vertices, by rejection
/// from G(n, 1/2). Meant for small n.
Graph random_connected_graph(int n, std::mt19937_64& rng);

}  // namespace sbond
