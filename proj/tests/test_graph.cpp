#include <doctest.h>

#include <random>
#include <set>

#include "sbond/enumerate.hpp"
#include "sbond/error.hpp"
#include "sbond/family.hpp"
#include "sbond/graph.hpp"
#include "sbond/io.hpp"
#include "sbond/random.hpp"

using namespace sbond;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an sbond::Error");
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_CASE("build_graph validates pairs") {
  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(p3.order() == 3);
  CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(p3.degree(1) == 2);

  const Graph k1(1, {});
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);

  CHECK(kind_of([] { Graph(4, {{0, 1}, {0, 1}}); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { Graph(4, {{0, 1}, {1, 0}}); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { Graph(3, {{2, 2}}); }) == ErrorKind::LoopEdge);
  CHECK(kind_of([] { Graph(3, {{0, 3}}); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { Graph(65, {}); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("edge list is canonical regardless of input order") {
  const Graph g(4, {{3, 2}, {1, 0}, {2, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
  CHECK(g.edge_index(3, 2) == 2);
  CHECK_FALSE(g.edge_index(1, 3).has_value());
  CHECK(g.adjacent(2, 3));
  CHECK(g.adjacent(3, 2));
}

TEST_CASE("family generators") {
  SUBCASE("edge counts follow the closed forms") {
    for (int n = 1; n <= 12; ++n) {
      CHECK(path_graph(n).size() == static_cast<std::size_t>(n - 1));
      CHECK(complete_graph(n).size() == static_cast<std::size_t>(n * (n - 1) / 2));
      if (n >= 3) CHECK(cycle_graph(n).size() == static_cast<std::size_t>(n));
    }
    for (int k = 1; k <= 8; ++k) {
      CHECK(star_graph(k).size() == static_cast<std::size_t>(k));
      CHECK(spider_graph(k).order() == 2 * k + 2);
      CHECK(spider_graph(k).size() == static_cast<std::size_t>(2 * k + 1));
    }
  }
  SUBCASE("spider layout") {
    const Graph s = spider_graph(2);
    CHECK(s.order() == 6);
    CHECK(s.size() == 5);
    CHECK(s.degree(0) == 3);
    CHECK(s.degree(1) == 2);
    CHECK(s.degree(2) == 2);
    CHECK(s.degree(3) == 1);  // the root's leaf child
    CHECK(s.adjacent(1, 4));
    CHECK(s.adjacent(2, 5));
    CHECK(is_connected(s));
  }
  SUBCASE("cycle closes the path") {
    const Graph c = cycle_graph(5);
    CHECK(c.adjacent(0, 4));
    for (int v = 0; v < 5; ++v) CHECK(c.degree(v) == 2);
  }
  SUBCASE("invalid parameters") {
    CHECK(kind_of([] { cycle_graph(2); }) == ErrorKind::InvalidFamilyParam);
    CHECK(kind_of([] { path_graph(0); }) == ErrorKind::InvalidFamilyParam);
    CHECK(kind_of([] { star_graph(0); }) == ErrorKind::InvalidFamilyParam);
    CHECK(kind_of([] { spider_graph(0); }) == ErrorKind::InvalidFamilyParam);
    CHECK(kind_of([] { parse_family_spec("path"); }) == ErrorKind::InvalidFamilyParam);
    CHECK(kind_of([] { parse_family_spec("wheel:5"); }) == ErrorKind::InvalidFamilyParam);
    CHECK(kind_of([] { parse_family_spec("path:7x"); }) == ErrorKind::InvalidFamilyParam);
  }
  SUBCASE("parse_family_spec") {
    const auto spec = parse_family_spec("spider:3");
    CHECK(spec.family == Family::Spider);
    CHECK(spec.param == 3);
    CHECK(to_string(spec) == "spider:3");
  }
}

TEST_CASE("remove_edges") {
  const Graph p3 = path_graph(3);
  const Graph split = remove_edges(p3, EdgeSet{0});
  CHECK(split.order() == 3);
  CHECK(split.edges() == std::vector<Edge>{{1, 2}});
  CHECK(components(split).size() == 2);

  CHECK(remove_edges(p3, EdgeSet{}) == p3);

  const Graph c4 = cycle_graph(4);
  const Graph bare = remove_edges(c4, EdgeSet{0, 1, 2, 3});
  CHECK(bare.size() == 0);
  CHECK(bare.order() == 4);

  CHECK(kind_of([&] { remove_edges(p3, EdgeSet{2}); }) == ErrorKind::EdgeIndexOutOfRange);
  CHECK(kind_of([] { EdgeSet({1, 1}); }) == ErrorKind::InvalidParam);
}

TEST_CASE("remove_edges keeps order and drops exactly the chosen edges") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = labeled_graph_from_code(7, rng() & ((1ULL << 21) - 1));
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (rng() & 1U) picked.push_back(i);
    const Graph h = remove_edges(g, EdgeSet(picked));
    CHECK(h.order() == g.order());
    CHECK(h.size() == g.size() - picked.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const bool removed = std::find(picked.begin(), picked.end(), i) != picked.end();
      CHECK(h.adjacent(g.edge(i).u, g.edge(i).v) == !removed);
    }
  }
}

TEST_CASE("components") {
  const Graph p1p2(3, {{1, 2}});
  const auto parts = components(p1p2);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].graph.order() == 1);
  CHECK(parts[1].graph.order() == 2);
  CHECK(parts[1].vertex_map == std::vector<int>{1, 2});

  CHECK(components(cycle_graph(6)).size() == 1);
  CHECK(components(Graph(5, {})).size() == 5);

  SUBCASE("partition property") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const Graph g = labeled_graph_from_code(8, rng() & ((1ULL << 28) - 1) & rng());
      std::set<int> seen;
      int total = 0;
      std::size_t edges = 0;
      for (const auto& c : components(g)) {
        total += c.graph.order();
        edges += c.graph.size();
        CHECK(is_connected(c.graph));
        for (int v : c.vertex_map) CHECK(seen.insert(v).second);
        for (const auto& [u, v] : c.graph.edges()) CHECK(g.adjacent(c.vertex_map[u], c.vertex_map[v]));
      }
      CHECK(total == g.order());
      CHECK(edges == g.size());
    }
  }
}

TEST_CASE("induced_edge_count") {
  CHECK(induced_edge_count(complete_graph(3), VertexSet{0, 1, 2}) == 3);
  CHECK(induced_edge_count(path_graph(3), VertexSet{0, 1, 2}) == 2);
  CHECK(induced_edge_count(path_graph(4), VertexSet{0, 3}) == 0);
  CHECK(kind_of([] { induced_edge_count(path_graph(3), VertexSet{5}); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("disjoint_union shifts the second graph") {
  const Graph u = disjoint_union(path_graph(2), path_graph(3));
  CHECK(u.order() == 5);
  CHECK(u.edges() == std::vector<Edge>{{0, 1}, {2, 3}, {3, 4}});
}

TEST_CASE("edge-list format") {
  const Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
  CHECK(p3 == path_graph(3));
  CHECK(to_edge_list(p3) == "3 2\n0 1\n1 2\n");
  CHECK(parse_edge_list(to_edge_list(spider_graph(3))) == spider_graph(3));
  CHECK(parse_edge_list("2 0\n") == Graph(2, {}));

  auto parse_error_line = [](std::string_view text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(parse_error_line("3 2\n0 1\n") == 3);      // missing edge
  CHECK(parse_error_line("3 1\n0 x\n") == 2);      // bad token
  CHECK(parse_error_line("3\n") == 1);             // short header
  CHECK(parse_error_line("3 1\n0 5\n") == 2);      // out of range
  CHECK(parse_error_line("3 1\n0 1\n1 2\n") == 3); // trailing edge
  CHECK(parse_error_line("") == 1);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);  // duplicate
}

TEST_CASE("graph6 format") {
  // Reference strings from the graph6 definition (nauty formats.txt).
  CHECK(to_graph6(Graph(0, {})) == "?");
  CHECK(to_graph6(Graph(1, {})) == "@");
  CHECK(to_graph6(Graph(2, {{0, 1}})) == "A_");
  CHECK(to_graph6(path_graph(3)) == "Bg");  // x = 1 0 1 -> 101000
  CHECK(to_graph6(Graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})) == "DQc");

  CHECK(parse_graph6("DQc") == Graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
  CHECK(parse_graph6(">>graph6<<DQc\n") == parse_graph6("DQc"));

  SUBCASE("round trip over every labeled graph up to order 5") {
    for (int n = 0; n <= 5; ++n) {
      for (const auto& g : enumerate_labeled_graphs(n, false)) {
        const auto text = to_graph6(g);
        REQUIRE(parse_graph6(text) == g);
      }
    }
  }
  SUBCASE("long-form order") {
    const Graph big = path_graph(64);
    const auto text = to_graph6(big);
    CHECK(text.substr(0, 4) == "~?@?");
    CHECK(parse_graph6(text) == big);
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);       // truncated
    CHECK_THROWS_AS(parse_graph6("DQcc"), ParseError);     // trailing byte
    CHECK_THROWS_AS(parse_graph6("D Q"), ParseError);      // outside range
    CHECK_THROWS_AS(parse_graph6("Bh"), ParseError);       // padding bits set
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
  }
}

TEST_CASE("labeled enumeration") {
  std::size_t all = 0;
  for (const auto& g : enumerate_labeled_graphs(3, false)) {
    (void)g;
    ++all;
  }
  CHECK(all == 8);
  std::size_t connected = 0;
  for (const auto& g : enumerate_labeled_graphs(3, true)) connected += is_connected(g) ? 1 : 0;
  CHECK(connected == 4);

  std::set<std::vector<Edge>> distinct;
  for (const auto& g : enumerate_labeled_graphs(4, false)) distinct.insert(g.edges());
  CHECK(distinct.size() == 64);

  // Connected labeled graph counts (OEIS A001187).
  const std::size_t expected[] = {1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    std::size_t count = 0;
    for (const auto& g : enumerate_labeled_graphs(n, true)) count += g.order() == n ? 1 : 0;
    CHECK(count == expected[n - 1]);
  }

  auto range = enumerate_labeled_graphs(3, false);
  auto it = range.begin();
  CHECK(it->size() == 0);
  ++it;
  CHECK(it->edges() == std::vector<Edge>{{0, 1}});

  CHECK(kind_of([] { enumerate_labeled_graphs(8, false); }) == ErrorKind::EnumerationCapExceeded);
  CHECK(kind_of([] { enumerate_labeled_graphs(12, false, 20); }) == ErrorKind::EnumerationCapExceeded);
}

TEST_CASE("graphs with a fixed edge count") {
  std::size_t count = 0;
  for_each_graph_with_edges(4, 3, [&](const Graph& g) {
    CHECK(g.size() == 3);
    ++count;
    return true;
  });
  CHECK(count == 20);
  CHECK(kind_of([] { for_each_graph_with_edges(3, 4, [](const Graph&) { return true; }); }) ==
        ErrorKind::InvalidParam);
}

TEST_CASE("random generators") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 10;
    const Graph t = random_tree(n, rng);
    CHECK(t.order() == n);
    CHECK(t.size() == static_cast<std::size_t>(n - 1));
    CHECK(is_connected(t));
    const Graph c = random_connected_graph(1 + trial % 7, rng);
    CHECK(is_connected(c));
  }
}
