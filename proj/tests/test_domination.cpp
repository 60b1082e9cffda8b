#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sbond/domination.hpp"
#include "sbond/enumerate.hpp"
#include "sbond/error.hpp"
#include "sbond/family.hpp"
#include "sbond/random.hpp"

using namespace sbond;

TEST_CASE("is_dominating") {
  const Graph p3 = path_graph(3);
  CHECK(is_dominating(p3, VertexSet{1}));
  CHECK_FALSE(is_dominating(p3, VertexSet{0}));

  const Graph bare(3, {});
  CHECK(is_dominating(bare, VertexSet{0, 1, 2}));
  CHECK_FALSE(is_dominating(bare, VertexSet{0, 1}));
  CHECK_FALSE(is_dominating(bare, VertexSet{1, 2}));
  CHECK_FALSE(is_dominating(bare, VertexSet{}));
  CHECK_THROWS_AS(is_dominating(p3, VertexSet{3}), Error);
}

TEST_CASE("domination_number on named graphs") {
  CHECK(domination_number(path_graph(7)).gamma == 3);
  CHECK(domination_number(complete_graph(5)).gamma == 1);
  CHECK(domination_number(spider_graph(2)).gamma == 3);
  CHECK(domination_number(Graph(1, {})).gamma == 1);

  const auto empty = domination_number(Graph(0, {}));
  CHECK(empty.gamma == 0);
  CHECK(empty.witness.empty());

  for (int n = 1; n <= 20; ++n) CHECK(gamma(path_graph(n)) == (n + 2) / 3);
  for (int k = 1; k <= 10; ++k) CHECK(gamma(spider_graph(k)) == k + 1);
}

TEST_CASE("canonical witness is the lexicographically smallest minimum set") {
  CHECK(domination_number(complete_graph(5)).witness == VertexSet{0});
  CHECK(domination_number(path_graph(4)).witness == VertexSet{0, 2});
  CHECK(domination_number(spider_graph(2)).witness == VertexSet{0, 1, 2});
  // Isolated vertices are in every dominating set.
  CHECK(domination_number(Graph(4, {{1, 2}})).witness == VertexSet{0, 1, 3});

  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_labeled_graphs(n, false)) {
      const auto sets = oracle::min_dominating_sets(g);
      std::vector<VertexSet> as_sets;
      for (auto m : sets) as_sets.push_back(VertexSet::from_mask(m));
      std::sort(as_sets.begin(), as_sets.end());
      REQUIRE(domination_number(g).witness == as_sets.front());
    }
  }
}

TEST_CASE("domination_number agrees with unpruned subset iteration") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& g : enumerate_labeled_graphs(n, false)) {
      const auto r = domination_number(g);
      REQUIRE(r.gamma == oracle::gamma(g));
      REQUIRE(r.witness.size() == static_cast<std::size_t>(r.gamma));
      REQUIRE(is_dominating(g, r.witness));
    }
  }
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 8 + trial % 7;
    const std::uint64_t pairs = static_cast<std::uint64_t>(n * (n - 1) / 2);
    const Graph g = labeled_graph_from_code(n, rng() & rng() & ((1ULL << pairs) - 1));
    REQUIRE(gamma(g) == oracle::gamma(g));
  }
}

TEST_CASE("domination scales to a 24-vertex instance") {
  std::mt19937_64 rng(5);
  const Graph t = random_tree(24, rng);
  const auto r = domination_number(t);
  CHECK(is_dominating(t, r.witness));
  CHECK(r.gamma <= 12);
  CHECK(gamma(path_graph(24)) == 8);
  CHECK(gamma(cycle_graph(24)) == 8);
}

TEST_CASE("node budget is a hard error") {
  SearchLimits tight;
  tight.domination_nodes = 3;
  CHECK_THROWS_WITH_AS(domination_number(path_graph(30), tight), doctest::Contains("SearchBudgetExceeded"), Error);
}

TEST_CASE("all_min_dominating_sets") {
  CHECK(all_min_dominating_sets(path_graph(3)) == std::vector<VertexSet>{{1}});
  CHECK(all_min_dominating_sets(complete_graph(3)) == std::vector<VertexSet>{{0}, {1}, {2}});
  CHECK(all_min_dominating_sets(path_graph(4)) == std::vector<VertexSet>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});

  for (int n = 0; n <= 5; ++n) {
    for (const auto& g : enumerate_labeled_graphs(n, false)) {
      std::vector<VertexSet> expected;
      for (auto m : oracle::min_dominating_sets(g)) expected.push_back(VertexSet::from_mask(m));
      std::sort(expected.begin(), expected.end());
      REQUIRE(all_min_dominating_sets(g) == expected);
    }
  }
}

TEST_CASE("forced pendant vertices") {
  CHECK(forced_pendant_vertices(star_graph(3)) == VertexSet{0});
  CHECK(forced_pendant_vertices(path_graph(5)).empty());
  CHECK(forced_pendant_vertices(path_graph(3)) == VertexSet{1});
  // The spider root has a single leaf child.
  CHECK_FALSE(forced_pendant_vertices(spider_graph(2)).contains(0));

  SUBCASE("contained in every minimum dominating set of small trees") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 400; ++trial) {
      const Graph t = random_tree(2 + trial % 5, rng);
      const VertexMask forced = forced_pendant_vertices(t).mask();
      for (const auto& d : all_min_dominating_sets(t)) REQUIRE((forced & ~d.mask()) == 0);
    }
  }
}

TEST_CASE("pendant_partition") {
  const auto star = pendant_partition(star_graph(4));
  CHECK(star.roots == VertexSet{0});
  CHECK(star.leaves == VertexSet{1, 2, 3, 4});

  const auto path = pendant_partition(path_graph(6));
  CHECK(path.roots.empty());
  CHECK(path.leaves.empty());

  const auto two = pendant_partition(disjoint_union(star_graph(2), star_graph(2)));
  CHECK(two.roots.size() == 2);
  CHECK(two.leaves.size() == 4);
}

TEST_CASE("edge removal never lowers gamma and one edge raises it by at most one") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_labeled_graphs(n, false)) {
      const int base = gamma(g);
      for (std::size_t i = 0; i < g.size(); ++i) {
        const int after = gamma(remove_edges(g, EdgeSet{i}));
        REQUIRE((after == base || after == base + 1));
      }
    }
  }
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 6 + trial % 2;
    const Graph g = labeled_graph_from_code(n, rng() & ((1ULL << (n * (n - 1) / 2)) - 1));
    const int base = gamma(g);
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (rng() % 3 == 0) picked.push_back(i);
    CHECK(gamma(remove_edges(g, EdgeSet(picked))) >= base);
    if (!g.size()) continue;
    const int after = gamma(remove_edges(g, EdgeSet{rng() % g.size()}));
    CHECK((after == base || after == base + 1));
  }
}

TEST_CASE("gamma is additive over disjoint unions") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph a = random_connected_graph(1 + trial % 6, rng);
    const Graph b = random_tree(1 + trial % 9, rng);
    CHECK(gamma(disjoint_union(a, b)) == gamma(a) + gamma(b));
  }
}
