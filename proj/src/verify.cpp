#include "sbond/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "sbond/bondage.hpp"
#include "sbond/bounds.hpp"
#include "sbond/domination.hpp"
#include "sbond/enumerate.hpp"
#include "sbond/error.hpp"
#include "sbond/family.hpp"
#include "sbond/io.hpp"
#include "sbond/random.hpp"

namespace sbond {

namespace {

struct Outcome {
  bool counted = true;
  bool passed = true;
  SuiteFailure failure;
  std::vector<std::string> notes;
};

Outcome fail(std::string graph, std::string expected, std::string actual) {
  Outcome o;
  o.passed = false;
  o.failure = {std::move(graph), std::move(expected), std::move(actual)};
  return o;
}

Outcome skipped(std::string note = {}) {
  Outcome o;
  o.counted = false;
  if (!note.empty()) o.notes.push_back(std::move(note));
  return o;
}

int or_default(int value, int fallback) { return value > 0 ? value : fallback; }

std::string str(std::size_t v) { return std::to_string(v); }

// Runs the cases, turning invariant violations inside a case into failures.
template <typename Input>
void run_cases(SuiteReport& report, const SuiteParams& params, const std::vector<Input>& inputs,
               const std::function<Outcome(const Input&)>& check, const std::function<std::string(const Input&)>& label) {
  auto outcomes = parallel_map<Outcome>(inputs.size(), params.threads, [&](std::size_t i) {
    try {
      return check(inputs[i]);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvariantViolation) throw;
      return fail(label(inputs[i]), "no invariant violation", e.what());
    }
  });
  for (auto& o : outcomes) {
    for (auto& note : o.notes) report.notes.push_back(std::move(note));
    if (!o.counted) continue;
    ++report.cases_run;
    if (o.passed) ++report.cases_passed;
    else report.failures.push_back(std::move(o.failure));
  }
}

std::string g6(const Graph& g) { return to_graph6(g); }

struct OrderK {
  int n;
  int k;
};

std::string label_nk(const char* family, const OrderK& c) {
  return std::string(family) + ":" + std::to_string(c.n) + " k=" + std::to_string(c.k);
}

void suite_paths(SuiteReport& report, const SuiteParams& p) {
  const int max_n = or_default(p.max_n, 12);
  const int max_k = or_default(p.max_k, 3);
  std::vector<OrderK> cases;
  for (int n = 2; n <= max_n; ++n)
    for (int k = 1; k <= max_k; ++k)
      if ((n + 2) / 3 + k <= n) cases.push_back({n, k});
  run_cases<OrderK>(
      report, p, cases,
      [&](const OrderK& c) {
        const auto actual = sb_k(path_graph(c.n), c.k, p.limits).size;
        const auto expected = sbk_path_formula(c.n, c.k);
        if (actual != expected) return fail(label_nk("path", c), str(expected), str(actual));
        if (c.k == 1 && bondage_path_formula(c.n) != expected) {
          return fail(label_nk("path", c), "bondage formula " + str(expected), str(bondage_path_formula(c.n)));
        }
        if (c.k == 2 && sb2_path_formula(c.n) != expected) {
          return fail(label_nk("path", c), "Sb_2 formula " + str(expected), str(sb2_path_formula(c.n)));
        }
        return Outcome{};
      },
      [](const OrderK& c) { return label_nk("path", c); });
}

void suite_cycles(SuiteReport& report, const SuiteParams& p) {
  const int max_n = or_default(p.max_n, 12);
  const int max_k = or_default(p.max_k, 3);
  std::vector<OrderK> cases;
  for (int n = 3; n <= max_n; ++n)
    for (int k = 1; k <= max_k; ++k)
      if ((n + 2) / 3 + k <= n) cases.push_back({n, k});
  run_cases<OrderK>(
      report, p, cases,
      [&](const OrderK& c) {
        const auto actual = sb_k(cycle_graph(c.n), c.k, p.limits).size;
        const auto expected = sbk_cycle_formula(c.n, c.k);
        if (actual != expected) return fail(label_nk("cycle", c), str(expected), str(actual));
        return Outcome{};
      },
      [](const OrderK& c) { return label_nk("cycle", c); });
}

// Every feasible k up to max_k (default: all) for n <= max_n, then order
// max_n + 1 for k <= 2.
void suite_complete(SuiteReport& report, const SuiteParams& p) {
  const int max_n = or_default(p.max_n, 6);
  const int max_k = or_default(p.max_k, kMaxVertices);
  std::vector<OrderK> cases;
  for (int n = 2; n <= max_n; ++n)
    for (int k = 1; k <= std::min(max_k, n - 1); ++k) cases.push_back({n, k});
  for (int k = 1; k <= std::min({2, max_k, max_n}); ++k) cases.push_back({max_n + 1, k});
  run_cases<OrderK>(
      report, p, cases,
      [&](const OrderK& c) {
        const auto actual = sb_k(complete_graph(c.n), c.k, p.limits).size;
        const auto expected = sbk_complete_formula(c.n, c.k);
        if (actual != expected) return fail(label_nk("complete", c), str(expected), str(actual));
        return Outcome{};
      },
      [](const OrderK& c) { return label_nk("complete", c); });
}

struct GraphK {
  Graph g;
  int k = 0;
  std::string tag;
};

void suite_trees(SuiteReport& report, const SuiteParams& p) {
  const int family_k = or_default(p.family_k, 4);
  const int max_n = or_default(p.max_n, 10);
  const int max_k = or_default(p.max_k, 3);
  const int samples = or_default(p.samples, 200);

  std::vector<GraphK> cases;
  for (int k = 1; k <= family_k; ++k) {
    cases.push_back({star_graph(k), k, "star"});
    cases.push_back({spider_graph(k), k, "spider"});
  }
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<int> order(2, std::max(2, max_n));
  for (int s = 0; s < samples; ++s) {
    Graph t = random_tree(order(rng), rng);
    for (int k = 1; k <= max_k; ++k) cases.push_back({t, k, "tree"});
  }

  run_cases<GraphK>(
      report, p, cases,
      [&](const GraphK& c) {
        const auto label = c.tag + " " + g6(c.g) + " k=" + std::to_string(c.k);
        if (c.tag == "star") {
          const auto actual = sb_k(c.g, c.k, p.limits).size;
          return actual == static_cast<std::size_t>(c.k) ? Outcome{} : fail(label, std::to_string(c.k), str(actual));
        }
        if (c.tag == "spider") {
          const int g0 = gamma(c.g, p.limits);
          if (g0 != c.k + 1) return fail(label, "gamma " + std::to_string(c.k + 1), "gamma " + std::to_string(g0));
          const auto actual = sb_k(c.g, c.k, p.limits).size;
          return actual == 2 * static_cast<std::size_t>(c.k) ? Outcome{}
                                                             : fail(label, std::to_string(2 * c.k), str(actual));
        }
        if (!feasible_increase(c.g, c.k, p.limits)) {
          if (c.g.size() >= static_cast<std::size_t>(c.k)) {
            return skipped(g6(c.g) + " k=" + std::to_string(c.k));
          }
          return skipped();
        }
        const auto bounds = tree_bounds(c.k);
        const auto actual = sb_k(c.g, c.k, p.limits).size;
        if (actual < bounds.lower || actual > bounds.upper) {
          return fail(label, "[" + str(bounds.lower) + ", " + str(bounds.upper) + "]", str(actual));
        }
        return Outcome{};
      },
      [](const GraphK& c) { return c.tag + " " + g6(c.g); });

  // Trees meeting "at least k edges" yet unable to rise by k, one note in total.
  if (!report.notes.empty()) {
    std::ostringstream os;
    os << report.notes.size() << " sampled (tree, k) pairs have at least k edges but gamma + k > n; skipped (e.g. "
       << report.notes.front() << ")";
    report.notes.assign(1, os.str());
  }
}

std::vector<Graph> connected_graphs_up_to(int max_n, int cap) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& g : enumerate_labeled_graphs(n, true, cap)) out.push_back(g);
  return out;
}

std::vector<Graph> all_graphs_up_to(int max_n, int cap) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& g : enumerate_labeled_graphs(n, false, cap)) out.push_back(g);
  return out;
}

void suite_stepwise(SuiteReport& report, const SuiteParams& p) {
  const int max_n = or_default(p.max_n, 5);
  const int samples = p.samples > 0 ? p.samples : 1000;
  const int sample_n = or_default(p.sample_n, max_n + 1);

  std::vector<Graph> graphs;
  std::size_t infeasible = 0;
  for (auto& g : connected_graphs_up_to(max_n, kHardEnumerationLimit)) {
    if (feasible_increase(g, 2, p.limits)) graphs.push_back(std::move(g));
    else ++infeasible;
  }
  std::mt19937_64 rng(p.seed);
  for (int drawn = 0; drawn < samples;) {
    Graph g = random_connected_graph(sample_n, rng);
    if (!feasible_increase(g, 2, p.limits)) continue;
    graphs.push_back(std::move(g));
    ++drawn;
  }

  std::vector<std::optional<StepwiseReport>> details(graphs.size());
  std::vector<std::size_t> index(graphs.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
  run_cases<std::size_t>(
      report, p, index,
      [&](const std::size_t& i) {
        details[i] = stepwise_check(graphs[i], p.limits);
        return Outcome{};
      },
      [&](const std::size_t& i) { return g6(graphs[i]); });

  std::size_t applies = 0;
  std::size_t strict = 0;
  for (const auto& d : details) {
    if (!d) continue;
    applies += d->theorem_applies ? 1 : 0;
    strict += d->sb2 < d->b + d->b_mbg ? 1 : 0;
  }
  report.notes.push_back(str(infeasible) + " connected graphs skipped (gamma + 2 > n)");
  report.notes.push_back(str(applies) + " graphs with b(MBG) <= 2; " + str(strict) +
                         " with Sb_2 < b + b(MBG)");
}

void suite_bounds(SuiteReport& report, const SuiteParams& p) {
  const int max_n = or_default(p.max_n, 6);
  const auto graphs = connected_graphs_up_to(max_n, kHardEnumerationLimit);
  run_cases<Graph>(
      report, p, graphs,
      [&](const Graph& g) {
        std::optional<BoundReport> p3;
        std::optional<BoundReport> p2p2;
        try {
          p3 = induced_p3_bound(g);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PatternAbsent) throw;
        }
        try {
          p2p2 = induced_2p2_bound(g);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PatternAbsent) throw;
        }
        if (!p3 && !p2p2) return skipped();
        std::size_t sb2 = 0;
        try {
          sb2 = sb_k(g, 2, p.limits).size;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::InfeasibleIncrease) throw;
          return fail(g6(g), "feasible increase of 2", "infeasible despite pattern");
        }
        for (const auto* bound : {&p3, &p2p2}) {
          if (!*bound) continue;
          const auto& r = **bound;
          if (incident_edge_count(g, r.witness) != r.value) {
            return fail(g6(g), r.bound_name + " witness recomputes to " + str(r.value),
                        str(incident_edge_count(g, r.witness)));
          }
          if (sb2 > r.value) return fail(g6(g), "Sb_2 <= " + r.bound_name + " " + str(r.value), str(sb2));
        }
        return Outcome{};
      },
      [](const Graph& g) { return g6(g); });
}

void suite_vizing(SuiteReport& report, const SuiteParams& p) {
  const int max_n = or_default(p.max_n, 6);
  std::vector<int> orders;
  for (int n = 2; n <= max_n; ++n) orders.push_back(n);
  // Per order: the largest edge count seen for each domination number.
  const auto maxima = parallel_map<std::vector<std::size_t>>(orders.size(), p.threads, [&](std::size_t i) {
    const int n = orders[i];
    std::vector<std::size_t> best(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& g : enumerate_labeled_graphs(n, false, kHardEnumerationLimit)) {
      auto& slot = best[static_cast<std::size_t>(gamma(g, p.limits))];
      slot = std::max(slot, g.size());
    }
    return best;
  });

  std::vector<OrderK> cases;
  for (int n = 2; n <= max_n; ++n)
    for (int d = 2; d <= n; ++d) cases.push_back({n, d});
  run_cases<OrderK>(
      report, p, cases,
      [&](const OrderK& c) {
        const auto label = "n=" + std::to_string(c.n) + " d=" + std::to_string(c.k);
        const auto expected = vizing_max_edges(c.n, c.k);
        const auto observed = maxima[static_cast<std::size_t>(c.n - 2)][static_cast<std::size_t>(c.k)];
        if (observed != expected) return fail(label, "max edges " + str(expected), str(observed));
        const Graph h = vizing_extremal_graph(c.n, c.k);
        const int hg = gamma(h, p.limits);
        if (hg != c.k || h.size() != expected) {
          return fail(label + " extremal " + g6(h), "gamma " + std::to_string(c.k) + ", " + str(expected) + " edges",
                      "gamma " + std::to_string(hg) + ", " + str(h.size()) + " edges");
        }
        return Outcome{};
      },
      [](const OrderK& c) { return "n=" + std::to_string(c.n) + " d=" + std::to_string(c.k); });
}

void suite_pendant(SuiteReport& report, const SuiteParams& p) {
  const int max_n = or_default(p.max_n, 6);
  std::vector<Graph> graphs;
  for (auto& g : all_graphs_up_to(max_n, kHardEnumerationLimit))
    if (!forced_pendant_vertices(g).empty()) graphs.push_back(std::move(g));
  run_cases<Graph>(
      report, p, graphs,
      [&](const Graph& g) {
        const VertexMask forced = forced_pendant_vertices(g).mask();
        for (const auto& d : all_min_dominating_sets(g, p.limits)) {
          if ((forced & ~d.mask()) != 0) {
            return fail(g6(g), "forced " + to_string(VertexSet::from_mask(forced)) + " in every minimum set",
                        "minimum set " + to_string(d));
          }
        }
        const auto b = bondage_number(g, p.limits).size;
        if (b != 1) return fail(g6(g), "b = 1", "b = " + str(b));
        if (const auto pendant = pendant_sbk(g)) {
          const auto actual = sb_k(g, pendant->k_star, p.limits).size;
          if (actual != pendant->value) {
            return fail(g6(g), "Sb_" + std::to_string(pendant->k_star) + " = " + str(pendant->value), str(actual));
          }
        }
        return Outcome{};
      },
      [](const Graph& g) { return g6(g); });
}

void suite_compose(SuiteReport& report, const SuiteParams& p) {
  const int max_n = or_default(p.max_n, 5);
  const int max_k = or_default(p.max_k, 3);
  const int samples = or_default(p.samples, 100);
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<int> order(1, max_n);
  std::vector<Graph> unions;
  for (int s = 0; s < samples; ++s) {
    Graph a = random_connected_graph(order(rng), rng);
    Graph b = random_connected_graph(order(rng), rng);
    unions.push_back(disjoint_union(a, b));
  }
  run_cases<Graph>(
      report, p, unions,
      [&](const Graph& g) {
        const auto tables = component_sb_tables(g, max_k, p.limits);
        for (int k = 1; k <= max_k; ++k) {
          if (!feasible_increase(g, k, p.limits)) break;
          const auto direct = sb_k(g, k, p.limits).size;
          const auto composed = disjoint_compose_sbk(tables, k);
          if (direct != composed) {
            return fail(g6(g) + " k=" + std::to_string(k), "composed " + str(composed), "direct " + str(direct));
          }
        }
        return Outcome{};
      },
      [](const Graph& g) { return g6(g); });
}

using SuiteFn = void (*)(SuiteReport&, const SuiteParams&);

const std::map<std::string, SuiteFn, std::less<>>& registry() {
  static const std::map<std::string, SuiteFn, std::less<>> suites{
      {"paths", suite_paths},     {"cycles", suite_cycles},   {"complete", suite_complete},
      {"trees", suite_trees},     {"stepwise", suite_stepwise}, {"bounds", suite_bounds},
      {"vizing", suite_vizing},   {"pendant", suite_pendant}, {"compose", suite_compose},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"paths",  "cycles", "complete", "trees",  "stepwise",
                                              "bounds", "vizing", "pendant",  "compose"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteParams& params) {
  const auto& suites = registry();
  const auto it = suites.find(name);
  if (it == suites.end()) throw Error(ErrorKind::InvalidParam, "unknown suite '" + std::string(name) + "'");
  SuiteReport report;
  report.suite = std::string(name);
  const auto start = std::chrono::steady_clock::now();
  it->second(report, params);
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sbond
