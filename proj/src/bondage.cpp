#include "sbond/bondage.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "sbond/combinations.hpp"
#include "sbond/domination.hpp"
#include "sbond/domination_kernel.hpp"
#include "sbond/error.hpp"

namespace sbond {

namespace {

void require_positive_k(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidParam, "k must be >= 1, got " + std::to_string(k));
}

/// Tests edge subsets of one graph for "gamma rises to at least target".
class RemovalProbe {
public:
  RemovalProbe(const Graph& g, int target, const SearchLimits& limits)
      : g_(g), target_(target), limits_(limits) {
    std::copy(g.adjacency().begin(), g.adjacency().end(), base_.begin());
  }

  bool reaches_target(std::span<const std::size_t> subset) {
    if (++evaluations_ > limits_.subset_evaluations) {
      throw Error(ErrorKind::SearchBudgetExceeded,
                  "bondage search exceeded " + std::to_string(limits_.subset_evaluations) + " subset evaluations");
    }
    const auto n = static_cast<std::size_t>(g_.order());
    std::array<VertexMask, kMaxVertices> adj = base_;
    for (std::size_t index : subset) {
      const auto& [u, v] = g_.edges()[index];
      adj[static_cast<std::size_t>(u)] &= ~vertex_bit(v);
      adj[static_cast<std::size_t>(v)] &= ~vertex_bit(u);
    }
    DominationKernel kernel(std::span<const VertexMask>(adj.data(), n), limits_.domination_nodes);
    return !kernel.exists_within(target_ - 1);
  }

  std::uint64_t evaluations() const noexcept { return evaluations_; }

private:
  const Graph& g_;
  int target_;
  SearchLimits limits_;
  std::array<VertexMask, kMaxVertices> base_{};
  std::uint64_t evaluations_ = 0;
};

int feasible_gamma(const Graph& g, int k, const SearchLimits& limits) {
  require_positive_k(k);
  const int g0 = gamma(g, limits);
  if (g0 + k > g.order()) {
    throw Error(ErrorKind::InfeasibleIncrease, "gamma " + std::to_string(g0) + " + k " + std::to_string(k) +
                                                   " exceeds order " + std::to_string(g.order()));
  }
  return g0;
}

}  // namespace

bool feasible_increase(const Graph& g, int k, const SearchLimits& limits) {
  require_positive_k(k);
  return gamma(g, limits) + k <= g.order();
}

SbResult sb_k(const Graph& g, int k, const SearchLimits& limits) {
  const int g0 = feasible_gamma(g, k, limits);
  RemovalProbe probe(g, g0 + k, limits);
  const std::size_t m = g.size();

  for (auto s = static_cast<std::size_t>(k); s <= m; ++s) {
    auto idx = first_combination(s);
    do {
      if (probe.reaches_target(idx)) {
        SbResult result{k, s, EdgeSet(idx), g0, g0 + k, probe.evaluations()};
        const int check = gamma(remove_edges(g, result.witness), limits);
        if (check != result.gamma_after) {
          throw Error(ErrorKind::InvariantViolation, "witness removal gives gamma " + std::to_string(check) +
                                                         ", expected " + std::to_string(result.gamma_after));
        }
        return result;
      }
    } while (next_combination(idx, m));
  }
  throw Error(ErrorKind::InvariantViolation, "feasible increase found no removal set");
}

SbResult bondage_number(const Graph& g, const SearchLimits& limits) { return sb_k(g, 1, limits); }

std::vector<EdgeSet> all_min_bondage_sets(const Graph& g, const SearchLimits& limits) {
  const SbResult best = bondage_number(g, limits);
  RemovalProbe probe(g, best.gamma_after, limits);
  std::vector<EdgeSet> sets;
  auto idx = first_combination(best.size);
  do {
    if (probe.reaches_target(idx)) sets.emplace_back(idx);
  } while (next_combination(idx, g.size()));
  return sets;
}

std::vector<Graph> mbg(const Graph& g, const SearchLimits& limits) {
  std::vector<Graph> out;
  for (const auto& set : all_min_bondage_sets(g, limits)) {
    Graph h = remove_edges(g, set);
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
  }
  return out;
}

std::size_t min_bondage_over(std::span<const Graph> graphs, const SearchLimits& limits) {
  if (graphs.empty()) throw Error(ErrorKind::InvalidParam, "min_bondage_over needs at least one graph");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& h : graphs) {
    best = std::min(best, bondage_number(h, limits).size);
    if (best == 1) break;  // b >= 1 for every graph
  }
  return best;
}

StepwiseReport stepwise_check(const Graph& g, const SearchLimits& limits) {
  feasible_gamma(g, 2, limits);
  StepwiseReport r;
  r.b = bondage_number(g, limits).size;
  const auto next = mbg(g, limits);
  r.b_mbg = min_bondage_over(next, limits);
  r.sb2 = sb_k(g, 2, limits).size;
  r.theorem_applies = r.b_mbg <= 2;
  r.equality_holds = r.sb2 == r.b + r.b_mbg;

  const auto summary = "b=" + std::to_string(r.b) + " b_mbg=" + std::to_string(r.b_mbg) +
                       " sb2=" + std::to_string(r.sb2);
  if (r.sb2 > r.b + r.b_mbg) {
    throw Error(ErrorKind::InvariantViolation, "Sb_2 exceeds two successive minimum moves: " + summary);
  }
  if (r.theorem_applies && !r.equality_holds) {
    throw Error(ErrorKind::InvariantViolation, "b(MBG) <= 2 but Sb_2 != b + b(MBG): " + summary);
  }
  return r;
}

MoveLedger greedy_iterative_moves(const Graph& g, int steps, const SearchLimits& limits) {
  if (steps < 0) throw Error(ErrorKind::InvalidParam, "steps must be non-negative");
  feasible_gamma(g, std::max(steps, 1), limits);
  MoveLedger ledger;
  Graph current = g;
  for (int step = 0; step < steps; ++step) {
    const SbResult move = bondage_number(current, limits);
    BondageMove record{move.witness, {}, move.gamma_after};
    for (std::size_t index : move.witness) record.removed_edges.push_back(current.edge(index));
    ledger.total_edges += move.size;
    ledger.moves.push_back(std::move(record));
    current = remove_edges(current, move.witness);
  }
  if (steps >= 2) {
    const std::size_t b = bondage_number(g, limits).size;
    const auto next = mbg(g, limits);
    ledger.two_step_optimum = b + min_bondage_over(next, limits);
  }
  return ledger;
}

SyncAdvantageScanner::SyncAdvantageScanner(SearchLimits limits, Logger log)
    : limits_(limits), log_(std::move(log)) {}

void SyncAdvantageScanner::consider(const Graph& g) {
  ++report_.examined;
  try {
    const StepwiseReport r = stepwise_check(g, limits_);
    if (r.sb2 < r.b + r.b_mbg) report_.findings.push_back({g, r.sb2, r.b, r.b_mbg, r.b + r.b_mbg});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InfeasibleIncrease) {
      ++report_.skipped_infeasible;
    } else if (e.kind() == ErrorKind::SearchBudgetExceeded) {
      ++report_.budget_errors;
    } else {
      throw;
    }
    if (log_) log_(e.what());
  }
}

SyncAdvantageReport search_sync_advantage(std::span<const Graph> graphs, const SearchLimits& limits,
                                          SyncAdvantageScanner::Logger log) {
  SyncAdvantageScanner scanner(limits, std::move(log));
  for (const auto& g : graphs) scanner.consider(g);
  return scanner.report();
}

MaxSbkResult max_sbk_over_nm(int n, std::size_t m, int k, const SearchLimits& limits, int cap) {
  require_positive_k(k);
  MaxSbkResult result;
  for_each_graph_with_edges(
      n, m,
      [&](const Graph& g) {
        ++result.graphs_examined;
        if (!feasible_increase(g, k, limits)) return true;
        ++result.feasible_graphs;
        const std::size_t value = sb_k(g, k, limits).size;
        if (!result.max_value || value > *result.max_value) {
          result.max_value = value;
          result.witnesses.clear();
          result.maximizer_count = 0;
        }
        if (value == *result.max_value) {
          ++result.maximizer_count;
          if (result.witnesses.size() < MaxSbkResult::kMaxWitnesses) result.witnesses.push_back(g);
        }
        return true;
      },
      cap);
  return result;
}

}  // namespace sbond
