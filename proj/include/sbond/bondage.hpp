#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sbond/enumerate.hpp"
#include "sbond/graph.hpp"
#include "sbond/limits.hpp"

namespace sbond {

/// Outcome of a minimum k-synchronous bondage search.
struct SbResult {
  int k = 0;
  /// Sb_k(G): fewest edges whose removal raises gamma by exactly k.
  std::size_t size = 0;
  /// Lexicographically smallest minimum set, as indices into G's edge list.
  EdgeSet witness;
  int gamma_before = 0;
  int gamma_after = 0;
  std::uint64_t subsets_examined = 0;
};

/// gamma(g) + k <= |V|. Removing every edge yields gamma = |V| and each single
/// removal raises gamma by at most one, so this is exactly when Sb_k exists.
bool feasible_increase(const Graph& g, int k, const SearchLimits& limits = {});

/// Exact Sb_k(g) by size-ordered subset search.
///
/// Subsets are tried by increasing size s = k, k+1, ... and lexicographically
/// within a size; the first subset raising gamma by at least k is returned.
/// That subset raises gamma by exactly k: walking its edges in any order moves
/// gamma by 0 or 1 per edge, so an overshoot would put a strictly smaller
/// prefix at exactly +k.
///
/// Throws InvalidParam (k < 1), InfeasibleIncrease, SearchBudgetExceeded.
SbResult sb_k(const Graph& g, int k, const SearchLimits& limits = {});

/// b(G) = Sb_1(G).
SbResult bondage_number(const Graph& g, const SearchLimits& limits = {});

/// All edge sets of size b(g) whose removal raises gamma, lexicographic.
std::vector<EdgeSet> all_min_bondage_sets(const Graph& g, const SearchLimits& limits = {});

/// MBG(g): g minus each minimum bondage set. Labeled, so one graph per set.
std::vector<Graph> mbg(const Graph& g, const SearchLimits& limits = {});

/// min b(G) over the list. Throws InvalidParam on an empty list and
/// InfeasibleIncrease if a member has no bondage set.
std::size_t min_bondage_over(std::span<const Graph> graphs, const SearchLimits& limits = {});

struct StepwiseReport {
  std::size_t b = 0;
  std::size_t b_mbg = 0;
  std::size_t sb2 = 0;
  /// b(MBG(G)) <= 2, the hypothesis under which Sb_2 = b + b(MBG).
  bool theorem_applies = false;
  bool equality_holds = false;
};

/// Computes b, b(MBG), Sb_2 and checks them against each other. Two
/// successive minimum moves always bound Sb_2 from above, and the bound is
/// tight when b(MBG) <= 2; either failing raises InvariantViolation.
StepwiseReport stepwise_check(const Graph& g, const SearchLimits& limits = {});

struct BondageMove {
  /// Indices into the edge list of the graph the move was applied to.
  EdgeSet removed;
  /// The same edges, as vertex pairs.
  std::vector<Edge> removed_edges;
  int gamma_after = 0;
};

struct MoveLedger {
  std::vector<BondageMove> moves;
  std::size_t total_edges = 0;
  /// Best two-move total, min over first minimum moves of b(G) + b(result),
  /// i.e. b(G) + b(MBG(G)). Present when two or more steps were requested.
  std::optional<std::size_t> two_step_optimum;
};

/// Applies `steps` minimum bondage moves, each the canonical (lexicographically
/// smallest) minimum bondage set of the current graph.
MoveLedger greedy_iterative_moves(const Graph& g, int steps, const SearchLimits& limits = {});

struct SyncAdvantage {
  Graph graph;
  std::size_t sb2 = 0;
  std::size_t b = 0;
  std::size_t b_mbg = 0;
  std::size_t b_plus_bmbg = 0;
};

struct SyncAdvantageReport {
  std::vector<SyncAdvantage> findings;
  std::size_t examined = 0;
  std::size_t skipped_infeasible = 0;
  std::size_t budget_errors = 0;
};

/// Streams graphs through stepwise_check and keeps those where one 2-move
/// beats two successive minimum bondage moves (Sb_2 < b + b(MBG)).
/// Infeasible graphs and per-graph budget overruns are counted, logged and
/// skipped; invariant violations propagate.
class SyncAdvantageScanner {
public:
  using Logger = std::function<void(const std::string&)>;

  explicit SyncAdvantageScanner(SearchLimits limits = {}, Logger log = {});

  void consider(const Graph& g);
  const SyncAdvantageReport& report() const noexcept { return report_; }

private:
  SearchLimits limits_;
  Logger log_;
  SyncAdvantageReport report_;
};

SyncAdvantageReport search_sync_advantage(std::span<const Graph> graphs, const SearchLimits& limits = {},
                                          SyncAdvantageScanner::Logger log = {});

struct MaxSbkResult {
  /// Absent when no graph with n vertices and m edges admits an increase of k.
  std::optional<std::size_t> max_value;
  /// First maximizers in enumeration order, at most kMaxWitnesses.
  std::vector<Graph> witnesses;
  std::size_t maximizer_count = 0;
  std::size_t graphs_examined = 0;
  std::size_t feasible_graphs = 0;

  static constexpr std::size_t kMaxWitnesses = 10;
};

/// Largest Sb_k over all labeled graphs with n vertices and m edges.
/// Throws EnumerationCapExceeded (n > cap) and InvalidParam (m too large).
MaxSbkResult max_sbk_over_nm(int n, std::size_t m, int k, const SearchLimits& limits = {},
                             int cap = kDefaultEnumerationCap);

}  // namespace sbond
