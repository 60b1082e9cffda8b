#pragma once

#include <cstdint>

namespace sbond {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Per-call work limits. Exceeding one raises SearchBudgetExceeded; no search
/// ever returns an approximate answer.
struct SearchLimits {
  /// Branch nodes allowed in one domination-number search.
  std::uint64_t domination_nodes = kDefaultSearchBudget;
  /// Edge subsets examined in one synchronous-bondage search.
  std::uint64_t subset_evaluations = kDefaultSearchBudget;

  /// Defaults, with both budgets replaced by $BONDAGE_BUDGET when it holds a
  /// positive integer.
  static SearchLimits from_environment();
};

}  // namespace sbond
