#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sbond/limits.hpp"

namespace sbond {

struct SuiteFailure {
  /// graph6 of the offending graph, or a description for parameter-only cases.
  std::string graph;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases_run = 0;
  std::size_t cases_passed = 0;
  std::vector<SuiteFailure> failures;
  /// Observations that are neither passes nor failures.
  std::vector<std::string> notes;
  double wall_ms = 0;

  bool ok() const noexcept { return failures.empty(); }
};

/// Suite knobs. Zero means "use the suite's default".
struct SuiteParams {
  int max_n = 0;
  int max_k = 0;
  /// Random cases drawn (stepwise, trees, compose).
  int samples = 0;
  /// Order of sampled graphs beyond the exhaustive range (stepwise).
  int sample_n = 0;
  /// Largest k for the star/spider sharpness checks (trees).
  int family_k = 0;
  std::uint64_t seed = 0x5eedULL;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  SearchLimits limits = {};
};

/// paths, cycles, complete, trees, stepwise, bounds, vizing, pendant, compose.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws InvalidParam for an unknown name and propagates
/// SearchBudgetExceeded / EnumerationCapExceeded.
SuiteReport run_suite(std::string_view name, const SuiteParams& params);

/// Runs `count` independent jobs on a worker pool and returns their results
/// in index order. The first exception by index is rethrown after all
/// workers finish.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& job);

}  // namespace sbond

#include "sbond/parallel_map.ipp"
