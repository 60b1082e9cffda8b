#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>

#include "sbond/graph.hpp"

namespace sbond {

inline constexpr int kDefaultEnumerationCap = 7;
/// Largest order whose pair count fits the 64-bit edge-subset code.
inline constexpr int kHardEnumerationLimit = 11;

/// Graph on n vertices whose edge set is the set bits of `code`; bit i selects
/// the i-th pair of K_n in lexicographic order.
Graph labeled_graph_from_code(int n, std::uint64_t code);

/// Every labeled graph on n vertices, in increasing edge-subset code order,
/// optionally restricted to connected graphs.
class LabeledGraphRange {
public:
  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using pointer = const Graph*;
    using reference = const Graph&;

    iterator() = default;
    const Graph& operator*() const { return current_; }
    const Graph* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    std::uint64_t code() const noexcept { return code_; }
    friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.code_ == b.code_; }

  private:
    friend class LabeledGraphRange;
    iterator(const LabeledGraphRange* range, std::uint64_t code);
    void settle();

    const LabeledGraphRange* range_ = nullptr;
    std::uint64_t code_ = 0;
    Graph current_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, limit_); }

  int order() const noexcept { return n_; }
  bool connected_only() const noexcept { return connected_only_; }
  /// 2^(n choose 2): number of codes scanned, before any filtering.
  std::uint64_t code_count() const noexcept { return limit_; }

private:
  friend LabeledGraphRange enumerate_labeled_graphs(int, bool, int);
  LabeledGraphRange(int n, bool connected_only);

  int n_;
  bool connected_only_;
  std::uint64_t limit_;
};

/// Throws EnumerationCapExceeded when n > cap (or n > kHardEnumerationLimit).
LabeledGraphRange enumerate_labeled_graphs(int n, bool connected_only, int cap = kDefaultEnumerationCap);

/// Visits every labeled graph on n vertices with exactly m edges, in
/// lexicographic order of the chosen pair indices. Stops early when `visit`
/// returns false.
void for_each_graph_with_edges(int n, std::size_t m, const std::function<bool(const Graph&)>& visit,
                               int cap = kDefaultEnumerationCap);

}  // namespace sbond
