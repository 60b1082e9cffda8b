#include "sbond/domination_kernel.hpp"

#include <algorithm>
#include <cassert>

#include "sbond/error.hpp"

namespace sbond {

DominationKernel::DominationKernel(std::span<const VertexMask> adjacency, std::uint64_t node_budget)
    : n_(static_cast<int>(adjacency.size())), budget_(node_budget) {
  assert(n_ <= kMaxVertices);
  for (int v = 0; v < n_; ++v) {
    const VertexMask nb = adjacency[static_cast<std::size_t>(v)];
    closed_[static_cast<std::size_t>(v)] = nb | vertex_bit(v);
    if (nb == 0) isolated_ |= vertex_bit(v);
  }
}

void DominationKernel::tick() {
  if (++nodes_ > budget_) {
    throw Error(ErrorKind::SearchBudgetExceeded,
                "domination search exceeded " + std::to_string(budget_) + " branch nodes");
  }
}

int DominationKernel::packing_bound(VertexMask undominated, VertexMask allowed) const {
  int count = 0;
  VertexMask used = 0;
  for (VertexMask m = undominated; m; m &= m - 1) {
    const VertexMask cand = closed_[static_cast<std::size_t>(std::countr_zero(m))] & allowed;
    if ((cand & used) == 0) {
      ++count;
      used |= cand;
    }
  }
  return count;
}

int DominationKernel::greedy_cover(VertexMask undominated, VertexMask allowed, VertexMask& chosen) const {
  int picked = 0;
  while (undominated) {
    int best = -1;
    int best_gain = 0;
    for (VertexMask m = allowed; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int gain = std::popcount(closed_[static_cast<std::size_t>(v)] & undominated);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best < 0) return -1;
    chosen |= vertex_bit(best);
    undominated &= ~closed_[static_cast<std::size_t>(best)];
    ++picked;
  }
  return picked;
}

bool DominationKernel::search(VertexMask undominated, VertexMask allowed, int limit, VertexMask chosen) {
  tick();
  if (undominated == 0) {
    solution_ = chosen;
    return true;
  }
  if (limit <= 0) return false;

  int pivot = -1;
  int pivot_choices = kMaxVertices + 1;
  for (VertexMask m = undominated; m; m &= m - 1) {
    const int u = std::countr_zero(m);
    const int choices = std::popcount(closed_[static_cast<std::size_t>(u)] & allowed);
    if (choices == 0) return false;
    if (choices < pivot_choices) {
      pivot_choices = choices;
      pivot = u;
      if (choices == 1) break;
    }
  }
  if (packing_bound(undominated, allowed) > limit) return false;

  // Try dominators covering the most undominated vertices first.
  std::array<std::pair<int, int>, kMaxVertices> order{};
  std::size_t count = 0;
  for (VertexMask m = closed_[static_cast<std::size_t>(pivot)] & allowed; m; m &= m - 1) {
    const int c = std::countr_zero(m);
    order[count++] = {-std::popcount(closed_[static_cast<std::size_t>(c)] & undominated), c};
  }
  std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count));

  VertexMask remaining = allowed;
  for (std::size_t i = 0; i < count; ++i) {
    const int c = order[i].second;
    remaining &= ~vertex_bit(c);
    if (search(undominated & ~closed_[static_cast<std::size_t>(c)], remaining, limit - 1, chosen | vertex_bit(c))) {
      return true;
    }
  }
  return false;
}

bool DominationKernel::exists_within(VertexMask undominated, VertexMask allowed, int limit) {
  return search(undominated, allowed, limit, 0);
}

bool DominationKernel::exists_within(int limit) {
  const int forced = std::popcount(isolated_);
  if (forced > limit) return false;
  const VertexMask rest = full_mask(n_) & ~isolated_;
  return search(rest, rest, limit - forced, isolated_);
}

int DominationKernel::minimum() {
  const VertexMask rest = full_mask(n_) & ~isolated_;
  const int forced = std::popcount(isolated_);
  VertexMask greedy = isolated_;
  const int upper = greedy_cover(rest, rest, greedy);
  assert(upper >= 0);
  int best = forced + upper;
  VertexMask best_set = greedy;
  while (best > forced && search(rest, rest, best - forced - 1, isolated_)) {
    best_set = solution_;
    best = std::popcount(best_set);
  }
  solution_ = best_set;
  return best;
}

VertexMask DominationKernel::lex_smallest_minimum(int gamma) {
  const VertexMask all = full_mask(n_);
  VertexMask chosen = 0;
  VertexMask covered = 0;
  for (int v = 0; v < n_ && std::popcount(chosen) < gamma; ++v) {
    const VertexMask trial = chosen | vertex_bit(v);
    const VertexMask trial_covered = covered | closed_[static_cast<std::size_t>(v)];
    const VertexMask later = all & ~full_mask(v + 1);
    if (exists_within(all & ~trial_covered, later, gamma - std::popcount(trial))) {
      chosen = trial;
      covered = trial_covered;
    }
  }
  assert((covered & all) == all);
  solution_ = chosen;
  return chosen;
}

void DominationKernel::enumerate(VertexMask undominated, VertexMask allowed, int remaining, VertexMask chosen,
                                 const std::function<void(VertexMask)>& visit) {
  tick();
  if (undominated == 0) {
    if (remaining == 0) visit(chosen);
    return;
  }
  if (remaining == 0 || packing_bound(undominated, allowed) > remaining) return;

  int pivot = -1;
  int pivot_choices = kMaxVertices + 1;
  for (VertexMask m = undominated; m; m &= m - 1) {
    const int u = std::countr_zero(m);
    const int choices = std::popcount(closed_[static_cast<std::size_t>(u)] & allowed);
    if (choices == 0) return;
    if (choices < pivot_choices) {
      pivot_choices = choices;
      pivot = u;
    }
  }
  VertexMask rest = allowed;
  for (VertexMask m = closed_[static_cast<std::size_t>(pivot)] & allowed; m; m &= m - 1) {
    const int c = std::countr_zero(m);
    rest &= ~vertex_bit(c);
    enumerate(undominated & ~closed_[static_cast<std::size_t>(c)], rest, remaining - 1, chosen | vertex_bit(c), visit);
  }
}

void DominationKernel::for_each_minimum(int gamma, const std::function<void(VertexMask)>& visit) {
  const VertexMask rest = full_mask(n_) & ~isolated_;
  const int forced = std::popcount(isolated_);
  if (forced > gamma) return;
  enumerate(rest, rest, gamma - forced, isolated_, visit);
}

}  // namespace sbond
