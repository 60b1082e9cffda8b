#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace sbond {

/// Advances `idx` (a strictly increasing k-subset of 0..universe-1) to the next
/// subset in lexicographic order. Returns false once the last subset is passed.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t universe) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < universe - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// First k-subset {0, .., k-1}.
inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace sbond
