#include "sbond/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace sbond {

SearchLimits SearchLimits::from_environment() {
  SearchLimits limits;
  if (const char* raw = std::getenv("BONDAGE_BUDGET")) {
    const std::string_view text(raw);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) {
      limits.domination_nodes = value;
      limits.subset_evaluations = value;
    }
  }
  return limits;
}

}  // namespace sbond
