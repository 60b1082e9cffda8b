#include "sbond/family.hpp"

#include <charconv>
#include <vector>

#include "sbond/error.hpp"

namespace sbond {

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Star: return "star";
    case Family::Spider: return "spider";
  }
  return "?";
}

std::string to_string(const FamilySpec& spec) {
  return std::string(to_string(spec.family)) + ":" + std::to_string(spec.param);
}

void validate(const FamilySpec& spec) {
  const int p = spec.param;
  auto fail = [&](const std::string& need) {
    throw Error(ErrorKind::InvalidFamilyParam, to_string(spec) + " requires " + need);
  };
  switch (spec.family) {
    case Family::Path:
    case Family::Complete:
      if (p < 1 || p > kMaxVertices) fail("1 <= n <= 64");
      break;
    case Family::Cycle:
      if (p < 3 || p > kMaxVertices) fail("3 <= n <= 64");
      break;
    case Family::Star:
      if (p < 1 || p + 1 > kMaxVertices) fail("1 <= k <= 63");
      break;
    case Family::Spider:
      if (p < 1 || 2 * p + 2 > kMaxVertices) fail("1 <= k <= 31");
      break;
  }
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  const int p = spec.param;
  std::vector<Edge> edges;
  int n = p;
  switch (spec.family) {
    case Family::Path:
      for (int v = 0; v + 1 < p; ++v) edges.push_back({v, v + 1});
      break;
    case Family::Cycle:
      for (int v = 0; v + 1 < p; ++v) edges.push_back({v, v + 1});
      edges.push_back({0, p - 1});
      break;
    case Family::Complete:
      for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v) edges.push_back({u, v});
      break;
    case Family::Star:
      n = p + 1;
      for (int v = 1; v <= p; ++v) edges.push_back({0, v});
      break;
    case Family::Spider:
      n = 2 * p + 2;
      for (int v = 1; v <= p + 1; ++v) edges.push_back({0, v});
      for (int i = 1; i <= p; ++i) edges.push_back({i, p + 1 + i});
      break;
  }
  return Graph(n, edges);
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::InvalidFamilyParam, "expected family:param, got '" + std::string(text) + "'");
  }
  const auto name = text.substr(0, colon);
  const auto digits = text.substr(colon + 1);
  FamilySpec spec;
  if (name == "path") spec.family = Family::Path;
  else if (name == "cycle") spec.family = Family::Cycle;
  else if (name == "complete") spec.family = Family::Complete;
  else if (name == "star") spec.family = Family::Star;
  else if (name == "spider") spec.family = Family::Spider;
  else throw Error(ErrorKind::InvalidFamilyParam, "unknown family '" + std::string(name) + "'");

  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, spec.param);
  if (ec != std::errc{} || ptr != end || digits.empty()) {
    throw Error(ErrorKind::InvalidFamilyParam, "bad parameter '" + std::string(digits) + "'");
  }
  validate(spec);
  return spec;
}

}  // namespace sbond
