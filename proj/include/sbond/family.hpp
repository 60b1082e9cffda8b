#pragma once

#include <string>
#include <string_view>

#include "sbond/graph.hpp"

namespace sbond {

enum class Family { Path, Cycle, Complete, Star, Spider };

/// A named graph family with its size parameter: n for path/cycle/complete,
/// k for star/spider.
struct FamilySpec {
  Family family = Family::Path;
  int param = 1;
};

/// Throws InvalidFamilyParam when the parameter is out of range for the family.
void validate(const FamilySpec& spec);

/// path(n): 0-1-...-(n-1). cycle(n): path plus (0, n-1). complete(n): all pairs.
/// star(k): 0 joined to 1..k.
/// spider(k): root 0 with children 1..k+1; child k+1 is a leaf and each child
/// i in 1..k carries one further leaf k+1+i. 2k+2 vertices, 2k+1 edges.
Graph generate(const FamilySpec& spec);

/// Parses "family:param", e.g. "path:7" or "spider:2".
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
std::string_view to_string(Family family) noexcept;

inline Graph path_graph(int n) { return generate({Family::Path, n}); }
inline Graph cycle_graph(int n) { return generate({Family::Cycle, n}); }
inline Graph complete_graph(int n) { return generate({Family::Complete, n}); }
inline Graph star_graph(int k) { return generate({Family::Star, k}); }
inline Graph spider_graph(int k) { return generate({Family::Spider, k}); }

}  // namespace sbond
