#pragma once

#include <optional>
#include <vector>

#include "prismatic/graph.hpp"

namespace prismatic {

struct HittingSet {
  std::vector<int> vertices;  // ascending
  bool proven_minimum = false;
};

// True iff every triangle of g contains a member of `vertices`.
bool is_hitting_set(const Graph& g, const std::vector<int>& vertices);

// Bounded search: a hitting set of size <= k if one exists, else nothing.
// Branches on the three vertices of the first uncovered triangle, pruned by
// a greedy disjoint-triangle lower bound.  Requires a diamond- and K4-free
// input.
std::optional<HittingSet> find_hitting_set_at_most(const Graph& g, int k);

// Exact minimum on any graph, lexicographically least among all minimum
// hitting sets: iterative deepening to find the optimum size, then
// position-by-position prefix fixing.
HittingSet min_hitting_set(const Graph& g);

}  // namespace prismatic
