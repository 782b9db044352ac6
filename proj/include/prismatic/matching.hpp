#pragma once

#include <utility>
#include <vector>

#include "prismatic/graph.hpp"

namespace prismatic {

struct Matching {
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
  std::vector<int> mate;                   // -1 when unmatched

  int size() const { return static_cast<int>(edges.size()); }
};

// Maximum-cardinality matching by blossom contraction, deterministic
// (ascending vertex and neighbour scans).
Matching max_matching(const Graph& g);

// Edges exist in g and are pairwise vertex-disjoint, and `mate` agrees.
bool is_valid_matching(const Graph& g, const Matching& m);

// Independent maximality verifier: grows an alternating forest from the
// unmatched vertices and contracts blossoms on an explicit graph copy.
// True iff an augmenting path exists, i.e. iff `mate` is not maximum.
bool has_augmenting_path(const Graph& g, const std::vector<int>& mate);

}  // namespace prismatic
