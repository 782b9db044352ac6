#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prismatic/graph.hpp"
#include "prismatic/hitting_set.hpp"

namespace prismatic {

// Partition of the vertices into triangles, edges and singletons.
struct CliqueCover {
  std::vector<Triangle> triangles;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> singletons;

  int size() const {
    return static_cast<int>(triangles.size() + edges.size() +
                            singletons.size());
  }
};

// True when the cover's cliques are cliques of g and partition its vertices.
bool cover_valid(const Graph& g, const CliqueCover& cover);

// One line per clique ("t u v w", "e u v", "v u"), triangles first, then
// edges, then singletons, each group ascending, then "size <k>".
std::string format_cover(const CliqueCover& cover);

// Minimum clique cover of a diamond- and K4-free graph from a hitting set of
// size at most 5: choose at most one triangle through each hitter, pairwise
// disjoint, and finish each choice with a maximum matching.
CliqueCover clique_cover_via_hitting_set(const Graph& g,
                                         const HittingSet& hitters);

// Convenience wrapper that searches for a hitting set of size at most 5
// itself and rejects graphs that have none.
CliqueCover clique_cover_small_hitting(const Graph& g);

// Minimum clique cover of a non-orientable prismatic graph.  Dispatches on
// whether a hitting set of size at most 5 exists; the remaining graphs are
// small enough for an exact branch-and-bound over disjoint triangle sets.
CliqueCover clique_cover_nonorientable(const Graph& g);

// Exact minimum cover by cliques of size at most 3 on any graph with at most
// 18 vertices; reference oracle for the structured solvers.
CliqueCover clique_cover_bruteforce(const Graph& g);

// Repeatedly replaces a triangle plus a singleton by two edges until the
// cover has no triangle or no singleton.  Requires a prismatic graph and a
// valid cover; the result covers the same graph with the same size.
CliqueCover normalize_cover(const Graph& g, const CliqueCover& cover);

}  // namespace prismatic
