#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prismatic/graph.hpp"

namespace prismatic {

// A checkable certificate for a failed structural test.  `vertices` lists the
// host vertices realizing the pattern, in pattern order:
//   NotUniqueNeighbour: the triangle's 3 vertices, then the outside vertex
//     whose neighbour count in the triangle is `neighbour_count` != 1
//   Rotator: 9 vertices; the first 3 are the center triangle
//   Twister: 10 vertices
//   Claw: the center, then its 3 pairwise non-adjacent neighbours
//   Diamond / K4: 4 vertices; the first two are an adjacent pair, the last
//     two their common neighbours
//   ParityCycle: empty; `cycle` holds the contradictory constraint loop
//   NotAttempted: the graph exceeded the pattern-search triangle cap
enum class ObstructionKind {
  NotUniqueNeighbour,
  Rotator,
  Twister,
  Claw,
  Diamond,
  K4,
  ParityCycle,
  NotAttempted,
};

// One orientation constraint: the perfect matching between vertex-disjoint
// triangles a and b forces their cyclic orientations to differ (flipped) or
// agree (not flipped).
struct ParityConstraint {
  Triangle a;
  Triangle b;
  bool flipped;
};

struct Obstruction {
  ObstructionKind kind;
  std::vector<int> vertices;
  int neighbour_count = -1;
  std::vector<ParityConstraint> cycle;

  std::string describe() const;
};

// Unique-neighbour test: every vertex outside any triangle has exactly one
// neighbour in it.
std::optional<Obstruction> find_non_prismatic(const Graph& g);
bool is_prismatic(const Graph& g);

// Orientation consistency over all vertex-disjoint triangle pairs, decided
// by parity union-find; on failure returns an odd constraint cycle.
// Requires a prismatic input.
std::optional<Obstruction> find_parity_obstruction(const Graph& g);
bool is_orientable(const Graph& g);

// Induced-subgraph search for the two minimal non-orientable patterns.
// Diagnostic only: graphs with more than 2000 triangles get NotAttempted.
std::optional<Obstruction> find_rotator_or_twister(const Graph& g);

// Rigidity: no two vertices outside the core share the same neighbourhood in
// the core, and every non-adjacent pair has a common neighbour in the core.
// Requires a prismatic input.
bool is_rigid(const Graph& g);

std::optional<Obstruction> find_claw(const Graph& g);
bool is_clawfree(const Graph& g);

// An adjacent pair with two common neighbours spans a diamond or K4.
std::optional<Obstruction> find_diamond_or_k4(const Graph& g);
bool is_diamond_k4_free(const Graph& g);

// Re-checks an obstruction against the host graph.
bool obstruction_valid(const Graph& g, const Obstruction& o);

// The two minimal non-orientable prismatic graphs, plus the prism.
Graph rotator_graph();
Graph twister_graph();
Graph prism_graph();

}  // namespace prismatic
