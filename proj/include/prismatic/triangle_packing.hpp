#pragma once

#include <string>
#include <vector>

#include "prismatic/graph.hpp"

namespace prismatic {

// Set of pairwise vertex-disjoint triangles.
struct TrianglePacking {
  std::vector<Triangle> triangles;

  int size() const { return static_cast<int>(triangles.size()); }
};

// True when every listed triangle is a triangle of g and no two share a
// vertex.
bool packing_valid(const Graph& g, const TrianglePacking& packing);

// One line "t u v w" per triangle, ascending, then "size <k>".
std::string format_packing(const TrianglePacking& packing);

// Exact maximum packing on any graph with at most 60 triangles; reference
// oracle for the structured solver.
TrianglePacking max_triangle_packing_bruteforce(const Graph& g);

// Maximum packing of a prismatic graph.  Small graphs are solved directly;
// graphs with a hitting set of size at most 5 by per-hitter enumeration;
// the rest through stable sets of the triangle-intersection graph, whose
// components are then either a K33 or claw-free.
TrianglePacking max_triangle_packing_prismatic(const Graph& g);

enum class ComponentKind { K33, ClawFree, Neither };

// One connected component of the triangle-intersection graph: component
// vertex i stands for triangles[i].
struct DerivedComponent {
  Graph graph;
  std::vector<Triangle> triangles;
  ComponentKind kind = ComponentKind::Neither;
};

// Components of the triangle-intersection graph of a prismatic graph,
// classified; Neither is reported rather than rejected so callers can
// diagnose unexpected inputs.
std::vector<DerivedComponent> classify_derived_components(const Graph& g);

// Exact maximum stable set of a claw-free graph via branch and bound with a
// greedy clique-cover bound.
std::vector<int> max_stable_set_clawfree(const Graph& g);

}  // namespace prismatic
