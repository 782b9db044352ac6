#pragma once

#include <utility>
#include <vector>

#include "prismatic/graph.hpp"

namespace prismatic {

// One multiplied vertex x together with its replacement class A_x.  The
// class has one member per phi entry; phi values must be pairwise distinct
// within the class.
struct MultiplicationClass {
  int vertex;
  std::vector<int> phi;
};

struct MultiplicationSpec {
  std::vector<MultiplicationClass> classes;
};

// Layout of the product: host survivors ascending, then each class in spec
// order with members in phi order.  survivor[v] is the new id of host vertex
// v, or -1 for a multiplied vertex; class_vertices[k] lists the new ids of
// the k-th class.
struct MultiplyResult {
  Graph graph;
  std::vector<int> survivor;
  std::vector<std::vector<int>> class_vertices;
};

// Replaces each x by its class A_x: classes are stable sets; survivors keep
// host edges; a survivor sees all of A_x iff it saw x; members of classes of
// adjacent x, x' are adjacent iff their phi values are equal, and for
// non-adjacent x, x' iff their phi values differ.
MultiplyResult multiply(const Graph& host, const MultiplicationSpec& spec);

// Expansion of a leaf triangle {a,b,c} at c (no other triangle of the host
// meets a or b).  a and b are replaced by stable sets A and B joined by a
// partial matching; C is a stable set of new vertices tied to c's
// neighbourhood structure.
struct ExponentiationSpec {
  int a = -1;
  int b = -1;
  int c = -1;
  int a_count = 1;
  int b_count = 1;
  int c_count = 0;
  // Pairs (index into A, index into B); each index used at most once.
  std::vector<std::pair<int, int>> matching;
  // One entry per matching edge: true attaches every C vertex to the A end,
  // false to the B end.
  std::vector<bool> a_side;
};

// Layout: host survivors ascending, then A, then B, then C.
struct ExponentiateResult {
  Graph graph;
  std::vector<int> survivor;
  std::vector<int> a_vertices;
  std::vector<int> b_vertices;
  std::vector<int> c_vertices;
};

// Rules: survivors keep host edges; A, B, C are stable; survivors adjacent
// to a (resp. b) are complete to A (resp. B), others anticomplete; C is
// complete to the survivors of N(c) that lie in a triangle avoiding c or in
// no triangle, anticomplete to all other survivors; A-B edges are exactly
// the matching; every C vertex is adjacent to the chosen end of each A-B
// edge and to every unmatched A or B vertex.  The result must be prismatic.
ExponentiateResult exponentiate(const Graph& host,
                                const ExponentiationSpec& spec);

// Replaces v by a stable set of k vertices, each with v's neighbourhood:
// v itself stays, k-1 twins are appended at the end.
Graph replicate(const Graph& g, int v, int k);

}  // namespace prismatic
