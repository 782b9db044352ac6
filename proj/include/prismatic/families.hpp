#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "prismatic/expand.hpp"
#include "prismatic/graph.hpp"

namespace prismatic {

// 3x3 incidence pattern over (line, column) pairs, 1-based.
struct IndexSet {
  std::array<std::array<bool, 3>, 3> has{};

  bool test(int line, int column) const { return has[line - 1][column - 1]; }
  void set(int line, int column, bool value = true) {
    has[line - 1][column - 1] = value;
  }
  std::vector<std::pair<int, int>> pairs() const;
  static IndexSet of(std::initializer_list<std::pair<int, int>> pairs);
};

// Shape of one leaf-triangle expansion: set sizes, the A-B matching, and the
// side of each matched edge the C vertices attach to.
struct ExpansionShape {
  int a_count = 1;
  int b_count = 1;
  int c_count = 0;
  std::vector<std::pair<int, int>> matching{{0, 0}};
  std::vector<bool> a_side{true};
};

struct SigmaSpec {};
struct SchlafliInducedSpec {
  std::vector<int> sigma_ids;
};
struct RotatorSpec {};
struct TwisterSpec {};
struct PrismSpec {};
struct LineK33Spec {};

// Leaf triangle {a,b,c} of a fixed 19-vertex induced subgraph of Sigma with
// the two non-apex vertices multiplied.
struct FuzzilySpec {
  std::vector<int> phi_a{1};
  std::vector<int> phi_b{1};
};

// The four vertices of a fixed 4-cycle of the line graph of K_{3,3}
// multiplied; the antipodal ninth vertex optionally deleted.
struct ParallelSquareSpec {
  std::array<std::vector<int>, 4> phi{{{1}, {1}, {1}, {1}}};
  bool delete_z = false;
};

// Five-vertex host (two triangles sharing one vertex) with the shared path
// multiplied and three selector vertices appended.
struct SkewSquareSpec {
  std::array<std::vector<int>, 3> phi{{{1}, {1}, {1}}};
};

struct F0Spec {
  IndexSet i1, i2, i3;
};

// Disjoint union {s,t} + R + A + B with the cross rules; pair lists first,
// then singles.  choice_bits feeds the per-pair orientation choices in a
// fixed order: A-pair x B-pair, then A-pair x B-single, then B-pair x
// A-single.
struct F1Spec {
  int r_count = 1;
  int a_pairs = 1;
  int a_singles = 1;
  int b_pairs = 1;
  int b_singles = 1;
  std::uint64_t choice_bits = 0;
};

// Line graph of K_{3,3} (complement numbering) with four vertices
// multiplied, then one leaf triangle expanded.  phi order: classes of
// (1,2), (1,3), (2,1), (3,1).
struct F2Spec {
  std::array<std::vector<int>, 4> phi{{{1}, {2}, {1}, {3}}};
  ExpansionShape expansion;
};

// Same host minus (2,2) and optionally (1,1), multiplied likewise, then two
// leaf triangles expanded in order.
struct F3Spec {
  bool delete_11 = false;
  std::array<std::vector<int>, 4> phi{{{1}, {2}, {2}, {1}}};
  ExpansionShape expansion_first;
  ExpansionShape expansion_second;
};

// Induced subgraph of Sigma on Y (third line of tile R) + an S index set +
// the T diagonal, with the diagonal expanded at its (3,3) corner.
struct F4Spec {
  std::array<bool, 3> y{true, false, false};
  IndexSet i;
  ExpansionShape expansion;
};

struct F5Spec {
  IndexSet i1, i2, i3;
};

// Fixed induced subgraph of Sigma plus one extra edge, with the two (3,3)
// corner vertices multiplied.
struct F6Spec {
  std::vector<int> phi_r{1};
  std::vector<int> phi_t{1};
};

// Host K on six vertices containing the triangular prism; the graph lives on
// E(K) plus a subset of V(K).  extra_edges lists K-edges beyond the prism,
// k_vertices the retained K-vertices.
struct F7Spec {
  std::vector<std::pair<int, int>> extra_edges;
  std::vector<int> k_vertices;
};

// Rotator with its three matched outer pairs successively multiplied; phi
// order: v4, v7, v5, v8, v6, v9.
struct F8Spec {
  std::array<std::vector<int>, 6> phi{{{1}, {1}, {1}, {1}, {1}, {1}}};
};

struct F9Spec {
  IndexSet i1, i2, i3;
};

using FamilySpec =
    std::variant<SigmaSpec, SchlafliInducedSpec, RotatorSpec, TwisterSpec,
                 PrismSpec, LineK33Spec, FuzzilySpec, ParallelSquareSpec,
                 SkewSquareSpec, F0Spec, F1Spec, F2Spec, F3Spec, F4Spec,
                 F5Spec, F6Spec, F7Spec, F8Spec, F9Spec>;

struct FamilyInstance {
  Graph graph;
  // The constructive hitting set when the family carries one, with its
  // guaranteed size bound; families without one leave the optional empty.
  std::optional<std::vector<int>> constructive_hitting_set;
  int constructive_bound = 0;
};

// Validates the parameter record's side conditions (naming the violated
// clause), builds the graph, and checks the unique-neighbour property on the
// result.
FamilyInstance generate_instance(const FamilySpec& spec);
Graph generate(const FamilySpec& spec);

// The constructive hitting set alone; families without one are rejected.
std::vector<int> constructive_hitting_set(const FamilySpec& spec);

// Line graph of K_{3,3}: vertex (i,j) = 3*(i-1)+(j-1), adjacent when the
// underlying edges share an endpoint.
Graph line_graph_k33();
// Same graph under the complement numbering (adjacent iff both coordinates
// differ); isomorphic to line_graph_k33 since the graph is self-
// complementary.
Graph complement_line_graph_k33();

struct CorpusEntry {
  std::string name;
  FamilySpec spec;
  FamilyInstance instance;
};

// Deterministic parameter sweeps over every family.
std::vector<CorpusEntry> generate_default_corpus();

// Random induced subgraphs of Sigma with min_n..max_n vertices.
std::vector<SchlafliInducedSpec> random_schlafli_specs(int count, int min_n,
                                                        int max_n,
                                                        std::uint64_t seed);

}  // namespace prismatic
