#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "prismatic/bitset.hpp"

namespace prismatic {

// A triangle stored with ascending vertex ids; the canonical form used
// everywhere (triangle lists are sorted lexicographically on this form).
struct Triangle {
  std::array<int, 3> v{-1, -1, -1};

  Triangle() = default;
  Triangle(int a, int b, int c);

  int operator[](int i) const { return v[i]; }
  bool contains(int x) const { return v[0] == x || v[1] == x || v[2] == x; }
  bool disjoint(const Triangle& o) const {
    return !contains(o.v[0]) && !contains(o.v[1]) && !contains(o.v[2]);
  }
  std::string str() const;

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

// Simple undirected graph on vertices 0..n-1, immutable once built.
// Adjacency is kept as one bit row per vertex.  Vertices may carry an
// opaque text label (provenance only; no algorithm reads labels).
class Graph {
 public:
  Graph() = default;

  int size() const { return n_; }
  int edge_count() const { return m_; }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset& row(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edge_list() const;

  const std::string& label(int v) const { return labels_[v]; }
  bool has_labels() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_ && a.labels_ == b.labels_;
  }

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int m_ = 0;
  std::vector<Bitset> adj_;
  std::vector<std::string> labels_;
};

// Incremental construction; Graph itself stays immutable.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int size() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }

  // Validates range and rejects self-loops; duplicates are merged.
  void add_edge(int u, int v);
  void set_label(int v, std::string label);
  const std::string& label(int v) const { return labels_[v]; }

  Graph build() &&;

 private:
  int n_;
  std::vector<Bitset> adj_;
  std::vector<std::string> labels_;
};

// Builds a graph from an explicit edge list (deduplicated); rejects
// out-of-range endpoints and self-loops.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// All triangles in canonical ascending form, sorted lexicographically.
std::vector<Triangle> triangles(const Graph& g);

// Vertices lying in at least one triangle, ascending.
std::vector<int> core(const Graph& g);
Bitset core_bitset(const Graph& g);

// Induced subgraph with vertices relabelled 0..k-1; `vertices[i]` is the
// original id of new vertex i.  Labels are carried over.
struct Subgraph {
  Graph graph;
  std::vector<int> vertices;
};
Subgraph induced_subgraph(const Graph& g, std::vector<int> vertices);

// Intersection graph of the triangles of g: one vertex per triangle,
// adjacent when the triangles share a vertex.  `triangles[i]` names the
// source triangle of derived vertex i (also recorded as its label).
struct DerivedGraph {
  Graph graph;
  std::vector<Triangle> triangles;
};
DerivedGraph derived_graph(const Graph& g);

// Exact isomorphism test for graphs with at most 12 vertices each
// (degree-pruned backtracking); larger inputs are rejected.
bool is_isomorphic_small(const Graph& a, const Graph& b);

// True when the two graphs have identical vertex count and adjacency
// (labels ignored).
bool same_adjacency(const Graph& a, const Graph& b);

// Small stock graphs used by tests and fixtures.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace prismatic
