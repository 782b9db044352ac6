#pragma once

#include <vector>

#include "prismatic/bitset.hpp"
#include "prismatic/graph.hpp"

namespace prismatic {

// Per-pair triangle witness table for a diamond-free, K4-free graph.  In such
// a graph two adjacent vertices have at most one common neighbour, so each
// edge determines at most one triangle and that triangle's third vertex is
// stored as the witness.
class WitnessMatrix {
 public:
  static constexpr int kNotAdjacent = -2;
  static constexpr int kNoWitness = -1;

  int size() const { return n_; }

  // kNotAdjacent, kNoWitness, or the id of the unique common neighbour.
  int entry(int u, int v) const { return data_[u * n_ + v]; }

  // All triangles containing v, ascending.
  std::vector<Triangle> triangles_through(int v) const;

  // True when deleting `removed` leaves a triangle-free graph: every edge
  // between two surviving vertices must have its witness removed (or none).
  bool triangle_free_without(const Bitset& removed) const;

 private:
  friend WitnessMatrix witness_matrix(const Graph& g);
  int n_ = 0;
  std::vector<int> data_;
};

// Builds the table; rejects graphs containing a diamond or K4, naming the
// four offending vertices.
WitnessMatrix witness_matrix(const Graph& g);

}  // namespace prismatic
