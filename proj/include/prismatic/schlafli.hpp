#pragma once

#include <string>
#include <vector>

#include "prismatic/graph.hpp"

namespace prismatic {

enum class Tile { R = 0, S = 1, T = 2 };

// Vertex (tile, line, column) of the 27-vertex graph Sigma.  Ids are
// tile-major, line-major, column-minor: id = 9*tile + 3*(line-1) + (column-1).
struct SchlafliVertex {
  Tile tile;
  int line;    // 1..3
  int column;  // 1..3

  int id() const {
    return 9 * static_cast<int>(tile) + 3 * (line - 1) + (column - 1);
  }
  std::string label() const;
  static SchlafliVertex from_id(int id);
};

// Adjacency rule of Sigma: within a tile, different line and different
// column; across tiles (R -> S -> T -> R cyclically), column j of a tile is
// complete to line j of the next tile.
bool sigma_adjacent(const SchlafliVertex& a, const SchlafliVertex& b);

// The 27-vertex graph Sigma, labeled r^i_j / s^i_j / t^i_j.
Graph schlafli_complement();

// Induced subgraph of Sigma; the result's `vertices` holds the Sigma ids.
Subgraph schlafli_induced(std::vector<int> sigma_ids);

}  // namespace prismatic
