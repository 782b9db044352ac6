#include "prismatic/schlafli.hpp"

#include "prismatic/errors.hpp"

namespace prismatic {

std::string SchlafliVertex::label() const {
  static const char kTileChar[] = {'r', 's', 't'};
  std::string out(1, kTileChar[static_cast<int>(tile)]);
  out += "^";
  out += std::to_string(line);
  out += "_";
  out += std::to_string(column);
  return out;
}

SchlafliVertex SchlafliVertex::from_id(int id) {
  if (id < 0 || id >= 27)
    throw precondition_error("vertex id out of range: " + std::to_string(id));
  return SchlafliVertex{static_cast<Tile>(id / 9), (id % 9) / 3 + 1,
                        id % 3 + 1};
}

bool sigma_adjacent(const SchlafliVertex& a, const SchlafliVertex& b) {
  if (a.tile == b.tile)
    return a.line != b.line && a.column != b.column;
  const int ta = static_cast<int>(a.tile);
  const int tb = static_cast<int>(b.tile);
  if ((ta + 1) % 3 == tb) return a.column == b.line;
  return b.column == a.line;
}

Graph schlafli_complement() {
  GraphBuilder b(27);
  for (int u = 0; u < 27; ++u) {
    b.set_label(u, SchlafliVertex::from_id(u).label());
    for (int v = u + 1; v < 27; ++v)
      if (sigma_adjacent(SchlafliVertex::from_id(u),
                         SchlafliVertex::from_id(v)))
        b.add_edge(u, v);
  }
  return std::move(b).build();
}

Subgraph schlafli_induced(std::vector<int> sigma_ids) {
  for (int id : sigma_ids)
    if (id < 0 || id >= 27)
      throw precondition_error("vertex id out of range: " +
                               std::to_string(id));
  return induced_subgraph(schlafli_complement(), std::move(sigma_ids));
}

}  // namespace prismatic
