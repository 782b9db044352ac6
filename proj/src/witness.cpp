#include "prismatic/witness.hpp"

#include <algorithm>
#include <string>

#include "prismatic/errors.hpp"

namespace prismatic {

std::vector<Triangle> WitnessMatrix::triangles_through(int v) const {
  std::vector<Triangle> out;
  for (int u = 0; u < n_; ++u) {
    const int w = entry(v, u);
    if (w >= 0) out.push_back(Triangle(v, u, w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool WitnessMatrix::triangle_free_without(const Bitset& removed) const {
  for (int u = 0; u < n_; ++u) {
    if (removed.test(u)) continue;
    for (int v = u + 1; v < n_; ++v) {
      if (removed.test(v)) continue;
      const int w = entry(u, v);
      if (w >= 0 && !removed.test(w)) return false;
    }
  }
  return true;
}

WitnessMatrix witness_matrix(const Graph& g) {
  const int n = g.size();
  WitnessMatrix m;
  m.n_ = n;
  m.data_.assign(static_cast<std::size_t>(n) * n, WitnessMatrix::kNotAdjacent);
  for (int u = 0; u < n; ++u) {
    for (int v = g.row(u).next(u); v >= 0; v = g.row(u).next(v)) {
      const Bitset common = g.row(u) & g.row(v);
      const int c = common.count();
      if (c == 0) {
        m.data_[u * n + v] = WitnessMatrix::kNoWitness;
        m.data_[v * n + u] = WitnessMatrix::kNoWitness;
      } else if (c == 1) {
        const int w = common.first();
        m.data_[u * n + v] = w;
        m.data_[v * n + u] = w;
      } else {
        const int w1 = common.first();
        const int w2 = common.next(w1);
        throw precondition_error(
            "diamond or K4 on vertices {" + std::to_string(u) + ", " +
            std::to_string(v) + ", " + std::to_string(w1) + ", " +
            std::to_string(w2) + "}: adjacent pair with two common neighbours");
      }
    }
  }
  return m;
}

}  // namespace prismatic
