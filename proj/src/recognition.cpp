#include "prismatic/recognition.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <sstream>

#include "prismatic/bitset.hpp"
#include "prismatic/errors.hpp"

namespace prismatic {

namespace {

Bitset triangle_bits(int n, const Triangle& t) {
  Bitset b(n);
  b.set(t[0]);
  b.set(t[1]);
  b.set(t[2]);
  return b;
}

std::string join_ids(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string Obstruction::describe() const {
  std::ostringstream out;
  switch (kind) {
    case ObstructionKind::NotUniqueNeighbour:
      out << "vertex " << vertices[3] << " has " << neighbour_count
          << " neighbours in triangle {" << vertices[0] << " " << vertices[1]
          << " " << vertices[2] << "}";
      break;
    case ObstructionKind::Rotator:
      out << "rotator on vertices " << join_ids(vertices) << " (center {"
          << vertices[0] << " " << vertices[1] << " " << vertices[2] << "})";
      break;
    case ObstructionKind::Twister:
      out << "twister on vertices " << join_ids(vertices);
      break;
    case ObstructionKind::Claw:
      out << "claw centered at " << vertices[0] << " with leaves "
          << vertices[1] << " " << vertices[2] << " " << vertices[3];
      break;
    case ObstructionKind::Diamond:
      out << "diamond on vertices " << join_ids(vertices);
      break;
    case ObstructionKind::K4:
      out << "K4 on vertices " << join_ids(vertices);
      break;
    case ObstructionKind::ParityCycle: {
      out << "contradictory orientation cycle:";
      for (const ParityConstraint& c : cycle)
        out << " " << c.a.str() << (c.flipped ? " != " : " == ") << c.b.str();
      break;
    }
    case ObstructionKind::NotAttempted:
      out << "pattern search not attempted (triangle count above cap)";
      break;
  }
  return out.str();
}

std::optional<Obstruction> find_non_prismatic(const Graph& g) {
  const int n = g.size();
  for (const Triangle& t : triangles(g)) {
    const Bitset tb = triangle_bits(n, t);
    for (int v = 0; v < n; ++v) {
      if (tb.test(v)) continue;
      const int c = g.row(v).intersection_count(tb);
      if (c != 1) {
        Obstruction o;
        o.kind = ObstructionKind::NotUniqueNeighbour;
        o.vertices = {t[0], t[1], t[2], v};
        o.neighbour_count = c;
        return o;
      }
    }
  }
  return std::nullopt;
}

bool is_prismatic(const Graph& g) { return !find_non_prismatic(g); }

namespace {

// Union-find with parity: par_[x] is the orientation of x relative to its
// parent (1 = reversed).
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), rank_(n, 0), par_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int x) {
    if (parent_[x] == x) return {x, 0};
    auto [root, p] = find(parent_[x]);
    parent_[x] = root;
    par_[x] ^= p;
    return {root, par_[x]};
  }

  // Returns false iff the new relation contradicts the recorded ones.
  bool unite(int x, int y, int parity) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == parity;
    if (rank_[rx] < rank_[ry]) {
      std::swap(rx, ry);
      std::swap(px, py);
    }
    parent_[ry] = rx;
    par_[ry] = px ^ py ^ parity;
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<int> par_;
};

// Parity of the permutation sending sorted S onto its matched images in
// sorted T: even means the matching carries the ascending cyclic order of S
// onto the ascending cyclic order of T.
int matching_parity(const Graph& g, const Triangle& s, const Triangle& t) {
  std::array<int, 3> image{};
  std::array<int, 3> hits{0, 0, 0};
  for (int k = 0; k < 3; ++k) {
    int found = -1;
    for (int l = 0; l < 3; ++l) {
      if (g.adjacent(s[k], t[l])) {
        if (found >= 0)
          throw precondition_error(
              "disjoint triangles " + s.str() + " and " + t.str() +
              " are not joined by a perfect matching");
        found = l;
      }
    }
    if (found < 0)
      throw precondition_error("disjoint triangles " + s.str() + " and " +
                               t.str() +
                               " are not joined by a perfect matching");
    image[k] = found;
    ++hits[found];
  }
  if (hits[0] != 1 || hits[1] != 1 || hits[2] != 1)
    throw precondition_error("disjoint triangles " + s.str() + " and " +
                             t.str() +
                             " are not joined by a perfect matching");
  int inversions = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (image[a] > image[b]) ++inversions;
  return inversions & 1;
}

}  // namespace

std::optional<Obstruction> find_parity_obstruction(const Graph& g) {
  if (auto bad = find_non_prismatic(g))
    throw precondition_error("orientability requires a prismatic graph: " +
                             bad->describe());
  const std::vector<Triangle> tris = triangles(g);
  const int t = static_cast<int>(tris.size());
  std::vector<Bitset> bits;
  bits.reserve(t);
  for (const Triangle& tr : tris) bits.push_back(triangle_bits(g.size(), tr));

  ParityUnionFind uf(t);
  // Recorded consistent constraints, for cycle extraction on conflict.
  std::vector<std::vector<std::pair<int, int>>> recorded(t);
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (bits[i].intersects(bits[j])) continue;
      const int p = matching_parity(g, tris[i], tris[j]);
      if (uf.unite(i, j, p)) {
        recorded[i].push_back({j, p});
        recorded[j].push_back({i, p});
        continue;
      }
      // Conflict: the recorded constraints connect i and j with the
      // opposite parity; a BFS path plus this constraint is an odd cycle.
      std::vector<int> prev(t, -1);
      std::deque<int> queue{i};
      prev[i] = i;
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        if (x == j) break;
        for (auto [y, q] : recorded[x]) {
          (void)q;
          if (prev[y] < 0) {
            prev[y] = x;
            queue.push_back(y);
          }
        }
      }
      Obstruction o;
      o.kind = ObstructionKind::ParityCycle;
      std::vector<int> path;
      for (int x = j; x != i; x = prev[x]) path.push_back(x);
      path.push_back(i);
      std::reverse(path.begin(), path.end());  // i .. j
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const int a = path[k], b = path[k + 1];
        o.cycle.push_back(ParityConstraint{
            tris[a], tris[b], matching_parity(g, tris[a], tris[b]) == 1});
      }
      o.cycle.push_back(ParityConstraint{tris[j], tris[i], p == 1});
      return o;
    }
  }
  return std::nullopt;
}

bool is_orientable(const Graph& g) { return !find_parity_obstruction(g); }

namespace {

struct Pattern {
  ObstructionKind kind;
  int n;
  std::vector<Bitset> adj;
  std::array<int, 3> anchor;  // a triangle of the pattern
  std::vector<int> order;     // remaining vertices, extension order
};

Pattern make_pattern(const Graph& g, ObstructionKind kind,
                     std::array<int, 3> anchor, std::vector<int> order) {
  Pattern p;
  p.kind = kind;
  p.n = g.size();
  for (int v = 0; v < g.size(); ++v) p.adj.push_back(g.row(v));
  p.anchor = anchor;
  p.order = std::move(order);
  return p;
}

bool extend_embedding(const Graph& g, const Pattern& pat,
                      std::vector<int>& map, Bitset& used, std::size_t step) {
  if (step == pat.order.size()) return true;
  const int p = pat.order[step];
  Bitset cand = Bitset::full(g.size());
  cand.and_not(used);
  for (int q = 0; q < pat.n; ++q) {
    if (map[q] < 0) continue;
    if (pat.adj[p].test(q))
      cand &= g.row(map[q]);
    else
      cand.and_not(g.row(map[q]));
  }
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    map[p] = v;
    used.set(v);
    if (extend_embedding(g, pat, map, used, step + 1)) return true;
    used.reset(v);
    map[p] = -1;
  }
  return false;
}

std::optional<Obstruction> find_pattern(const Graph& g, const Pattern& pat,
                                        const std::vector<Triangle>& tris) {
  static constexpr std::array<std::array<int, 3>, 6> kPerms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const Triangle& t : tris) {
    for (const auto& perm : kPerms) {
      std::vector<int> map(pat.n, -1);
      Bitset used(g.size());
      for (int k = 0; k < 3; ++k) {
        map[pat.anchor[k]] = t[perm[k]];
        used.set(t[perm[k]]);
      }
      if (extend_embedding(g, pat, map, used, 0)) {
        Obstruction o;
        o.kind = pat.kind;
        o.vertices = map;
        return o;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Graph rotator_graph() {
  GraphBuilder b(9);
  b.add_edge(0, 1);
  b.add_edge(0, 2);
  b.add_edge(1, 2);
  for (int u = 3; u <= 5; ++u)
    for (int v = 6; v <= 8; ++v) b.add_edge(u, v);
  for (int i = 0; i < 3; ++i) {
    b.add_edge(i, i + 3);
    b.add_edge(i, i + 6);
  }
  for (int v = 0; v < 9; ++v) b.set_label(v, "v" + std::to_string(v + 1));
  return std::move(b).build();
}

Graph twister_graph() {
  GraphBuilder b(10);
  const std::pair<int, int> edges[] = {
      {2, 6},                  // the two triangle pairs share this edge's ends
      {0, 2}, {0, 3}, {2, 3},  // triangle a,c,d
      {1, 2}, {1, 4}, {2, 4},  // triangle b,c,e
      {5, 6}, {5, 8}, {6, 8},  // triangle f,g,i
      {6, 7}, {6, 9}, {7, 9},  // triangle g,h,j
      {0, 8}, {0, 7}, {3, 9}, {3, 5},
      {1, 7}, {1, 5}, {4, 8}, {4, 9}};
  for (auto [u, v] : edges) b.add_edge(u, v);
  for (int v = 0; v < 10; ++v) b.set_label(v, std::string(1, 'a' + v));
  return std::move(b).build();
}

Graph prism_graph() {
  GraphBuilder b(6);
  b.add_edge(0, 1);
  b.add_edge(0, 2);
  b.add_edge(1, 2);
  b.add_edge(3, 4);
  b.add_edge(3, 5);
  b.add_edge(4, 5);
  for (int i = 0; i < 3; ++i) b.add_edge(i, i + 3);
  return std::move(b).build();
}

std::optional<Obstruction> find_rotator_or_twister(const Graph& g) {
  const std::vector<Triangle> tris = triangles(g);
  if (tris.size() > 2000) {
    Obstruction o;
    o.kind = ObstructionKind::NotAttempted;
    return o;
  }
  const Pattern rot = make_pattern(rotator_graph(), ObstructionKind::Rotator,
                                   {0, 1, 2}, {3, 6, 4, 7, 5, 8});
  if (auto o = find_pattern(g, rot, tris)) return o;
  const Pattern twi = make_pattern(twister_graph(), ObstructionKind::Twister,
                                   {0, 2, 3}, {6, 1, 4, 5, 8, 7, 9});
  return find_pattern(g, twi, tris);
}

bool is_rigid(const Graph& g) {
  if (auto bad = find_non_prismatic(g))
    throw precondition_error("rigidity requires a prismatic graph: " +
                             bad->describe());
  const int n = g.size();
  const Bitset w = core_bitset(g);
  for (int u = 0; u < n; ++u) {
    if (w.test(u)) continue;
    for (int v = u + 1; v < n; ++v) {
      if (w.test(v)) continue;
      if ((g.row(u) & w) == (g.row(v) & w)) return false;
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      Bitset common = g.row(u) & g.row(v);
      common &= w;
      if (common.none()) return false;
    }
  }
  return true;
}

std::optional<Obstruction> find_claw(const Graph& g) {
  const int n = g.size();
  for (int v = 0; v < n; ++v) {
    const std::vector<int> nb = g.row(v).to_vector();
    const int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (int k = j + 1; k < d; ++k) {
          if (g.adjacent(nb[i], nb[k]) || g.adjacent(nb[j], nb[k])) continue;
          Obstruction o;
          o.kind = ObstructionKind::Claw;
          o.vertices = {v, nb[i], nb[j], nb[k]};
          return o;
        }
      }
  }
  return std::nullopt;
}

bool is_clawfree(const Graph& g) { return !find_claw(g); }

std::optional<Obstruction> find_diamond_or_k4(const Graph& g) {
  for (auto [u, v] : g.edge_list()) {
    const Bitset common = g.row(u) & g.row(v);
    if (common.count() < 2) continue;
    const int w1 = common.first();
    const int w2 = common.next(w1);
    Obstruction o;
    o.kind = g.adjacent(w1, w2) ? ObstructionKind::K4 : ObstructionKind::Diamond;
    o.vertices = {u, v, w1, w2};
    return o;
  }
  return std::nullopt;
}

bool is_diamond_k4_free(const Graph& g) { return !find_diamond_or_k4(g); }

namespace {

bool all_distinct_in_range(const std::vector<int>& vs, int n) {
  std::vector<int> s = vs;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  return s.empty() || (s.front() >= 0 && s.back() < n);
}

bool is_triangle_of(const Graph& g, const Triangle& t) {
  return t[0] >= 0 && t[2] < g.size() && g.adjacent(t[0], t[1]) &&
         g.adjacent(t[0], t[2]) && g.adjacent(t[1], t[2]);
}

bool matches_pattern(const Graph& g, const Graph& pattern,
                     const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != pattern.size()) return false;
  if (!all_distinct_in_range(map, g.size())) return false;
  for (int a = 0; a < pattern.size(); ++a)
    for (int b = a + 1; b < pattern.size(); ++b)
      if (pattern.adjacent(a, b) != g.adjacent(map[a], map[b])) return false;
  return true;
}

}  // namespace

bool obstruction_valid(const Graph& g, const Obstruction& o) {
  switch (o.kind) {
    case ObstructionKind::NotUniqueNeighbour: {
      if (o.vertices.size() != 4 || !all_distinct_in_range(o.vertices, g.size()))
        return false;
      const Triangle t(o.vertices[0], o.vertices[1], o.vertices[2]);
      if (!is_triangle_of(g, t)) return false;
      const int v = o.vertices[3];
      int c = 0;
      for (int k = 0; k < 3; ++k) c += g.adjacent(v, t[k]) ? 1 : 0;
      return c == o.neighbour_count && c != 1;
    }
    case ObstructionKind::Rotator:
      return matches_pattern(g, rotator_graph(), o.vertices);
    case ObstructionKind::Twister:
      return matches_pattern(g, twister_graph(), o.vertices);
    case ObstructionKind::Claw: {
      if (o.vertices.size() != 4 || !all_distinct_in_range(o.vertices, g.size()))
        return false;
      const int v = o.vertices[0], a = o.vertices[1], b = o.vertices[2],
                c = o.vertices[3];
      return g.adjacent(v, a) && g.adjacent(v, b) && g.adjacent(v, c) &&
             !g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c);
    }
    case ObstructionKind::Diamond:
    case ObstructionKind::K4: {
      if (o.vertices.size() != 4 || !all_distinct_in_range(o.vertices, g.size()))
        return false;
      const int u = o.vertices[0], v = o.vertices[1], w1 = o.vertices[2],
                w2 = o.vertices[3];
      if (!g.adjacent(u, v) || !g.adjacent(u, w1) || !g.adjacent(u, w2) ||
          !g.adjacent(v, w1) || !g.adjacent(v, w2))
        return false;
      return g.adjacent(w1, w2) == (o.kind == ObstructionKind::K4);
    }
    case ObstructionKind::ParityCycle: {
      if (o.cycle.empty()) return false;
      int total = 0;
      for (std::size_t k = 0; k < o.cycle.size(); ++k) {
        const ParityConstraint& c = o.cycle[k];
        const ParityConstraint& next = o.cycle[(k + 1) % o.cycle.size()];
        if (c.b != next.a) return false;
        if (!is_triangle_of(g, c.a) || !is_triangle_of(g, c.b)) return false;
        if (!c.a.disjoint(c.b)) return false;
        if ((matching_parity(g, c.a, c.b) == 1) != c.flipped) return false;
        total ^= c.flipped ? 1 : 0;
      }
      return total == 1;
    }
    case ObstructionKind::NotAttempted:
      return false;
  }
  return false;
}

}  // namespace prismatic
