#include "prismatic/clique_cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>

#include "prismatic/bitset.hpp"
#include "prismatic/errors.hpp"
#include "prismatic/matching.hpp"
#include "prismatic/recognition.hpp"
#include "prismatic/witness.hpp"

namespace prismatic {

namespace {

std::vector<int> free_vertices(const Graph& g, const Bitset& used) {
  std::vector<int> rest;
  for (int v = 0; v < g.size(); ++v)
    if (!used.test(v)) rest.push_back(v);
  return rest;
}

// Matching edges on the vertices outside `used`, in original ids.
std::vector<std::pair<int, int>> completion_edges(const Graph& g,
                                                  const Bitset& used) {
  const std::vector<int> rest = free_vertices(g, used);
  const Subgraph sub = induced_subgraph(g, rest);
  const Matching m = max_matching(sub.graph);
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : m.edges)
    edges.push_back(std::minmax(rest[a], rest[b]));
  return edges;
}

CliqueCover assemble(const Graph& g, std::vector<Triangle> tris,
                     std::vector<std::pair<int, int>> edges) {
  CliqueCover cover;
  cover.triangles = std::move(tris);
  cover.edges = std::move(edges);
  Bitset used(g.size());
  for (const Triangle& t : cover.triangles)
    for (int v : t.v) used.set(v);
  for (const auto& [u, v] : cover.edges) {
    used.set(u);
    used.set(v);
  }
  cover.singletons = free_vertices(g, used);
  std::sort(cover.triangles.begin(), cover.triangles.end());
  std::sort(cover.edges.begin(), cover.edges.end());
  return cover;
}

// Exact maximum-weight search over sets of pairwise disjoint triangles,
// scoring 2*|set| + matching(rest); a minimum cover is n - best score.
// Extensions are tried in ascending index order, so subsets are visited in
// lexicographic order and the first optimum kept is the least one.
struct DisjointTriangleSearch {
  const Graph& g;
  std::vector<Triangle> tris;
  std::vector<Bitset> tri_bits;
  std::function<int(const Bitset&)> matching_size;
  Bitset used;
  std::vector<Triangle> chosen;
  int best_obj = -1;
  std::vector<Triangle> best_tris;

  explicit DisjointTriangleSearch(const Graph& graph)
      : g(graph), tris(triangles(graph)), used(graph.size()) {
    for (const Triangle& t : tris) {
      Bitset b(g.size());
      for (int v : t.v) b.set(v);
      tri_bits.push_back(b);
    }
  }

  void run(std::size_t from) {
    const int c = static_cast<int>(chosen.size());
    const int f = g.size() - 3 * c;
    int avail = 0;
    for (std::size_t j = from; j < tris.size(); ++j)
      if (!used.intersects(tri_bits[j])) ++avail;
    const int extra = std::min(avail, f / 3);
    if (2 * (c + extra) + (f - 3 * extra) / 2 <= best_obj) return;
    const int here = 2 * c + matching_size(used);
    if (here > best_obj) {
      best_obj = here;
      best_tris = chosen;
    }
    for (std::size_t j = from; j < tris.size(); ++j) {
      if (used.intersects(tri_bits[j])) continue;
      for (int v : tris[j].v) used.set(v);
      chosen.push_back(tris[j]);
      run(j + 1);
      chosen.pop_back();
      for (int v : tris[j].v) used.reset(v);
    }
  }
};

std::uint64_t low_mask(const Bitset& b) {
  std::uint64_t mask = 0;
  b.for_each([&](int v) { mask |= std::uint64_t{1} << v; });
  return mask;
}

// Maximum matching sizes over vertex subsets of a small graph, memoized by
// subset mask, with deterministic edge reconstruction.
class MaskMatcher {
 public:
  explicit MaskMatcher(const Graph& g)
      : memo_(std::size_t{1} << g.size(), -1), adj_(g.size(), 0) {
    for (const auto& [u, v] : g.edge_list()) {
      adj_[u] |= std::uint32_t{1} << v;
      adj_[v] |= std::uint32_t{1} << u;
    }
  }

  int size(std::uint32_t mask) {
    if (mask == 0) return 0;
    std::int8_t& slot = memo_[mask];
    if (slot >= 0) return slot;
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    int best = size(rest);
    for (std::uint32_t nb = adj_[v] & rest; nb != 0; nb &= nb - 1) {
      const int u = std::countr_zero(nb);
      best = std::max(best, 1 + size(rest & ~(std::uint32_t{1} << u)));
    }
    slot = static_cast<std::int8_t>(best);
    return best;
  }

  // Walks the table matching each lowest vertex to its smallest usable
  // partner.
  std::vector<std::pair<int, int>> edges(std::uint32_t mask) {
    std::vector<std::pair<int, int>> out;
    while (mask != 0) {
      const int v = std::countr_zero(mask);
      const std::uint32_t rest = mask & (mask - 1);
      if (size(rest) == size(mask)) {
        mask = rest;
        continue;
      }
      for (std::uint32_t nb = adj_[v] & rest; nb != 0; nb &= nb - 1) {
        const int u = std::countr_zero(nb);
        const std::uint32_t next = rest & ~(std::uint32_t{1} << u);
        if (1 + size(next) == size(mask)) {
          out.push_back({v, u});
          mask = next;
          break;
        }
      }
    }
    return out;
  }

 private:
  std::vector<std::int8_t> memo_;
  std::vector<std::uint32_t> adj_;
};

}  // namespace

bool cover_valid(const Graph& g, const CliqueCover& cover) {
  std::vector<int> seen(g.size(), 0);
  const auto mark = [&](int v) {
    if (v < 0 || v >= g.size()) return false;
    return ++seen[v] == 1;
  };
  for (const Triangle& t : cover.triangles) {
    for (int v : t.v)
      if (!mark(v)) return false;
    if (!g.adjacent(t.v[0], t.v[1]) || !g.adjacent(t.v[0], t.v[2]) ||
        !g.adjacent(t.v[1], t.v[2]))
      return false;
  }
  for (const auto& [u, v] : cover.edges) {
    if (!mark(u) || !mark(v)) return false;
    if (!g.adjacent(u, v)) return false;
  }
  for (int v : cover.singletons)
    if (!mark(v)) return false;
  for (int v = 0; v < g.size(); ++v)
    if (seen[v] != 1) return false;
  return true;
}

std::string format_cover(const CliqueCover& cover) {
  CliqueCover c = cover;
  std::sort(c.triangles.begin(), c.triangles.end());
  for (auto& [u, v] : c.edges)
    if (u > v) std::swap(u, v);
  std::sort(c.edges.begin(), c.edges.end());
  std::sort(c.singletons.begin(), c.singletons.end());
  std::string out;
  for (const Triangle& t : c.triangles)
    out += "t " + std::to_string(t.v[0]) + " " + std::to_string(t.v[1]) +
           " " + std::to_string(t.v[2]) + "\n";
  for (const auto& [u, v] : c.edges)
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  for (int v : c.singletons) out += "v " + std::to_string(v) + "\n";
  out += "size " + std::to_string(c.size()) + "\n";
  return out;
}

CliqueCover clique_cover_via_hitting_set(const Graph& g,
                                         const HittingSet& hitters) {
  const WitnessMatrix wm = witness_matrix(g);
  std::vector<int> hit = hitters.vertices;
  std::sort(hit.begin(), hit.end());
  hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
  for (int v : hit)
    if (v < 0 || v >= g.size())
      throw precondition_error("hitting set names vertex " +
                               std::to_string(v) + " outside the graph");
  if (hit.size() > 5)
    throw precondition_error(
        "hitting set has " + std::to_string(hit.size()) +
        " vertices; the cover construction needs at most 5");
  for (const Triangle& t : triangles(g)) {
    if (std::none_of(t.v.begin(), t.v.end(), [&](int v) {
          return std::binary_search(hit.begin(), hit.end(), v);
        }))
      throw precondition_error("vertex set misses triangle " + t.str() +
                               "; it is not a hitting set");
  }

  std::vector<std::vector<Triangle>> lists;
  for (int v : hit) lists.push_back(wm.triangles_through(v));

  Bitset used(g.size());
  std::vector<Triangle> chosen;
  bool have_best = false;
  CliqueCover best;

  const std::function<void(std::size_t)> step = [&](std::size_t i) {
    if (i == lists.size()) {
      CliqueCover cand = assemble(g, chosen, completion_edges(g, used));
      if (!have_best || cand.size() < best.size() ||
          (cand.size() == best.size() && cand.triangles < best.triangles)) {
        have_best = true;
        best = std::move(cand);
      }
      return;
    }
    step(i + 1);
    for (const Triangle& t : lists[i]) {
      if (used.test(t.v[0]) || used.test(t.v[1]) || used.test(t.v[2]))
        continue;
      for (int v : t.v) used.set(v);
      chosen.push_back(t);
      step(i + 1);
      chosen.pop_back();
      for (int v : t.v) used.reset(v);
    }
  };
  step(0);
  return best;
}

CliqueCover clique_cover_small_hitting(const Graph& g) {
  const std::optional<HittingSet> hit = find_hitting_set_at_most(g, 5);
  if (!hit)
    throw precondition_error(
        "graph has no triangle hitting set of size at most 5");
  return clique_cover_via_hitting_set(g, *hit);
}

CliqueCover clique_cover_nonorientable(const Graph& g) {
  if (const auto bad = find_non_prismatic(g))
    throw precondition_error("minimum clique cover requires a prismatic graph: " +
                             bad->describe());
  if (!find_parity_obstruction(g))
    throw precondition_error(
        "graph is orientable; this cover routine handles the non-orientable "
        "case");
  if (const auto hit = find_hitting_set_at_most(g, 5))
    return clique_cover_via_hitting_set(g, *hit);

  DisjointTriangleSearch search(g);
  std::unordered_map<std::uint64_t, int> memo;
  search.matching_size = [&](const Bitset& used) {
    const std::uint64_t key = low_mask(used);
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const std::vector<int> rest = free_vertices(g, used);
    const int size = max_matching(induced_subgraph(g, rest).graph).size();
    memo.emplace(key, size);
    return size;
  };
  search.run(0);

  Bitset used(g.size());
  for (const Triangle& t : search.best_tris)
    for (int v : t.v) used.set(v);
  return assemble(g, search.best_tris, completion_edges(g, used));
}

CliqueCover clique_cover_bruteforce(const Graph& g) {
  if (g.size() > 18)
    throw precondition_error(
        "exhaustive cover search is limited to graphs with at most 18 "
        "vertices");
  MaskMatcher matcher(g);
  const std::uint32_t all =
      g.size() == 0 ? 0 : (std::uint32_t{1} << g.size()) - 1;

  DisjointTriangleSearch search(g);
  search.matching_size = [&](const Bitset& used) {
    return matcher.size(all & ~static_cast<std::uint32_t>(low_mask(used)));
  };
  search.run(0);

  std::uint32_t rest_mask = all;
  for (const Triangle& t : search.best_tris)
    for (int v : t.v) rest_mask &= ~(std::uint32_t{1} << v);
  return assemble(g, search.best_tris, matcher.edges(rest_mask));
}

CliqueCover normalize_cover(const Graph& g, const CliqueCover& cover) {
  if (const auto bad = find_non_prismatic(g))
    throw precondition_error("cover normalization requires a prismatic graph: " +
                             bad->describe());
  if (!cover_valid(g, cover))
    throw precondition_error(
        "cover normalization requires a valid cover of the graph");
  CliqueCover c = cover;
  std::sort(c.triangles.begin(), c.triangles.end());
  for (auto& [u, v] : c.edges)
    if (u > v) std::swap(u, v);
  std::sort(c.singletons.begin(), c.singletons.end());
  while (!c.triangles.empty() && !c.singletons.empty()) {
    const Triangle t = c.triangles.front();
    const int lone = c.singletons.front();
    c.triangles.erase(c.triangles.begin());
    c.singletons.erase(c.singletons.begin());
    int mate = -1;
    for (int v : t.v)
      if (g.adjacent(lone, v)) mate = mate < 0 ? v : mate;
    std::vector<int> rest;
    for (int v : t.v)
      if (v != mate) rest.push_back(v);
    c.edges.push_back(std::minmax(lone, mate));
    c.edges.push_back({rest[0], rest[1]});
  }
  std::sort(c.edges.begin(), c.edges.end());
  return c;
}

}  // namespace prismatic
