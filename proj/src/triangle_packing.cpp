#include "prismatic/triangle_packing.hpp"

#include <algorithm>
#include <functional>

#include "prismatic/bitset.hpp"
#include "prismatic/errors.hpp"
#include "prismatic/hitting_set.hpp"
#include "prismatic/recognition.hpp"
#include "prismatic/witness.hpp"

namespace prismatic {

namespace {

// Exact search over disjoint triangle sets maximizing the count.  Extensions
// run in ascending index order, so subsets are visited lexicographically and
// the first maximum kept is the least one.
struct PackingSearch {
  const Graph& g;
  std::vector<Triangle> tris;
  std::vector<Bitset> bits;
  Bitset used;
  std::vector<Triangle> chosen;
  int best = -1;
  std::vector<Triangle> best_tris;

  explicit PackingSearch(const Graph& graph)
      : g(graph), tris(triangles(graph)), used(graph.size()) {
    for (const Triangle& t : tris) {
      Bitset b(g.size());
      for (int v : t.v) b.set(v);
      bits.push_back(b);
    }
  }

  void run(std::size_t from) {
    const int c = static_cast<int>(chosen.size());
    int avail = 0;
    for (std::size_t j = from; j < tris.size(); ++j)
      if (!used.intersects(bits[j])) ++avail;
    if (c + std::min(avail, (g.size() - 3 * c) / 3) <= best) return;
    if (c > best) {
      best = c;
      best_tris = chosen;
    }
    for (std::size_t j = from; j < tris.size(); ++j) {
      if (used.intersects(bits[j])) continue;
      for (int v : tris[j].v) used.set(v);
      chosen.push_back(tris[j]);
      run(j + 1);
      chosen.pop_back();
      for (int v : tris[j].v) used.reset(v);
    }
  }

  TrianglePacking result() {
    run(0);
    std::sort(best_tris.begin(), best_tris.end());
    return TrianglePacking{best_tris};
  }
};

// Largest selection of at most one triangle per hitter, pairwise disjoint;
// exact because every triangle of the graph contains a hitter.
TrianglePacking packing_via_hitters(const Graph& g,
                                    const std::vector<int>& hitters) {
  const WitnessMatrix wm = witness_matrix(g);
  std::vector<std::vector<Triangle>> lists;
  for (int v : hitters) lists.push_back(wm.triangles_through(v));

  Bitset used(g.size());
  std::vector<Triangle> chosen;
  bool have_best = false;
  std::vector<Triangle> best;

  const std::function<void(std::size_t)> step = [&](std::size_t i) {
    if (i == lists.size()) {
      std::vector<Triangle> cand = chosen;
      std::sort(cand.begin(), cand.end());
      if (!have_best || cand.size() > best.size() ||
          (cand.size() == best.size() && cand < best)) {
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
  return TrianglePacking{best};
}

// Sides of a complete bipartite component via 2-colouring.
std::pair<std::vector<int>, std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> colour(g.size(), -1);
  std::vector<int> queue{0};
  colour[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    g.row(v).for_each([&](int u) {
      if (colour[u] < 0) {
        colour[u] = 1 - colour[v];
        queue.push_back(u);
      }
    });
  }
  std::pair<std::vector<int>, std::vector<int>> sides;
  for (int v = 0; v < g.size(); ++v)
    (colour[v] == 0 ? sides.first : sides.second).push_back(v);
  return sides;
}

}  // namespace

bool packing_valid(const Graph& g, const TrianglePacking& packing) {
  std::vector<int> seen(g.size(), 0);
  for (const Triangle& t : packing.triangles) {
    for (int v : t.v) {
      if (v < 0 || v >= g.size()) return false;
      if (++seen[v] > 1) return false;
    }
    if (!g.adjacent(t.v[0], t.v[1]) || !g.adjacent(t.v[0], t.v[2]) ||
        !g.adjacent(t.v[1], t.v[2]))
      return false;
  }
  return true;
}

std::string format_packing(const TrianglePacking& packing) {
  std::vector<Triangle> tris = packing.triangles;
  std::sort(tris.begin(), tris.end());
  std::string out;
  for (const Triangle& t : tris)
    out += "t " + std::to_string(t.v[0]) + " " + std::to_string(t.v[1]) +
           " " + std::to_string(t.v[2]) + "\n";
  out += "size " + std::to_string(tris.size()) + "\n";
  return out;
}

TrianglePacking max_triangle_packing_bruteforce(const Graph& g) {
  PackingSearch search(g);
  if (search.tris.size() > 60)
    throw precondition_error(
        "exhaustive packing search is limited to graphs with at most 60 "
        "triangles");
  return search.result();
}

std::vector<int> max_stable_set_clawfree(const Graph& g) {
  if (const auto claw = find_claw(g))
    throw precondition_error("stable set search requires a claw-free graph: " +
                             claw->describe());

  std::vector<int> best, cur;

  // Greedy clique cover of the remaining vertices; no stable set can exceed
  // the number of cliques.
  const auto bound = [&](Bitset rem) {
    int cliques = 0;
    while (rem.any()) {
      const int v = rem.first();
      rem.reset(v);
      ++cliques;
      Bitset cand = g.row(v);
      cand &= rem;
      while (cand.any()) {
        const int u = cand.first();
        rem.reset(u);
        cand &= g.row(u);
        cand &= rem;
      }
    }
    return cliques;
  };

  const std::function<void(const Bitset&)> run = [&](const Bitset& pool) {
    if (pool.none()) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    if (static_cast<int>(cur.size()) + bound(pool) <=
        static_cast<int>(best.size()))
      return;

    // A vertex whose remaining neighbourhood is a clique always belongs to
    // some maximum stable set, so take it without branching.
    for (int v = pool.first(); v >= 0; v = pool.next(v)) {
      Bitset nb = g.row(v);
      nb &= pool;
      bool clique = true;
      for (int a = nb.first(); clique && a >= 0; a = nb.next(a)) {
        Bitset others = nb;
        others.reset(a);
        others.and_not(g.row(a));
        if (others.any()) clique = false;
      }
      if (clique) {
        Bitset next = pool;
        next.reset(v);
        next.and_not(g.row(v));
        cur.push_back(v);
        run(next);
        cur.pop_back();
        return;
      }
    }

    // Branch on the vertex of largest remaining degree.
    int pick = -1, pick_deg = -1;
    for (int v = pool.first(); v >= 0; v = pool.next(v)) {
      Bitset nb = g.row(v);
      nb &= pool;
      const int deg = nb.count();
      if (deg > pick_deg) {
        pick = v;
        pick_deg = deg;
      }
    }
    Bitset with = pool;
    with.reset(pick);
    with.and_not(g.row(pick));
    cur.push_back(pick);
    run(with);
    cur.pop_back();
    Bitset without = pool;
    without.reset(pick);
    run(without);
  };

  run(Bitset::full(g.size()));
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<DerivedComponent> classify_derived_components(const Graph& g) {
  if (const auto bad = find_non_prismatic(g))
    throw precondition_error(
        "triangle-intersection classification requires a prismatic graph: " +
        bad->describe());
  const DerivedGraph d = derived_graph(g);

  std::vector<int> comp(d.graph.size(), -1);
  std::vector<std::vector<int>> members;
  for (int v = 0; v < d.graph.size(); ++v) {
    if (comp[v] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.push_back({v});
    comp[v] = id;
    for (std::size_t head = 0; head < members[id].size(); ++head) {
      d.graph.row(members[id][head]).for_each([&](int u) {
        if (comp[u] < 0) {
          comp[u] = id;
          members[id].push_back(u);
        }
      });
    }
    std::sort(members[id].begin(), members[id].end());
  }

  std::vector<DerivedComponent> out;
  for (const std::vector<int>& m : members) {
    DerivedComponent c;
    c.graph = induced_subgraph(d.graph, m).graph;
    for (int v : m) c.triangles.push_back(d.triangles[v]);
    if (c.graph.size() == 6 &&
        is_isomorphic_small(c.graph, complete_bipartite(3, 3)))
      c.kind = ComponentKind::K33;
    else if (!find_claw(c.graph))
      c.kind = ComponentKind::ClawFree;
    else
      c.kind = ComponentKind::Neither;
    out.push_back(std::move(c));
  }
  return out;
}

TrianglePacking max_triangle_packing_prismatic(const Graph& g) {
  if (const auto bad = find_non_prismatic(g))
    throw precondition_error("maximum packing requires a prismatic graph: " +
                             bad->describe());
  if (g.size() <= 27) return PackingSearch(g).result();
  if (const auto hit = find_hitting_set_at_most(g, 5))
    return packing_via_hitters(g, hit->vertices);

  std::vector<Triangle> all;
  for (const DerivedComponent& c : classify_derived_components(g)) {
    std::vector<int> pick;
    if (c.kind == ComponentKind::K33) {
      const auto [left, right] = bipartition(c.graph);
      Triangle least_left = c.triangles[left.front()];
      for (int v : left) least_left = std::min(least_left, c.triangles[v]);
      Triangle least_right = c.triangles[right.front()];
      for (int v : right) least_right = std::min(least_right, c.triangles[v]);
      pick = least_left < least_right ? left : right;
    } else if (c.kind == ComponentKind::ClawFree) {
      pick = max_stable_set_clawfree(c.graph);
    } else {
      throw precondition_error(
          "triangle-intersection component is neither complete bipartite nor "
          "claw-free; the packing dichotomy does not apply");
    }
    for (int v : pick) all.push_back(c.triangles[v]);
  }
  std::sort(all.begin(), all.end());
  return TrianglePacking{all};
}

}  // namespace prismatic
