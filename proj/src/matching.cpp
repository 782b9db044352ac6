#include "prismatic/matching.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "prismatic/bitset.hpp"
#include "prismatic/errors.hpp"

namespace prismatic {

namespace {

// Blossom algorithm, contraction via base[] relabeling; one alternating-tree
// search per unmatched vertex.
class BlossomSolver {
 public:
  explicit BlossomSolver(const Graph& g)
      : g_(g), n_(g.size()), match_(n_, -1), p_(n_, -1), base_(n_),
        used_(n_, false), blossom_(n_, false) {}

  std::vector<int> run() {
    // Greedy seed keeps the number of tree searches small.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      for (int u = g_.row(v).first(); u >= 0; u = g_.row(v).next(u))
        if (match_[u] < 0) {
          match_[v] = u;
          match_[u] = v;
          break;
        }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      const int leaf = find_path(v);
      if (leaf < 0) continue;
      for (int u = leaf; u >= 0;) {
        const int pv = p_[u];
        const int next = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = next;
      }
    }
    return match_;
  }

 private:
  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = true;
      blossom_[base_[match_[v]]] = true;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (int x = a;;) {
      x = base_[x];
      seen[x] = true;
      if (match_[x] < 0) break;
      x = p_[match_[x]];
    }
    for (int y = b;;) {
      y = base_[y];
      if (seen[y]) return y;
      y = p_[match_[y]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(p_.begin(), p_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::deque<int> q{root};
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      for (int to = g_.row(v).first(); to >= 0; to = g_.row(v).next(to)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && p_[match_[to]] >= 0)) {
          const int curbase = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n_; ++i)
            if (blossom_[base_[i]]) {
              base_[i] = curbase;
              if (!used_[i]) {
                used_[i] = true;
                q.push_back(i);
              }
            }
        } else if (p_[to] < 0) {
          p_[to] = v;
          if (match_[to] < 0) return to;
          used_[match_[to]] = true;
          q.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, p_, base_;
  std::vector<bool> used_, blossom_;
};

}  // namespace

Matching max_matching(const Graph& g) {
  Matching m;
  m.mate = BlossomSolver(g).run();
  for (int v = 0; v < g.size(); ++v)
    if (m.mate[v] > v) m.edges.emplace_back(v, m.mate[v]);
  return m;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  if (static_cast<int>(m.mate.size()) != g.size()) return false;
  int matched = 0;
  for (int v = 0; v < g.size(); ++v) {
    const int u = m.mate[v];
    if (u == -1) continue;
    if (u < 0 || u >= g.size() || u == v) return false;
    if (m.mate[u] != v || !g.adjacent(u, v)) return false;
    ++matched;
  }
  if (matched != 2 * m.size()) return false;
  std::vector<std::pair<int, int>> expect;
  for (int v = 0; v < g.size(); ++v)
    if (m.mate[v] > v) expect.emplace_back(v, m.mate[v]);
  return expect == m.edges;
}

namespace {

bool augmenting_path_search(const Graph& g, const std::vector<int>& mate) {
  const int n = g.size();
  std::vector<int> state(n, -1);  // -1 outside, 0 even, 1 odd
  std::vector<int> root(n, -1), parent(n, -1);
  std::deque<int> q;
  for (int v = 0; v < n; ++v)
    if (mate[v] < 0) {
      state[v] = 0;
      root[v] = v;
      q.push_back(v);
    }
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int u = g.row(v).first(); u >= 0; u = g.row(v).next(u)) {
      if (state[u] == 1) continue;
      if (state[u] == -1) {
        state[u] = 1;
        parent[u] = v;
        root[u] = root[v];
        const int w = mate[u];
        state[w] = 0;
        parent[w] = u;
        root[w] = root[v];
        q.push_back(w);
        continue;
      }
      // Even-even edge: two trees give an augmenting path, one tree gives a
      // blossom; Edmonds' theorem lets us contract it and recurse.
      if (root[u] != root[v]) return true;

      std::vector<bool> ancestor(n, false);
      for (int x = v; x >= 0; x = parent[x]) ancestor[x] = true;
      int lca = u;
      while (!ancestor[lca]) lca = parent[lca];
      std::vector<bool> in_blossom(n, false);
      for (int x = v; x != lca; x = parent[x]) in_blossom[x] = true;
      for (int x = u; x != lca; x = parent[x]) in_blossom[x] = true;
      in_blossom[lca] = true;

      std::vector<int> map(n, -1);
      int next = 0;
      for (int x = 0; x < n; ++x)
        if (!in_blossom[x] || x == lca) map[x] = next++;
      for (int x = 0; x < n; ++x)
        if (in_blossom[x]) map[x] = map[lca];
      GraphBuilder b(next);
      for (auto [x, y] : g.edge_list())
        if (map[x] != map[y]) b.add_edge(map[x], map[y]);
      std::vector<int> cmate(next, -1);
      for (int x = 0; x < n; ++x) {
        if (in_blossom[x] && x != lca) continue;
        const int mx = mate[x];
        if (mx < 0) continue;
        if (in_blossom[mx] && mx != lca) continue;  // matched inside blossom
        cmate[map[x]] = map[mx];
      }
      return augmenting_path_search(std::move(b).build(), cmate);
    }
  }
  return false;
}

}  // namespace

bool has_augmenting_path(const Graph& g, const std::vector<int>& mate) {
  if (static_cast<int>(mate.size()) != g.size())
    throw precondition_error("mate vector size mismatch");
  for (int v = 0; v < g.size(); ++v)
    if (mate[v] != -1 &&
        (mate[v] < 0 || mate[v] >= g.size() || mate[mate[v]] != v ||
         !g.adjacent(v, mate[v])))
      throw precondition_error("mate vector is not a matching");
  return augmenting_path_search(g, mate);
}

}  // namespace prismatic
