#include "prismatic/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "prismatic/errors.hpp"

namespace prismatic {

Triangle::Triangle(int a, int b, int c) : v{a, b, c} {
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2])
    throw precondition_error("triangle vertices must be distinct");
}

std::string Triangle::str() const {
  return "{" + std::to_string(v[0]) + " " + std::to_string(v[1]) + " " +
         std::to_string(v[2]) + "}";
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
      out.emplace_back(u, v);
  return out;
}

bool Graph::has_labels() const {
  for (const auto& l : labels_)
    if (!l.empty()) return true;
  return false;
}

GraphBuilder::GraphBuilder(int n) : n_(n), adj_(n, Bitset(n)), labels_(n) {
  if (n < 0) throw precondition_error("vertex count must be non-negative");
}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw precondition_error("edge endpoint out of range: (" +
                             std::to_string(u) + ", " + std::to_string(v) +
                             ")");
  if (u == v)
    throw precondition_error("self-loop rejected: (" + std::to_string(u) +
                             ", " + std::to_string(v) + ")");
  adj_[u].set(v);
  adj_[v].set(u);
}

void GraphBuilder::set_label(int v, std::string label) {
  if (v < 0 || v >= n_)
    throw precondition_error("label vertex out of range: " +
                             std::to_string(v));
  labels_[v] = std::move(label);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.adj_ = std::move(adj_);
  g.labels_ = std::move(labels_);
  int deg_sum = 0;
  for (int v = 0; v < g.n_; ++v) deg_sum += g.adj_[v].count();
  g.m_ = deg_sum / 2;
  return g;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  const int n = g.size();
  for (int u = 0; u < n; ++u) {
    for (int v = g.row(u).next(u); v >= 0; v = g.row(u).next(v)) {
      Bitset common = g.row(u) & g.row(v);
      for (int w = common.next(v); w >= 0; w = common.next(w))
        out.push_back(Triangle(u, v, w));
    }
  }
  return out;  // already lexicographically sorted by construction
}

Bitset core_bitset(const Graph& g) {
  const int n = g.size();
  Bitset c(n);
  for (int v = 0; v < n; ++v) {
    for (int u = g.row(v).first(); u >= 0; u = g.row(v).next(u)) {
      if (g.row(v).intersects(g.row(u))) {
        c.set(v);
        break;
      }
    }
  }
  return c;
}

std::vector<int> core(const Graph& g) { return core_bitset(g).to_vector(); }

Subgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  for (int v : vertices)
    if (v < 0 || v >= g.size())
      throw precondition_error("induced_subgraph: vertex out of range: " +
                               std::to_string(v));
  const int k = static_cast<int>(vertices.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) {
    b.set_label(i, g.label(vertices[i]));
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
  }
  return Subgraph{std::move(b).build(), std::move(vertices)};
}

DerivedGraph derived_graph(const Graph& g) {
  std::vector<Triangle> tris = triangles(g);
  const int t = static_cast<int>(tris.size());
  std::vector<Bitset> sets;
  sets.reserve(t);
  for (const Triangle& tr : tris) {
    Bitset b(g.size());
    b.set(tr[0]);
    b.set(tr[1]);
    b.set(tr[2]);
    sets.push_back(std::move(b));
  }
  GraphBuilder b(t);
  for (int i = 0; i < t; ++i) {
    b.set_label(i, std::to_string(tris[i][0]) + "," +
                       std::to_string(tris[i][1]) + "," +
                       std::to_string(tris[i][2]));
    for (int j = i + 1; j < t; ++j)
      if (sets[i].intersects(sets[j])) b.add_edge(i, j);
  }
  return DerivedGraph{std::move(b).build(), std::move(tris)};
}

namespace {

bool iso_extend(const Graph& a, const Graph& b, const std::vector<int>& order,
                std::vector<int>& map, std::vector<bool>& used,
                std::size_t pos) {
  if (pos == order.size()) return true;
  const int u = order[pos];
  for (int w = 0; w < b.size(); ++w) {
    if (used[w] || a.degree(u) != b.degree(w)) continue;
    bool ok = true;
    for (std::size_t q = 0; q < pos && ok; ++q)
      ok = a.adjacent(u, order[q]) == b.adjacent(w, map[order[q]]);
    if (!ok) continue;
    used[w] = true;
    map[u] = w;
    if (iso_extend(a, b, order, map, used, pos + 1)) return true;
    used[w] = false;
    map[u] = -1;
  }
  return false;
}

}  // namespace

bool is_isomorphic_small(const Graph& a, const Graph& b) {
  if (a.size() > 12 || b.size() > 12)
    throw precondition_error(
        "is_isomorphic_small: inputs must have at most 12 vertices");
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.size(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.size(); ++v) db.push_back(b.degree(v));
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (da[x] != da[y]) return da[x] > da[y];
    return x < y;
  });
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  return iso_extend(a, b, order, map, used, 0);
}

bool same_adjacency(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  for (int v = 0; v < a.size(); ++v)
    if (!(a.row(v) == b.row(v))) return false;
  return true;
}

Graph empty_graph(int n) { return build_graph(n, {}); }

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  if (n >= 3) b.add_edge(0, n - 1);
  return std::move(b).build();
}

Graph complete_bipartite(int a, int b) {
  GraphBuilder g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return std::move(g).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder g(a.size() + b.size());
  for (auto [u, v] : a.edge_list()) g.add_edge(u, v);
  for (auto [u, v] : b.edge_list()) g.add_edge(a.size() + u, a.size() + v);
  for (int v = 0; v < a.size(); ++v) g.set_label(v, a.label(v));
  for (int v = 0; v < b.size(); ++v) g.set_label(a.size() + v, b.label(v));
  return std::move(g).build();
}

}  // namespace prismatic
