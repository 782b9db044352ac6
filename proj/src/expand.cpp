#include "prismatic/expand.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "prismatic/errors.hpp"
#include "prismatic/recognition.hpp"

namespace prismatic {

MultiplyResult multiply(const Graph& host, const MultiplicationSpec& spec) {
  const int n = host.size();
  std::vector<int> owner(n, -1);  // host vertex -> class index
  for (std::size_t k = 0; k < spec.classes.size(); ++k) {
    const MultiplicationClass& cls = spec.classes[k];
    if (cls.vertex < 0 || cls.vertex >= n)
      throw precondition_error("multiplied vertex out of range: " +
                               std::to_string(cls.vertex));
    if (owner[cls.vertex] >= 0)
      throw precondition_error("vertex " + std::to_string(cls.vertex) +
                               " multiplied twice");
    if (cls.phi.empty())
      throw precondition_error("class of vertex " +
                               std::to_string(cls.vertex) + " is empty");
    std::set<int> seen(cls.phi.begin(), cls.phi.end());
    if (seen.size() != cls.phi.size())
      throw precondition_error("phi is not injective on the class of vertex " +
                               std::to_string(cls.vertex));
    owner[cls.vertex] = static_cast<int>(k);
  }

  MultiplyResult out;
  out.survivor.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (owner[v] < 0) out.survivor[v] = next++;
  out.class_vertices.resize(spec.classes.size());
  for (std::size_t k = 0; k < spec.classes.size(); ++k)
    for (std::size_t i = 0; i < spec.classes[k].phi.size(); ++i)
      out.class_vertices[k].push_back(next++);

  GraphBuilder b(next);
  for (int v = 0; v < n; ++v) {
    if (out.survivor[v] < 0) continue;
    if (!host.label(v).empty()) b.set_label(out.survivor[v], host.label(v));
    for (int u = host.row(v).next(v); u >= 0; u = host.row(v).next(u))
      if (out.survivor[u] >= 0) b.add_edge(out.survivor[v], out.survivor[u]);
  }
  for (std::size_t k = 0; k < spec.classes.size(); ++k) {
    const MultiplicationClass& cls = spec.classes[k];
    const int x = cls.vertex;
    for (std::size_t i = 0; i < cls.phi.size(); ++i) {
      const int nv = out.class_vertices[k][i];
      if (!host.label(x).empty())
        b.set_label(nv, host.label(x) + "*" + std::to_string(cls.phi[i]));
      for (int u = host.row(x).first(); u >= 0; u = host.row(x).next(u))
        if (out.survivor[u] >= 0) b.add_edge(nv, out.survivor[u]);
    }
  }
  for (std::size_t k = 0; k < spec.classes.size(); ++k) {
    for (std::size_t l = k + 1; l < spec.classes.size(); ++l) {
      const bool adj =
          host.adjacent(spec.classes[k].vertex, spec.classes[l].vertex);
      for (std::size_t i = 0; i < spec.classes[k].phi.size(); ++i)
        for (std::size_t j = 0; j < spec.classes[l].phi.size(); ++j) {
          const bool same = spec.classes[k].phi[i] == spec.classes[l].phi[j];
          if (adj == same)
            b.add_edge(out.class_vertices[k][i], out.class_vertices[l][j]);
        }
    }
  }
  out.graph = std::move(b).build();
  return out;
}

ExponentiateResult exponentiate(const Graph& host,
                                const ExponentiationSpec& spec) {
  const int n = host.size();
  const int a = spec.a, bb = spec.b, c = spec.c;
  for (int v : {a, bb, c})
    if (v < 0 || v >= n)
      throw precondition_error("leaf triangle vertex out of range: " +
                               std::to_string(v));
  if (a == bb || a == c || bb == c || !host.adjacent(a, bb) ||
      !host.adjacent(a, c) || !host.adjacent(bb, c))
    throw precondition_error("{" + std::to_string(a) + ", " +
                             std::to_string(bb) + ", " + std::to_string(c) +
                             "} is not a triangle of the host");
  const Triangle leaf(a, bb, c);
  for (const Triangle& t : triangles(host)) {
    if (t == leaf) continue;
    if (t.contains(a) || t.contains(bb))
      throw precondition_error(
          "not a leaf triangle at " + std::to_string(c) + ": triangle " +
          t.str() + " meets {" + std::to_string(a) + ", " +
          std::to_string(bb) + "}");
  }
  if (spec.a_count < 0 || spec.b_count < 0 || spec.c_count < 0)
    throw precondition_error("negative replacement set size");
  if (spec.a_side.size() != spec.matching.size())
    throw precondition_error("side choices must match the A-B matching: " +
                             std::to_string(spec.matching.size()) +
                             " edges, " + std::to_string(spec.a_side.size()) +
                             " sides");
  std::vector<int> a_used(spec.a_count, 0), b_used(spec.b_count, 0);
  for (auto [i, j] : spec.matching) {
    if (i < 0 || i >= spec.a_count || j < 0 || j >= spec.b_count)
      throw precondition_error("matching index out of range");
    if (a_used[i]++ || b_used[j]++)
      throw precondition_error(
          "matching uses a replacement vertex more than once");
  }

  // Partition of N(c) \ {a,b}: in a triangle avoiding c / in a triangle
  // (necessarily through c) / in no triangle.
  std::vector<bool> in_any(n, false), in_without_c(n, false);
  for (const Triangle& t : triangles(host))
    for (int k = 0; k < 3; ++k) {
      in_any[t[k]] = true;
      if (!t.contains(c)) in_without_c[t[k]] = true;
    }
  Bitset d13(n);
  for (int v = host.row(c).first(); v >= 0; v = host.row(c).next(v))
    if (v != a && v != bb && (in_without_c[v] || !in_any[v])) d13.set(v);

  ExponentiateResult out;
  out.survivor.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (v != a && v != bb) out.survivor[v] = next++;
  for (int i = 0; i < spec.a_count; ++i) out.a_vertices.push_back(next++);
  for (int i = 0; i < spec.b_count; ++i) out.b_vertices.push_back(next++);
  for (int i = 0; i < spec.c_count; ++i) out.c_vertices.push_back(next++);

  GraphBuilder g(next);
  for (int v = 0; v < n; ++v) {
    if (out.survivor[v] < 0) continue;
    if (!host.label(v).empty()) g.set_label(out.survivor[v], host.label(v));
    for (int u = host.row(v).next(v); u >= 0; u = host.row(v).next(u))
      if (out.survivor[u] >= 0) g.add_edge(out.survivor[v], out.survivor[u]);
  }
  auto label_class = [&](const std::vector<int>& ids, int src) {
    if (host.label(src).empty()) return;
    for (std::size_t i = 0; i < ids.size(); ++i)
      g.set_label(ids[i], host.label(src) + "*" + std::to_string(i + 1));
  };
  label_class(out.a_vertices, a);
  label_class(out.b_vertices, bb);
  label_class(out.c_vertices, c);

  for (int v = 0; v < n; ++v) {
    if (out.survivor[v] < 0) continue;
    if (host.adjacent(v, a))
      for (int x : out.a_vertices) g.add_edge(out.survivor[v], x);
    if (host.adjacent(v, bb))
      for (int x : out.b_vertices) g.add_edge(out.survivor[v], x);
    if (d13.test(v))
      for (int x : out.c_vertices) g.add_edge(out.survivor[v], x);
  }
  std::vector<bool> a_matched(spec.a_count, false),
      b_matched(spec.b_count, false);
  for (std::size_t e = 0; e < spec.matching.size(); ++e) {
    const auto [i, j] = spec.matching[e];
    a_matched[i] = true;
    b_matched[j] = true;
    g.add_edge(out.a_vertices[i], out.b_vertices[j]);
    const int end = spec.a_side[e] ? out.a_vertices[i] : out.b_vertices[j];
    for (int x : out.c_vertices) g.add_edge(x, end);
  }
  for (int i = 0; i < spec.a_count; ++i)
    if (!a_matched[i])
      for (int x : out.c_vertices) g.add_edge(x, out.a_vertices[i]);
  for (int j = 0; j < spec.b_count; ++j)
    if (!b_matched[j])
      for (int x : out.c_vertices) g.add_edge(x, out.b_vertices[j]);

  out.graph = std::move(g).build();
  if (auto bad = find_non_prismatic(out.graph))
    throw precondition_error("expansion result is not prismatic: " +
                             bad->describe());
  return out;
}

Graph replicate(const Graph& g, int v, int k) {
  if (v < 0 || v >= g.size())
    throw precondition_error("vertex out of range: " + std::to_string(v));
  if (k < 1) throw precondition_error("replication count must be at least 1");
  GraphBuilder b(g.size() + k - 1);
  for (auto [x, y] : g.edge_list()) b.add_edge(x, y);
  for (int x = 0; x < g.size(); ++x)
    if (!g.label(x).empty()) b.set_label(x, g.label(x));
  for (int i = 0; i < k - 1; ++i) {
    const int twin = g.size() + i;
    if (!g.label(v).empty()) b.set_label(twin, g.label(v));
    for (int u = g.row(v).first(); u >= 0; u = g.row(v).next(u))
      b.add_edge(twin, u);
  }
  return std::move(b).build();
}

}  // namespace prismatic
