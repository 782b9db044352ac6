#include "prismatic/families.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>

#include "prismatic/errors.hpp"
#include "prismatic/recognition.hpp"
#include "prismatic/schlafli.hpp"

namespace prismatic {

std::vector<std::pair<int, int>> IndexSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int l = 1; l <= 3; ++l)
    for (int c = 1; c <= 3; ++c)
      if (test(l, c)) out.push_back({l, c});
  return out;
}

IndexSet IndexSet::of(std::initializer_list<std::pair<int, int>> pairs) {
  IndexSet s;
  for (const auto& [l, c] : pairs) s.set(l, c);
  return s;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw precondition_error(message);
}

std::string cell(int line, int column) {
  return "(" + std::to_string(line) + "," + std::to_string(column) + ")";
}

int sid(Tile t, int line, int column) {
  return SchlafliVertex{t, line, column}.id();
}

void require_cells(const IndexSet& s, const std::string& name,
                   std::initializer_list<std::pair<int, int>> in,
                   std::initializer_list<std::pair<int, int>> out) {
  for (const auto& [l, c] : in)
    require(s.test(l, c), name + " must contain " + cell(l, c));
  for (const auto& [l, c] : out)
    require(!s.test(l, c), name + " must not contain " + cell(l, c));
}

std::vector<int> tile_ids(const IndexSet& i1, const IndexSet& i2,
                          const IndexSet& i3) {
  std::vector<int> ids;
  const std::array<const IndexSet*, 3> sets = {&i1, &i2, &i3};
  for (int t = 0; t < 3; ++t)
    for (const auto& [l, c] : sets[t]->pairs())
      ids.push_back(sid(static_cast<Tile>(t), l, c));
  return ids;
}

// Position of `value` in a sorted id list; the caller guarantees presence.
int position_of(const std::vector<int>& ids, int value) {
  return static_cast<int>(
      std::lower_bound(ids.begin(), ids.end(), value) - ids.begin());
}

Graph with_extra_edges(const Graph& g,
                       const std::vector<std::pair<int, int>>& extra) {
  GraphBuilder gb(g.size());
  for (const auto& [u, v] : g.edge_list()) gb.add_edge(u, v);
  for (const auto& [u, v] : extra) gb.add_edge(u, v);
  for (int v = 0; v < g.size(); ++v)
    if (!g.label(v).empty()) gb.set_label(v, g.label(v));
  return std::move(gb).build();
}

ExponentiationSpec expansion_spec(const ExpansionShape& shape, int a, int b,
                                  int c) {
  ExponentiationSpec e;
  e.a = a;
  e.b = b;
  e.c = c;
  e.a_count = shape.a_count;
  e.b_count = shape.b_count;
  e.c_count = shape.c_count;
  e.matching = shape.matching;
  e.a_side = shape.a_side;
  return e;
}

bool contains_value(const std::vector<int>& phi, int value) {
  return std::find(phi.begin(), phi.end(), value) != phi.end();
}

// New id of the class member carrying a given phi value.
int member_with_value(const MultiplyResult& res,
                      const std::vector<int>& phi, int cls, int value) {
  for (std::size_t j = 0; j < phi.size(); ++j)
    if (phi[j] == value) return res.class_vertices[cls][j];
  throw precondition_error("no class member carries value " +
                           std::to_string(value));
}

FamilyInstance build_sigma() {
  FamilyInstance inst{schlafli_complement(), std::nullopt, 10};
  inst.constructive_hitting_set = inst.graph.row(0).to_vector();
  return inst;
}

FamilyInstance build_schlafli_induced(const SchlafliInducedSpec& spec) {
  std::vector<int> ids = spec.sigma_ids;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int v : ids)
    require(0 <= v && v < 27,
            "vertex id " + std::to_string(v) + " is outside 0..26");
  return {schlafli_induced(ids).graph, std::nullopt, 0};
}

FamilyInstance build_fuzzily(const FuzzilySpec& spec) {
  // A 19-vertex induced subgraph of Sigma in which {r^1_1, s^1_1, t^1_1} is
  // a leaf triangle at t^1_1: the removals kill every other triangle through
  // the first two corners.
  const std::set<int> removed = {
      sid(Tile::R, 2, 2), sid(Tile::R, 2, 3), sid(Tile::S, 1, 2),
      sid(Tile::S, 1, 3), sid(Tile::S, 2, 2), sid(Tile::S, 2, 3),
      sid(Tile::T, 1, 2), sid(Tile::T, 1, 3)};
  std::vector<int> keep;
  for (int v = 0; v < 27; ++v)
    if (!removed.contains(v)) keep.push_back(v);
  const Subgraph host = schlafli_induced(keep);
  const int a = position_of(host.vertices, sid(Tile::R, 1, 1));
  const int b = position_of(host.vertices, sid(Tile::S, 1, 1));

  MultiplicationSpec ms;
  ms.classes.push_back({a, spec.phi_a});
  ms.classes.push_back({b, spec.phi_b});
  const MultiplyResult res = multiply(host.graph, ms);

  std::vector<int> construction;
  host.graph.row(a).for_each([&](int v) {
    if (v != b) construction.push_back(res.survivor[v]);
  });
  std::sort(construction.begin(), construction.end());
  return {res.graph, construction, 5};
}

FamilyInstance build_parallel_square(const ParallelSquareSpec& spec) {
  Graph host = line_graph_k33();
  if (spec.delete_z) {
    std::vector<int> keep;
    for (int v = 0; v < 8; ++v) keep.push_back(v);
    host = induced_subgraph(host, keep).graph;
  }
  // The 4-cycle on rows 1-2, columns 1-2, in cyclic order.
  const std::array<int, 4> cycle = {0, 1, 4, 3};
  MultiplicationSpec ms;
  for (int k = 0; k < 4; ++k) ms.classes.push_back({cycle[k], spec.phi[k]});
  const MultiplyResult res = multiply(host, ms);

  std::vector<int> construction;
  for (int v : {2, 5, 6, 7}) construction.push_back(res.survivor[v]);
  std::sort(construction.begin(), construction.end());
  return {res.graph, construction, 4};
}

FamilyInstance build_skew_square(const SkewSquareSpec& spec) {
  GraphBuilder kb(5);
  const std::array<std::string, 5> names = {"a", "b", "c", "s", "t"};
  for (int v = 0; v < 5; ++v) kb.set_label(v, names[v]);
  for (const auto& [u, v] : std::initializer_list<std::pair<int, int>>{
           {0, 2}, {0, 3}, {2, 3}, {1, 2}, {1, 4}, {2, 4}})
    kb.add_edge(u, v);
  const Graph k = std::move(kb).build();

  MultiplicationSpec ms;
  for (int c = 0; c < 3; ++c) ms.classes.push_back({c, spec.phi[c]});
  const MultiplyResult res = multiply(k, ms);

  const int base = res.graph.size();
  GraphBuilder gb(base + 3);
  for (const auto& [u, v] : res.graph.edge_list()) gb.add_edge(u, v);
  for (int v = 0; v < base; ++v)
    if (!res.graph.label(v).empty()) gb.set_label(v, res.graph.label(v));
  for (int i = 1; i <= 3; ++i) {
    const int d = base + i - 1;
    gb.set_label(d, "d" + std::to_string(i));
    for (int c = 0; c < 3; ++c) {
      for (std::size_t j = 0; j < spec.phi[c].size(); ++j) {
        const int f = spec.phi[c][j];
        const bool small_offside = 1 <= f && f <= 3 && f != i;
        const bool adjacent = c < 2 ? small_offside : !small_offside;
        if (adjacent) gb.add_edge(res.class_vertices[c][j], d);
      }
    }
  }
  std::vector<int> construction = {res.survivor[3], res.survivor[4], base, base + 1,
                            base + 2};
  std::sort(construction.begin(), construction.end());
  return {std::move(gb).build(), construction, 5};
}

FamilyInstance build_f0(const F0Spec& spec) {
  require_cells(spec.i1, "first index set",
                {{1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}, {{3, 3}});
  require_cells(spec.i2, "second index set", {{1, 1}, {2, 1}, {3, 2}},
                {{1, 2}, {1, 3}, {2, 2}, {2, 3}});
  require_cells(spec.i3, "third index set", {{1, 3}, {2, 1}, {2, 2}},
                {{1, 1}, {1, 2}, {3, 1}, {3, 2}});
  const std::vector<int> ids = tile_ids(spec.i1, spec.i2, spec.i3);
  const Subgraph host = schlafli_induced(ids);

  std::vector<std::pair<int, int>> extra;
  const auto maybe_link = [&](int u, int v) {
    if (std::binary_search(ids.begin(), ids.end(), u) &&
        std::binary_search(ids.begin(), ids.end(), v))
      extra.push_back({position_of(ids, u), position_of(ids, v)});
  };
  maybe_link(sid(Tile::S, 3, 1), sid(Tile::T, 2, 3));
  maybe_link(sid(Tile::S, 3, 1), sid(Tile::T, 3, 3));
  maybe_link(sid(Tile::S, 3, 3), sid(Tile::T, 2, 3));

  std::vector<int> construction = {position_of(ids, sid(Tile::R, 1, 3)),
                            position_of(ids, sid(Tile::R, 2, 3)),
                            position_of(ids, sid(Tile::T, 1, 3))};
  std::sort(construction.begin(), construction.end());
  return {with_extra_edges(host.graph, extra), construction, 3};
}

FamilyInstance build_f1(const F1Spec& spec) {
  require(spec.r_count == 0 || spec.r_count == 1,
          "at most one shared apex vertex is allowed");
  require(spec.a_pairs >= 0 && spec.a_singles >= 0 && spec.b_pairs >= 0 &&
              spec.b_singles >= 0,
          "block counts must be non-negative");
  const int bits_needed = spec.a_pairs * spec.b_pairs +
                          spec.a_pairs * spec.b_singles +
                          spec.b_pairs * spec.a_singles;
  require(bits_needed <= 64, "at most 64 orientation choices are supported");

  const int a0 = 2 + spec.r_count;
  const int as0 = a0 + 2 * spec.a_pairs;
  const int b0 = as0 + spec.a_singles;
  const int bs0 = b0 + 2 * spec.b_pairs;
  const int n = bs0 + spec.b_singles;

  GraphBuilder gb(n);
  gb.set_label(0, "s");
  gb.set_label(1, "t");
  if (spec.r_count == 1) gb.set_label(2, "r");
  for (int v = a0; v < b0; ++v)
    gb.set_label(v, "a" + std::to_string(v - a0 + 1));
  for (int v = b0; v < n; ++v)
    gb.set_label(v, "b" + std::to_string(v - b0 + 1));

  gb.add_edge(0, 1);
  if (spec.r_count == 1) {
    gb.add_edge(0, 2);
    gb.add_edge(1, 2);
  }
  for (int v = a0; v < b0; ++v) gb.add_edge(0, v);
  for (int v = b0; v < n; ++v) gb.add_edge(1, v);
  for (int p = 0; p < spec.a_pairs; ++p)
    gb.add_edge(a0 + 2 * p, a0 + 2 * p + 1);
  for (int q = 0; q < spec.b_pairs; ++q)
    gb.add_edge(b0 + 2 * q, b0 + 2 * q + 1);

  int bit = 0;
  const auto take = [&] {
    return (spec.choice_bits >> bit++) & std::uint64_t{1};
  };
  for (int p = 0; p < spec.a_pairs; ++p)
    for (int q = 0; q < spec.b_pairs; ++q) {
      const int x = a0 + 2 * p, y = b0 + 2 * q;
      if (take()) {
        gb.add_edge(x, y + 1);
        gb.add_edge(x + 1, y);
      } else {
        gb.add_edge(x, y);
        gb.add_edge(x + 1, y + 1);
      }
    }
  for (int p = 0; p < spec.a_pairs; ++p)
    for (int q = 0; q < spec.b_singles; ++q)
      gb.add_edge(a0 + 2 * p + (take() ? 1 : 0), bs0 + q);
  for (int q = 0; q < spec.b_pairs; ++q)
    for (int p = 0; p < spec.a_singles; ++p)
      gb.add_edge(as0 + p, b0 + 2 * q + (take() ? 1 : 0));
  for (int p = 0; p < spec.a_singles; ++p)
    for (int q = 0; q < spec.b_singles; ++q)
      gb.add_edge(as0 + p, bs0 + q);

  return {std::move(gb).build(), std::vector<int>{0, 1}, 2};
}

FamilyInstance build_f2(const F2Spec& spec) {
  const auto& p12 = spec.phi[0];
  const auto& p13 = spec.phi[1];
  const auto& p21 = spec.phi[2];
  const auto& p31 = spec.phi[3];
  require(contains_value(p12, 1), "class of (1,2) must carry value 1");
  require(contains_value(p21, 1), "class of (2,1) must carry value 1");
  require(!contains_value(p13, 1) && !contains_value(p31, 1),
          "classes of (1,3) and (3,1) must avoid value 1");
  for (int v : p13)
    require(!contains_value(p31, v),
            "classes of (1,3) and (3,1) must use disjoint values");

  const Graph k = complement_line_graph_k33();
  const std::array<int, 4> xs = {1, 2, 3, 6};
  MultiplicationSpec ms;
  for (int c = 0; c < 4; ++c) ms.classes.push_back({xs[c], spec.phi[c]});
  const MultiplyResult res = multiply(k, ms);

  const int a = member_with_value(res, p12, 0, 1);
  const int b = member_with_value(res, p21, 2, 1);
  const int c = res.survivor[8];
  const ExponentiateResult ex =
      exponentiate(res.graph, expansion_spec(spec.expansion, a, b, c));

  std::vector<int> construction;
  for (int v : {4, 5, 7, 8}) construction.push_back(ex.survivor[res.survivor[v]]);
  std::sort(construction.begin(), construction.end());
  return {ex.graph, construction, 4};
}

FamilyInstance build_f3(const F3Spec& spec) {
  const auto& p12 = spec.phi[0];
  const auto& p13 = spec.phi[1];
  const auto& p21 = spec.phi[2];
  const auto& p31 = spec.phi[3];
  require(contains_value(p12, 1), "class of (1,2) must carry value 1");
  require(contains_value(p31, 1), "class of (3,1) must carry value 1");
  require(!contains_value(p13, 1) && !contains_value(p21, 1),
          "classes of (1,3) and (2,1) must avoid value 1");
  require(contains_value(p13, 2), "class of (1,3) must carry value 2");
  require(contains_value(p21, 2), "class of (2,1) must carry value 2");
  require(!contains_value(p12, 2) && !contains_value(p31, 2),
          "classes of (1,2) and (3,1) must avoid value 2");

  const Graph k = complement_line_graph_k33();
  std::vector<int> keep;
  for (int v = 0; v < 9; ++v) {
    if (v == 4) continue;
    if (v == 0 && spec.delete_11) continue;
    keep.push_back(v);
  }
  const Graph host = induced_subgraph(k, keep).graph;
  const auto hid = [&](int kid) { return position_of(keep, kid); };

  const std::array<int, 4> xs = {hid(1), hid(2), hid(3), hid(6)};
  MultiplicationSpec ms;
  for (int c = 0; c < 4; ++c) ms.classes.push_back({xs[c], spec.phi[c]});
  const MultiplyResult res = multiply(host, ms);

  const ExponentiateResult ex1 = exponentiate(
      res.graph,
      expansion_spec(spec.expansion_first, member_with_value(res, p12, 0, 1),
                     member_with_value(res, p31, 3, 1),
                     res.survivor[hid(5)]));
  const ExponentiateResult ex2 = exponentiate(
      ex1.graph,
      expansion_spec(spec.expansion_second,
                     ex1.survivor[member_with_value(res, p13, 1, 2)],
                     ex1.survivor[member_with_value(res, p21, 2, 2)],
                     ex1.survivor[res.survivor[hid(7)]]));

  std::vector<int> construction;
  for (int v : {5, 7, 8})
    construction.push_back(ex2.survivor[ex1.survivor[res.survivor[hid(v)]]]);
  std::sort(construction.begin(), construction.end());
  return {ex2.graph, construction, 3};
}

FamilyInstance build_f4(const F4Spec& spec) {
  require(spec.y[0] || spec.y[1] || spec.y[2],
          "at least one vertex of the third line of the first tile is "
          "required");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 2; ++j)
      require(spec.i.test(i, j),
              "index set must contain " + cell(i, j));
  const int col3 = (spec.i.test(1, 3) ? 1 : 0) + (spec.i.test(2, 3) ? 1 : 0) +
                   (spec.i.test(3, 3) ? 1 : 0);
  require(col3 >= 2, "index set must contain at least two cells of column 3");

  std::vector<int> ids;
  for (int j = 1; j <= 3; ++j)
    if (spec.y[j - 1]) ids.push_back(sid(Tile::R, 3, j));
  for (const auto& [l, c] : spec.i.pairs()) ids.push_back(sid(Tile::S, l, c));
  for (int j = 1; j <= 3; ++j) ids.push_back(sid(Tile::T, j, j));
  std::sort(ids.begin(), ids.end());
  const Subgraph host = schlafli_induced(ids);

  const ExponentiateResult ex = exponentiate(
      host.graph,
      expansion_spec(spec.expansion, position_of(ids, sid(Tile::T, 1, 1)),
                     position_of(ids, sid(Tile::T, 2, 2)),
                     position_of(ids, sid(Tile::T, 3, 3))));

  std::vector<int> construction;
  for (int v : {sid(Tile::S, 3, 1), sid(Tile::S, 3, 2), sid(Tile::T, 3, 3)})
    construction.push_back(ex.survivor[position_of(ids, v)]);
  if (spec.i.test(3, 3))
    construction.push_back(ex.survivor[position_of(ids, sid(Tile::S, 3, 3))]);
  std::sort(construction.begin(), construction.end());
  return {ex.graph, construction, 4};
}

FamilyInstance build_f5(const F5Spec& spec) {
  require_cells(spec.i1, "first index set",
                {{1, 1}, {3, 1}, {3, 2}, {3, 3}}, {{2, 2}, {2, 3}});
  require_cells(spec.i2, "second index set", {}, {{1, 1}});
  require_cells(spec.i3, "third index set",
                {{1, 2}, {1, 3}, {2, 3}, {3, 3}}, {{2, 1}, {3, 1}});
  const std::vector<int> ids = tile_ids(spec.i1, spec.i2, spec.i3);
  const Subgraph host = schlafli_induced(ids);

  const Graph g = with_extra_edges(
      host.graph, {{position_of(ids, sid(Tile::R, 1, 1)),
                    position_of(ids, sid(Tile::T, 1, 2))}});

  const SchlafliVertex corner = SchlafliVertex::from_id(sid(Tile::R, 1, 1));
  std::vector<int> construction;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (sigma_adjacent(corner, SchlafliVertex::from_id(ids[i])))
      construction.push_back(static_cast<int>(i));
  return {g, construction, 5};
}

FamilyInstance build_f6(const F6Spec& spec) {
  const IndexSet i1 =
      IndexSet::of({{1, 1}, {1, 2}, {1, 3}, {3, 1}, {3, 2}, {3, 3}});
  const IndexSet i2 = IndexSet::of({{1, 2}, {2, 1}, {2, 2}, {3, 3}});
  const IndexSet i3 =
      IndexSet::of({{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}});
  const std::vector<int> ids = tile_ids(i1, i2, i3);
  const Subgraph host = schlafli_induced(ids);

  const Graph plus = with_extra_edges(
      host.graph, {{position_of(ids, sid(Tile::R, 1, 1)),
                    position_of(ids, sid(Tile::T, 1, 2))}});

  MultiplicationSpec ms;
  ms.classes.push_back({position_of(ids, sid(Tile::R, 3, 3)), spec.phi_r});
  ms.classes.push_back({position_of(ids, sid(Tile::T, 3, 3)), spec.phi_t});
  const MultiplyResult res = multiply(plus, ms);

  std::vector<int> construction;
  for (int v : {sid(Tile::R, 3, 1), sid(Tile::R, 3, 2), sid(Tile::S, 3, 3)})
    construction.push_back(res.survivor[position_of(ids, v)]);
  std::sort(construction.begin(), construction.end());
  return {res.graph, construction, 3};
}

FamilyInstance build_f7(const F7Spec& spec) {
  const std::array<std::string, 6> names = {"a1", "a2", "a3",
                                            "b1", "b2", "b3"};
  const std::vector<std::pair<int, int>> prism_edges = {
      {0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5},
      {4, 5}, {0, 3}, {1, 4}, {2, 5}};
  const std::set<std::pair<int, int>> allowed = {{0, 4}, {0, 5}, {1, 3},
                                                 {1, 5}, {2, 3}, {2, 4}};

  std::set<std::pair<int, int>> edges(prism_edges.begin(), prism_edges.end());
  for (auto [u, v] : spec.extra_edges) {
    if (u > v) std::swap(u, v);
    require(allowed.contains({u, v}),
            "edge " + std::to_string(u) + "-" + std::to_string(v) +
                " is not available beyond the prism");
    edges.insert({u, v});
  }
  std::vector<int> verts = spec.k_vertices;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    require(0 <= v && v < 6,
            "vertex " + std::to_string(v) + " is outside the 6-vertex host");

  std::array<std::array<bool, 6>, 6> kadj{};
  for (const auto& [u, v] : edges) kadj[u][v] = kadj[v][u] = true;

  const std::vector<std::pair<int, int>> elist(edges.begin(), edges.end());
  const int ne = static_cast<int>(elist.size());
  const int n = ne + static_cast<int>(verts.size());
  GraphBuilder gb(n);
  for (int i = 0; i < ne; ++i)
    gb.set_label(i, names[elist[i].first] + names[elist[i].second]);
  for (std::size_t i = 0; i < verts.size(); ++i)
    gb.set_label(ne + static_cast<int>(i), names[verts[i]]);

  for (int i = 0; i < ne; ++i)
    for (int j = i + 1; j < ne; ++j) {
      const auto& [a, b] = elist[i];
      const auto& [c, d] = elist[j];
      if (a != c && a != d && b != c && b != d) gb.add_edge(i, j);
    }
  for (int i = 0; i < ne; ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (elist[i].first == verts[j] || elist[i].second == verts[j])
        gb.add_edge(i, ne + static_cast<int>(j));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!kadj[verts[i]][verts[j]])
        gb.add_edge(ne + static_cast<int>(i), ne + static_cast<int>(j));

  std::vector<int> construction;
  for (int i = 0; i < ne; ++i)
    if (elist[i].first == 0) construction.push_back(i);
  return {std::move(gb).build(), construction, 5};
}

FamilyInstance build_f8(const F8Spec& spec) {
  Graph g = rotator_graph();
  const std::array<std::pair<int, int>, 3> pairs = {
      {{3, 6}, {4, 7}, {5, 8}}};
  std::array<int, 9> where;
  for (int v = 0; v < 9; ++v) where[v] = v;

  for (int step = 0; step < 3; ++step) {
    MultiplicationSpec ms;
    ms.classes.push_back({where[pairs[step].first], spec.phi[2 * step]});
    ms.classes.push_back({where[pairs[step].second], spec.phi[2 * step + 1]});
    const MultiplyResult res = multiply(g, ms);
    for (int v = 0; v < 9; ++v)
      if (where[v] >= 0) where[v] = res.survivor[where[v]];
    g = res.graph;
  }

  std::vector<int> construction = {where[0], where[1], where[2]};
  std::sort(construction.begin(), construction.end());
  return {g, construction, 3};
}

FamilyInstance build_f9(const F9Spec& spec) {
  require_cells(spec.i1, "first index set",
                {{2, 1}, {3, 1}, {3, 2}, {3, 3}},
                {{1, 1}, {2, 2}, {2, 3}});
  require(spec.i1.test(1, 2) || spec.i1.test(1, 3),
          "first index set must contain (1,2) or (1,3)");
  require_cells(spec.i2, "second index set", {{1, 1}, {2, 2}, {3, 3}},
                {{1, 2}, {1, 3}});
  require_cells(spec.i3, "third index set", {{1, 3}, {2, 3}, {3, 3}},
                {{1, 1}, {2, 1}, {3, 1}});
  require(spec.i3.test(1, 2) || spec.i3.test(2, 2) || spec.i3.test(3, 2),
          "third index set must contain one of (1,2), (2,2), (3,2)");
  require((spec.i1.test(1, 2) && spec.i1.test(1, 3)) ||
              (spec.i3.test(1, 2) &&
               (spec.i3.test(2, 2) || spec.i3.test(3, 2))),
          "either the first index set contains both (1,2) and (1,3), or the "
          "third contains (1,2) and one of (2,2), (3,2)");

  const std::vector<int> ids = tile_ids(spec.i1, spec.i2, spec.i3);
  const Subgraph host = schlafli_induced(ids);
  const int n = host.graph.size();

  GraphBuilder gb(n + 1);
  for (const auto& [u, v] : host.graph.edge_list()) gb.add_edge(u, v);
  for (int v = 0; v < n; ++v)
    if (!host.graph.label(v).empty()) gb.set_label(v, host.graph.label(v));
  gb.set_label(n, "z");
  gb.add_edge(position_of(ids, sid(Tile::R, 3, 2)), n);
  gb.add_edge(position_of(ids, sid(Tile::R, 3, 3)), n);
  gb.add_edge(position_of(ids, sid(Tile::S, 1, 1)), n);
  if (spec.i3.test(2, 2))
    gb.add_edge(position_of(ids, sid(Tile::T, 2, 2)), n);
  if (spec.i3.test(3, 2))
    gb.add_edge(position_of(ids, sid(Tile::T, 3, 2)), n);

  std::vector<int> construction = {position_of(ids, sid(Tile::R, 3, 2)),
                            position_of(ids, sid(Tile::R, 3, 3)),
                            position_of(ids, sid(Tile::S, 1, 1))};
  std::sort(construction.begin(), construction.end());
  return {std::move(gb).build(), construction, 3};
}

}  // namespace

Graph line_graph_k33() {
  GraphBuilder gb(9);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      gb.set_label(3 * (i - 1) + (j - 1),
                   "a" + std::to_string(i) + "b" + std::to_string(j));
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (u / 3 == v / 3 || u % 3 == v % 3) gb.add_edge(u, v);
  return std::move(gb).build();
}

Graph complement_line_graph_k33() {
  GraphBuilder gb(9);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      gb.set_label(3 * (i - 1) + (j - 1),
                   "s^" + std::to_string(i) + "_" + std::to_string(j));
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (u / 3 != v / 3 && u % 3 != v % 3) gb.add_edge(u, v);
  return std::move(gb).build();
}

FamilyInstance generate_instance(const FamilySpec& spec) {
  FamilyInstance inst = std::visit(
      [](const auto& s) -> FamilyInstance {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SigmaSpec>) return build_sigma();
        if constexpr (std::is_same_v<T, SchlafliInducedSpec>)
          return build_schlafli_induced(s);
        if constexpr (std::is_same_v<T, RotatorSpec>)
          return {rotator_graph(), std::nullopt, 0};
        if constexpr (std::is_same_v<T, TwisterSpec>)
          return {twister_graph(), std::nullopt, 0};
        if constexpr (std::is_same_v<T, PrismSpec>)
          return {prism_graph(), std::nullopt, 0};
        if constexpr (std::is_same_v<T, LineK33Spec>)
          return {line_graph_k33(), std::nullopt, 0};
        if constexpr (std::is_same_v<T, FuzzilySpec>) return build_fuzzily(s);
        if constexpr (std::is_same_v<T, ParallelSquareSpec>)
          return build_parallel_square(s);
        if constexpr (std::is_same_v<T, SkewSquareSpec>)
          return build_skew_square(s);
        if constexpr (std::is_same_v<T, F0Spec>) return build_f0(s);
        if constexpr (std::is_same_v<T, F1Spec>) return build_f1(s);
        if constexpr (std::is_same_v<T, F2Spec>) return build_f2(s);
        if constexpr (std::is_same_v<T, F3Spec>) return build_f3(s);
        if constexpr (std::is_same_v<T, F4Spec>) return build_f4(s);
        if constexpr (std::is_same_v<T, F5Spec>) return build_f5(s);
        if constexpr (std::is_same_v<T, F6Spec>) return build_f6(s);
        if constexpr (std::is_same_v<T, F7Spec>) return build_f7(s);
        if constexpr (std::is_same_v<T, F8Spec>) return build_f8(s);
        if constexpr (std::is_same_v<T, F9Spec>) return build_f9(s);
      },
      spec);
  if (const auto bad = find_non_prismatic(inst.graph))
    throw precondition_error("generated graph is not prismatic: " +
                             bad->describe());
  return inst;
}

Graph generate(const FamilySpec& spec) {
  return generate_instance(spec).graph;
}

std::vector<int> constructive_hitting_set(const FamilySpec& spec) {
  FamilyInstance inst = generate_instance(spec);
  if (!inst.constructive_hitting_set)
    throw precondition_error(
        "this family carries no constructive hitting set");
  return *inst.constructive_hitting_set;
}

std::vector<SchlafliInducedSpec> random_schlafli_specs(int count, int min_n,
                                                        int max_n,
                                                        std::uint64_t seed) {
  require(count >= 0, "instance count must be non-negative");
  require(1 <= min_n && min_n <= max_n && max_n <= 27,
          "size range must lie within 1..27");
  std::mt19937_64 rng(seed);
  const auto below = [&](int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
  };
  std::vector<SchlafliInducedSpec> specs;
  for (int k = 0; k < count; ++k) {
    const int size = min_n + below(max_n - min_n + 1);
    std::array<int, 27> ids;
    for (int v = 0; v < 27; ++v) ids[v] = v;
    for (int i = 26; i > 0; --i) std::swap(ids[i], ids[below(i + 1)]);
    std::vector<int> take(ids.begin(), ids.begin() + size);
    std::sort(take.begin(), take.end());
    specs.push_back({std::move(take)});
  }
  return specs;
}

}  // namespace prismatic
