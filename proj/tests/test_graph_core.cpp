#include <sstream>
#include <vector>

#include "doctest.h"
#include "prismatic/errors.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/graph_io.hpp"

using namespace prismatic;

TEST_CASE("triangle canonical form") {
  const Triangle t(5, 1, 3);
  CHECK(t[0] == 1);
  CHECK(t[1] == 3);
  CHECK(t[2] == 5);
  CHECK(t.contains(3));
  CHECK(!t.contains(2));
  CHECK(t.disjoint(Triangle(0, 2, 4)));
  CHECK(!t.disjoint(Triangle(0, 2, 5)));
  CHECK(t.str() == "{1 3 5}");
  CHECK_THROWS_AS(Triangle(1, 1, 2), precondition_error);
}

TEST_CASE("builder validates edges") {
  GraphBuilder gb(3);
  gb.add_edge(0, 1);
  gb.add_edge(1, 0);  // duplicate, merged
  CHECK_THROWS_AS(gb.add_edge(1, 1), precondition_error);
  CHECK_THROWS_AS(gb.add_edge(0, 3), precondition_error);
  const Graph g = std::move(gb).build();
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(!g.adjacent(0, 2));
}

TEST_CASE("edge list is sorted with u < v") {
  const Graph g = build_graph(4, {{2, 3}, {0, 2}, {1, 0}});
  const std::vector<std::pair<int, int>> expect = {{0, 1}, {0, 2}, {2, 3}};
  CHECK(g.edge_list() == expect);
}

TEST_CASE("triangle enumeration") {
  CHECK(triangles(complete_graph(4)).size() == 4);
  CHECK(triangles(cycle_graph(5)).empty());
  CHECK(triangles(complete_bipartite(3, 3)).empty());

  const Graph prismlike = build_graph(
      6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4},
          {2, 5}});
  const std::vector<Triangle> ts = triangles(prismlike);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == Triangle(0, 1, 2));
  CHECK(ts[1] == Triangle(3, 4, 5));
}

TEST_CASE("core vertices") {
  const Graph g = build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(core(g) == std::vector<int>{0, 1, 2});
  CHECK(core_bitset(g).count() == 3);
  CHECK(core(cycle_graph(4)).empty());
}

TEST_CASE("induced subgraph keeps labels and relabels edges") {
  GraphBuilder gb(4);
  gb.add_edge(0, 1);
  gb.add_edge(1, 3);
  gb.set_label(1, "mid");
  gb.set_label(3, "end");
  const Graph g = std::move(gb).build();
  const Subgraph s = induced_subgraph(g, {1, 3});
  CHECK(s.graph.size() == 2);
  CHECK(s.graph.edge_count() == 1);
  CHECK(s.graph.adjacent(0, 1));
  CHECK(s.graph.label(0) == "mid");
  CHECK(s.graph.label(1) == "end");
  CHECK(s.vertices == std::vector<int>{1, 3});
  CHECK_THROWS_AS(induced_subgraph(g, {0, 4}), precondition_error);
}

TEST_CASE("derived graph of two sharing triangles") {
  // Two triangles glued on vertex 2 plus a disjoint one.
  const Graph g = build_graph(
      8, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {5, 6}, {5, 7},
          {6, 7}});
  const DerivedGraph d = derived_graph(g);
  REQUIRE(d.graph.size() == 3);
  CHECK(d.triangles[0] == Triangle(0, 1, 2));
  CHECK(d.triangles[1] == Triangle(2, 3, 4));
  CHECK(d.triangles[2] == Triangle(5, 6, 7));
  CHECK(d.graph.adjacent(0, 1));
  CHECK(!d.graph.adjacent(0, 2));
  CHECK(!d.graph.adjacent(1, 2));
}

TEST_CASE("small isomorphism test") {
  CHECK(is_isomorphic_small(cycle_graph(6), cycle_graph(6)));
  CHECK(!is_isomorphic_small(cycle_graph(6),
                             disjoint_union(complete_graph(3),
                                            complete_graph(3))));
  // C6 is isomorphic to K33 minus a perfect matching, not to K33 itself.
  CHECK(!is_isomorphic_small(cycle_graph(6), complete_bipartite(3, 3)));
  const Graph relabeled = build_graph(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(is_isomorphic_small(cycle_graph(4), relabeled));
  CHECK_THROWS_AS(is_isomorphic_small(empty_graph(13), empty_graph(13)),
                  precondition_error);
}

TEST_CASE("same adjacency ignores labels") {
  GraphBuilder ga(2);
  ga.add_edge(0, 1);
  ga.set_label(0, "x");
  GraphBuilder gb(2);
  gb.add_edge(0, 1);
  const Graph a = std::move(ga).build();
  const Graph b = std::move(gb).build();
  CHECK(same_adjacency(a, b));
  CHECK(!(a == b));
}

TEST_CASE("stock graphs") {
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(complete_bipartite(3, 3).edge_count() == 9);
  CHECK(empty_graph(4).edge_count() == 0);
  const Graph u = disjoint_union(complete_graph(3), cycle_graph(4));
  CHECK(u.size() == 7);
  CHECK(u.edge_count() == 7);
  CHECK(u.adjacent(0, 1));
  CHECK(u.adjacent(3, 4));
  CHECK(!u.adjacent(2, 3));
}

TEST_CASE("graph text round trip") {
  GraphBuilder gb(3);
  gb.add_edge(0, 2);
  gb.add_edge(1, 2);
  gb.set_label(0, "alpha");
  gb.set_label(2, "gamma three");
  const Graph g = std::move(gb).build();
  const std::string text = format_graph(g);
  CHECK(text ==
        "p 3 2\n"
        "c label 0 alpha\n"
        "c label 2 gamma three\n"
        "e 0 2\n"
        "e 1 2\n");
  CHECK(parse_graph(text) == g);

  std::ostringstream out;
  write_graph(out, g);
  CHECK(out.str() == text);
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_graph(""), parse_error);
  CHECK_THROWS_AS(parse_graph("p 2 1\ne 0 1"), parse_error);  // no newline
  CHECK_THROWS_AS(parse_graph("p 2 2\ne 0 1\n"), parse_error);  // count short
  CHECK_THROWS_AS(parse_graph("p 2 1\ne 1 0\n"), parse_error);  // u >= v
  CHECK_THROWS_AS(parse_graph("p 2 1\ne 0 2\n"), parse_error);  // range
  CHECK_THROWS_AS(parse_graph("p 3 2\ne 0 1\ne 0 1\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("p 3 2\ne 0 2\ne 0 1\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("x 1 2\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("p 2 1\nq 0 1\ne 0 1\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("p 2 0\nc label 5 far\n"), parse_error);
  CHECK(parse_graph("p 2 1\nc remark kept\ne 0 1\n").edge_count() == 1);
}

TEST_CASE("empty graph round trip") {
  const Graph g = empty_graph(0);
  CHECK(format_graph(g) == "p 0 0\n");
  CHECK(parse_graph("p 0 0\n") == g);
}
