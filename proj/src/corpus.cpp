#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "prismatic/families.hpp"

namespace prismatic {

namespace {

std::vector<int> seq(int count, int start = 1, int step = 1) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) out.push_back(start + i * step);
  return out;
}

ExpansionShape wide_shape() {
  ExpansionShape s;
  s.a_count = 2;
  s.b_count = 2;
  s.matching = {{0, 0}, {1, 1}};
  s.a_side = {true, true};
  return s;
}

ExpansionShape attach_shape() {
  ExpansionShape s;
  s.c_count = 1;
  return s;
}

Graph six_vertex_host(const std::vector<std::pair<int, int>>& extras) {
  GraphBuilder gb(6);
  for (const auto& [u, v] : std::initializer_list<std::pair<int, int>>{
           {0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
           {0, 3}, {1, 4}, {2, 5}})
    gb.add_edge(u, v);
  for (const auto& [u, v] : extras) gb.add_edge(u, v);
  return std::move(gb).build();
}

}  // namespace

std::vector<CorpusEntry> generate_default_corpus() {
  std::vector<CorpusEntry> corpus;
  const auto add = [&](std::string name, FamilySpec spec) {
    FamilyInstance inst = generate_instance(spec);
    corpus.push_back({std::move(name), std::move(spec), std::move(inst)});
  };

  add("sigma", SigmaSpec{});
  add("rotator", RotatorSpec{});
  add("twister", TwisterSpec{});
  add("prism", PrismSpec{});
  add("line-k33", LineK33Spec{});

  add("schlafli-first-tile",
      SchlafliInducedSpec{{0, 1, 2, 3, 4, 5, 6, 7, 8}});
  add("schlafli-two-tiles",
      SchlafliInducedSpec{
          {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17}});
  add("schlafli-triangle", SchlafliInducedSpec{{0, 9, 18}});
  add("schlafli-mixed-12",
      SchlafliInducedSpec{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}});

  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      add("fuzzily-a" + std::to_string(i) + "-b" + std::to_string(j),
          FuzzilySpec{seq(i), seq(j)});
  for (const auto& [i, j] : std::initializer_list<std::pair<int, int>>{
           {1, 1}, {2, 2}, {3, 1}, {2, 3}})
    add("fuzzily-a" + std::to_string(i) + "-b" + std::to_string(j) + "-apart",
        FuzzilySpec{seq(i), seq(j, 4)});

  const std::vector<std::array<int, 4>> square_tuples = {
      {1, 1, 1, 1}, {2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 2},
      {2, 2, 1, 1}, {2, 1, 2, 1}, {2, 1, 1, 2}, {1, 2, 2, 1}, {1, 2, 1, 2},
      {1, 1, 2, 2}, {2, 2, 2, 1}, {2, 2, 2, 2}, {3, 1, 1, 1}};
  for (const auto& t : square_tuples)
    for (bool del : {false, true}) {
      ParallelSquareSpec spec;
      for (int c = 0; c < 4; ++c) spec.phi[c] = seq(t[c]);
      spec.delete_z = del;
      std::string name = "parallel-m";
      for (int c = 0; c < 4; ++c) name += std::to_string(t[c]);
      if (del) name += "-noz";
      add(std::move(name), spec);
    }

  const std::vector<std::array<int, 3>> skew_tuples = {
      {1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {2, 2, 1}, {2, 1, 2},
      {1, 2, 2}, {2, 2, 2}, {3, 1, 1}, {1, 3, 1}, {1, 1, 3}, {3, 2, 1},
      {2, 3, 2}, {4, 1, 1}};
  for (const auto& t : skew_tuples) {
    SkewSquareSpec spec;
    for (int c = 0; c < 3; ++c) spec.phi[c] = seq(t[c]);
    std::string name = "skew-m";
    for (int c = 0; c < 3; ++c) name += std::to_string(t[c]);
    add(std::move(name), spec);
  }

  for (int bits = 0; bits < 64; ++bits) {
    F0Spec spec;
    spec.i1 = IndexSet::of({{1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 1}, {3, 2}});
    spec.i2 = IndexSet::of({{1, 1}, {2, 1}, {3, 2}});
    spec.i3 = IndexSet::of({{1, 3}, {2, 1}, {2, 2}});
    if (bits & 1) spec.i1.set(1, 2);
    if (bits & 2) spec.i1.set(2, 1);
    if (bits & 4) spec.i2.set(3, 1);
    if (bits & 8) spec.i2.set(3, 3);
    if (bits & 16) spec.i3.set(2, 3);
    if (bits & 32) spec.i3.set(3, 3);
    add("f0-" + std::to_string(bits), spec);
  }

  const std::vector<std::array<int, 4>> f1_shapes = {
      {1, 1, 1, 1}, {2, 0, 2, 0}, {2, 1, 1, 2}, {0, 2, 2, 0},
      {1, 2, 2, 1}, {3, 0, 0, 3}, {2, 2, 2, 2}};
  for (int r = 0; r <= 1; ++r)
    for (std::size_t i = 0; i < f1_shapes.size(); ++i) {
      const auto& s = f1_shapes[i];
      for (std::uint64_t bits :
           {std::uint64_t{0}, std::uint64_t{0x2b}, std::uint64_t{0x15}}) {
        F1Spec spec;
        spec.r_count = r;
        spec.a_pairs = s[0];
        spec.a_singles = s[1];
        spec.b_pairs = s[2];
        spec.b_singles = s[3];
        spec.choice_bits = bits;
        add("f1-r" + std::to_string(r) + "-s" + std::to_string(i) + "-x" +
                std::to_string(bits),
            spec);
        if (s[0] * s[2] + s[0] * s[3] + s[2] * s[1] == 0) break;
      }
    }

  const std::vector<std::array<int, 4>> f2_tuples = {
      {1, 1, 1, 1}, {2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 2},
      {2, 2, 1, 1}, {2, 1, 2, 1}, {1, 2, 1, 2}, {2, 2, 2, 2}, {3, 1, 1, 1}};
  for (std::size_t i = 0; i < f2_tuples.size(); ++i) {
    const auto& t = f2_tuples[i];
    for (int wide = 0; wide <= 1; ++wide) {
      F2Spec spec;
      spec.phi[0] = seq(t[0]);
      spec.phi[1] = seq(t[1], 2, 2);
      spec.phi[2] = seq(t[2]);
      spec.phi[3] = seq(t[3], 3, 2);
      if (wide) spec.expansion = wide_shape();
      add("f2-m" + std::to_string(i) + (wide ? "-wide" : ""), spec);
    }
  }

  const std::vector<std::array<int, 4>> f3_tuples = {
      {1, 1, 1, 1}, {2, 1, 1, 1}, {1, 2, 1, 1},
      {1, 1, 2, 1}, {1, 1, 1, 2}, {2, 2, 2, 2}};
  for (std::size_t i = 0; i < f3_tuples.size(); ++i) {
    const auto& t = f3_tuples[i];
    for (int del = 0; del <= 1; ++del) {
      F3Spec spec;
      spec.delete_11 = del == 1;
      spec.phi[0] = t[0] == 1 ? seq(1) : std::vector<int>{1, 3};
      spec.phi[1] = t[1] == 1 ? seq(1, 2) : std::vector<int>{2, 3};
      spec.phi[2] = t[2] == 1 ? seq(1, 2) : std::vector<int>{2, 4};
      spec.phi[3] = t[3] == 1 ? seq(1) : std::vector<int>{1, 4};
      add("f3-m" + std::to_string(i) + (del ? "-del" : ""), spec);
    }
  }
  {
    F3Spec spec;
    spec.expansion_first = wide_shape();
    add("f3-wide1", spec);
    spec.expansion_first = ExpansionShape{};
    spec.expansion_second = wide_shape();
    add("f3-wide2", spec);
  }

  const std::vector<std::array<bool, 3>> f4_cols = {
      {true, true, false}, {true, false, true},
      {false, true, true}, {true, true, true}};
  for (int y = 1; y < 8; ++y)
    for (std::size_t c = 0; c < f4_cols.size(); ++c) {
      F4Spec spec;
      spec.y = {(y & 1) != 0, (y & 2) != 0, (y & 4) != 0};
      for (int l = 1; l <= 3; ++l)
        for (int col = 1; col <= 2; ++col) spec.i.set(l, col);
      for (int l = 1; l <= 3; ++l)
        if (f4_cols[c][l - 1]) spec.i.set(l, 3);
      if (y == 7 && c == 3) spec.expansion = wide_shape();
      if (y == 5 && c == 0) spec.expansion = attach_shape();
      add("f4-y" + std::to_string(y) + "-c" + std::to_string(c), spec);
    }

  const std::vector<std::vector<std::pair<int, int>>> f5_mid = {
      {},
      {{1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}},
      {{2, 2}},
      {{1, 2}, {2, 1}},
      {{1, 3}, {3, 1}, {2, 2}}};
  for (int a = 0; a < 8; ++a)
    for (std::size_t m = 0; m < f5_mid.size(); ++m) {
      F5Spec spec;
      spec.i1 = IndexSet::of({{1, 1}, {3, 1}, {3, 2}, {3, 3}});
      if (a & 1) spec.i1.set(1, 2);
      if (a & 2) spec.i1.set(1, 3);
      if (a & 4) spec.i1.set(2, 1);
      for (const auto& [l, c] : f5_mid[m]) spec.i2.set(l, c);
      spec.i3 = IndexSet::of({{1, 2}, {1, 3}, {2, 3}, {3, 3}});
      if ((a + static_cast<int>(m)) % 2 == 0) {
        spec.i3.set(1, 1);
        spec.i3.set(2, 2);
        spec.i3.set(3, 2);
      }
      add("f5-a" + std::to_string(a) + "-m" + std::to_string(m), spec);
    }

  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      add("f6-r" + std::to_string(i) + "-t" + std::to_string(j),
          F6Spec{seq(i), seq(j)});
  add("f6-r2-t2-apart", F6Spec{seq(2), seq(2, 4)});
  add("f6-r1-t3-apart", F6Spec{seq(1, 2), seq(3, 5)});

  {
    const std::vector<std::pair<int, int>> allowed = {
        {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}};
    std::vector<Graph> seen;
    std::vector<std::vector<std::pair<int, int>>> hosts;
    for (int bits = 0; bits < 64; ++bits) {
      std::vector<std::pair<int, int>> extras;
      for (int e = 0; e < 6; ++e)
        if (bits & (1 << e)) extras.push_back(allowed[e]);
      Graph k = six_vertex_host(extras);
      bool fresh = true;
      for (const Graph& old : seen)
        if (is_isomorphic_small(old, k)) {
          fresh = false;
          break;
        }
      if (!fresh) continue;
      seen.push_back(std::move(k));
      hosts.push_back(std::move(extras));
    }
    const std::vector<std::vector<int>> vertex_picks = {
        {}, {0, 1, 2, 3, 4, 5}, {0}, {1, 2, 4}};
    for (std::size_t h = 0; h < hosts.size(); ++h)
      for (std::size_t p = 0; p < vertex_picks.size(); ++p)
        add("f7-h" + std::to_string(h) + "-v" + std::to_string(p),
            F7Spec{hosts[h], vertex_picks[p]});
  }

  const std::vector<std::array<int, 6>> f8_tuples = {
      {1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1, 1}, {1, 2, 1, 1, 1, 1},
      {1, 1, 2, 1, 1, 1}, {1, 1, 1, 2, 1, 1}, {1, 1, 1, 1, 2, 1},
      {1, 1, 1, 1, 1, 2}, {2, 2, 1, 1, 1, 1}, {2, 1, 2, 1, 2, 1},
      {2, 2, 2, 2, 2, 2}};
  for (std::size_t i = 0; i < f8_tuples.size(); ++i) {
    F8Spec spec;
    for (int c = 0; c < 6; ++c) spec.phi[c] = seq(f8_tuples[i][c]);
    add("f8-m" + std::to_string(i), spec);
  }

  const std::vector<std::vector<std::pair<int, int>>> f9_mid = {
      {},
      {{2, 1}, {2, 3}, {3, 1}, {3, 2}},
      {{2, 1}},
      {{2, 3}, {3, 2}}};
  const std::vector<std::vector<std::pair<int, int>>> f9_third = {
      {{1, 2}}, {{1, 2}, {2, 2}}, {{2, 2}, {3, 2}}, {{1, 2}, {2, 2}, {3, 2}}};
  for (int a = 1; a <= 3; ++a)
    for (std::size_t m = 0; m < f9_mid.size(); ++m)
      for (std::size_t th = 0; th < f9_third.size(); ++th) {
        F9Spec spec;
        spec.i1 = IndexSet::of({{2, 1}, {3, 1}, {3, 2}, {3, 3}});
        if (a & 1) spec.i1.set(1, 2);
        if (a & 2) spec.i1.set(1, 3);
        spec.i2 = IndexSet::of({{1, 1}, {2, 2}, {3, 3}});
        for (const auto& [l, c] : f9_mid[m]) spec.i2.set(l, c);
        spec.i3 = IndexSet::of({{1, 3}, {2, 3}, {3, 3}});
        for (const auto& [l, c] : f9_third[th]) spec.i3.set(l, c);
        const bool joint =
            (spec.i1.test(1, 2) && spec.i1.test(1, 3)) ||
            (spec.i3.test(1, 2) &&
             (spec.i3.test(2, 2) || spec.i3.test(3, 2)));
        if (!joint) continue;
        add("f9-a" + std::to_string(a) + "-m" + std::to_string(m) + "-t" +
                std::to_string(th),
            spec);
      }

  return corpus;
}

}  // namespace prismatic
