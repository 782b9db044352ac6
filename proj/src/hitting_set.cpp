#include "prismatic/hitting_set.hpp"

#include <algorithm>

#include "prismatic/bitset.hpp"
#include "prismatic/errors.hpp"
#include "prismatic/recognition.hpp"

namespace prismatic {

namespace {

struct Instance {
  int n = 0;
  std::vector<Triangle> tris;
  std::vector<Bitset> tri_bits;

  explicit Instance(const Graph& g) : n(g.size()), tris(triangles(g)) {
    tri_bits.reserve(tris.size());
    for (const Triangle& t : tris) {
      Bitset b(n);
      b.set(t[0]);
      b.set(t[1]);
      b.set(t[2]);
      tri_bits.push_back(std::move(b));
    }
  }

  int first_uncovered(const Bitset& chosen) const {
    for (std::size_t i = 0; i < tris.size(); ++i)
      if (!chosen.intersects(tri_bits[i])) return static_cast<int>(i);
    return -1;
  }

  // Disjoint uncovered triangles need pairwise distinct new hitters.
  int disjoint_lower_bound(const Bitset& chosen) const {
    Bitset taken(n);
    int count = 0;
    for (std::size_t i = 0; i < tris.size(); ++i) {
      if (chosen.intersects(tri_bits[i])) continue;
      if (taken.intersects(tri_bits[i])) continue;
      taken |= tri_bits[i];
      ++count;
    }
    return count;
  }

  // Can the uncovered triangles be hit with <= budget vertices, all greater
  // than min_allowed?  Fills `chosen` with the completion on success.
  bool complete(Bitset& chosen, int budget, int min_allowed) const {
    const int first = first_uncovered(chosen);
    if (first < 0) return true;
    if (budget <= 0) return false;
    if (disjoint_lower_bound(chosen) > budget) return false;
    const Triangle& t = tris[first];
    for (int k = 0; k < 3; ++k) {
      if (t[k] <= min_allowed) continue;
      chosen.set(t[k]);
      if (complete(chosen, budget - 1, min_allowed)) return true;
      chosen.reset(t[k]);
    }
    return false;
  }

  // Does any uncovered triangle contain v?
  bool covers_something(const Bitset& chosen, int v) const {
    for (std::size_t i = 0; i < tris.size(); ++i)
      if (!chosen.intersects(tri_bits[i]) && tri_bits[i].test(v)) return true;
    return false;
  }

  int greedy_upper_bound() const {
    Bitset chosen(n);
    int size = 0;
    while (first_uncovered(chosen) >= 0) {
      int best = -1, best_count = -1;
      for (int v = 0; v < n; ++v) {
        if (chosen.test(v)) continue;
        int count = 0;
        for (std::size_t i = 0; i < tris.size(); ++i)
          if (!chosen.intersects(tri_bits[i]) && tri_bits[i].test(v)) ++count;
        if (count > best_count) {
          best_count = count;
          best = v;
        }
      }
      chosen.set(best);
      ++size;
    }
    return size;
  }
};

}  // namespace

bool is_hitting_set(const Graph& g, const std::vector<int>& vertices) {
  Bitset chosen(g.size());
  for (int v : vertices) {
    if (v < 0 || v >= g.size()) return false;
    chosen.set(v);
  }
  for (const Triangle& t : triangles(g))
    if (!chosen.test(t[0]) && !chosen.test(t[1]) && !chosen.test(t[2]))
      return false;
  return true;
}

std::optional<HittingSet> find_hitting_set_at_most(const Graph& g, int k) {
  if (auto bad = find_diamond_or_k4(g))
    throw precondition_error(
        "bounded hitting-set search needs a diamond- and K4-free input: " +
        bad->describe());
  if (k < 0) return std::nullopt;
  const Instance inst(g);
  Bitset chosen(g.size());
  if (!inst.complete(chosen, k, -1)) return std::nullopt;
  return HittingSet{chosen.to_vector(), false};
}

HittingSet min_hitting_set(const Graph& g) {
  const Instance inst(g);
  if (inst.tris.empty()) return HittingSet{{}, true};

  Bitset empty(g.size());
  const int lb = inst.disjoint_lower_bound(empty);
  const int ub = inst.greedy_upper_bound();
  int optimum = ub;
  for (int k = lb; k < ub; ++k) {
    Bitset chosen(g.size());
    if (inst.complete(chosen, k, -1)) {
      optimum = k;
      break;
    }
  }

  // Fix the answer position by position: each element must cover a triangle
  // the prefix misses (otherwise a smaller hitting set would exist), and the
  // suffix uses only larger vertices.
  HittingSet out;
  out.proven_minimum = true;
  Bitset prefix(g.size());
  int last = -1;
  for (int pos = 0; pos < optimum; ++pos) {
    for (int v = last + 1; v < g.size(); ++v) {
      if (!inst.covers_something(prefix, v)) continue;
      prefix.set(v);
      Bitset trial = prefix;
      if (inst.complete(trial, optimum - pos - 1, v)) {
        out.vertices.push_back(v);
        last = v;
        break;
      }
      prefix.reset(v);
    }
  }
  return out;
}

}  // namespace prismatic
