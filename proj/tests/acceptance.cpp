// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only if all pass.
#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "prismatic/clique_cover.hpp"
#include "prismatic/errors.hpp"
#include "prismatic/expand.hpp"
#include "prismatic/families.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/graph_io.hpp"
#include "prismatic/hitting_set.hpp"
#include "prismatic/matching.hpp"
#include "prismatic/recognition.hpp"
#include "prismatic/schlafli.hpp"
#include "prismatic/triangle_packing.hpp"
#include "prismatic/witness.hpp"

using namespace prismatic;
namespace fs = std::filesystem;

namespace {

struct Gate {
  int failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

bool report(int index, const std::string& title, const Gate& gate,
            const std::string& suffix = "") {
  const bool ok = gate.failures == 0;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << index << ". " << title
            << suffix << "\n";
  for (const std::string& note : gate.notes)
    std::cout << "      - " << note << "\n";
  return ok;
}

// ---- shared state ----------------------------------------------------------

std::vector<CorpusEntry> corpus;
std::map<std::string, int> min_hitting_cache;

int cached_min_hitting(const CorpusEntry& e) {
  const auto it = min_hitting_cache.find(e.name);
  if (it != min_hitting_cache.end()) return it->second;
  const int size = static_cast<int>(min_hitting_set(e.instance.graph)
                                        .vertices.size());
  min_hitting_cache[e.name] = size;
  return size;
}

// ---- criteria --------------------------------------------------------------

bool criterion_sigma() {
  Gate gate;
  const auto start = std::chrono::steady_clock::now();
  const Graph sigma = schlafli_complement();
  gate.expect(sigma.size() == 27, "vertex count");
  gate.expect(sigma.edge_count() == 135, "edge count");
  for (int v = 0; v < sigma.size(); ++v)
    gate.expect(sigma.degree(v) == 10, "degree of " + std::to_string(v));

  const std::vector<Triangle> ts = triangles(sigma);
  gate.expect(ts.size() == 45, "triangle count");
  int internal = 0;
  std::map<std::pair<int, int>, int> edge_uses;
  std::vector<int> vertex_uses(27, 0);
  for (const Triangle& t : ts) {
    if (SchlafliVertex::from_id(t[0]).tile == SchlafliVertex::from_id(t[2]).tile)
      ++internal;
    for (int i = 0; i < 3; ++i) {
      ++vertex_uses[t[i]];
      for (int j = i + 1; j < 3; ++j) ++edge_uses[{t[i], t[j]}];
    }
  }
  gate.expect(internal == 18, "18 single-tile triangles");
  gate.expect(static_cast<int>(ts.size()) - internal == 27,
              "27 cross-tile triangles");
  gate.expect(edge_uses.size() == 135, "every edge in a triangle");
  for (const auto& [e, uses] : edge_uses)
    gate.expect(uses == 1, "edge in exactly one triangle");
  for (int v = 0; v < 27; ++v)
    gate.expect(vertex_uses[v] == 5, "vertex in exactly five triangles");

  const HittingSet h = min_hitting_set(sigma);
  min_hitting_cache["sigma"] = static_cast<int>(h.vertices.size());
  gate.expect(h.vertices.size() == 10, "minimum hitting set size 10");
  gate.expect(is_hitting_set(sigma, h.vertices), "hitting set validity");

  const double elapsed = seconds_since(start);
  gate.expect(elapsed < 60.0, "runtime under 60 s");
  std::ostringstream suffix;
  suffix.precision(1);
  suffix << std::fixed << " (" << elapsed << "s)";
  return report(1, "sigma invariants and exact minimum hitting set", gate,
                suffix.str());
}

bool criterion_corpus_prismatic() {
  Gate gate;
  gate.expect(corpus.size() >= 200,
              "corpus size " + std::to_string(corpus.size()) + " >= 200");
  std::set<std::string> families_seen;
  for (const CorpusEntry& e : corpus) {
    gate.expect(!find_non_prismatic(e.instance.graph).has_value(),
                e.name + " prismatic");
    families_seen.insert(e.name.substr(0, e.name.find('-')));
  }
  for (const std::string want :
       {"sigma", "rotator", "twister", "prism", "line", "schlafli", "fuzzily",
        "parallel", "skew", "f0", "f1", "f2", "f3", "f4", "f5", "f6", "f7",
        "f8", "f9"})
    gate.expect(families_seen.contains(want), std::string("family ") + want);
  return report(2, "generator sweep: " + std::to_string(corpus.size()) +
                       " instances, all prismatic",
                gate);
}

bool criterion_constructive_bounds() {
  Gate gate;
  int with_construction = 0;
  for (const CorpusEntry& e : corpus) {
    const int min_size = cached_min_hitting(e);
    gate.expect(min_size <= 10, e.name + " minimum within 10");
    if (!e.instance.constructive_hitting_set) continue;
    ++with_construction;
    const std::vector<int>& construction = *e.instance.constructive_hitting_set;
    gate.expect(is_hitting_set(e.instance.graph, construction),
                e.name + " constructive set hits all triangles");
    gate.expect(static_cast<int>(construction.size()) <= e.instance.constructive_bound,
                e.name + " constructive set within bound");
    gate.expect(min_size <= e.instance.constructive_bound,
                e.name + " minimum within the construction bound");
  }
  gate.expect(with_construction >= 150, "enough instances carry constructive sets");
  return report(3, "constructive hitting sets respect the per-family bounds",
                gate);
}

bool criterion_orientability() {
  Gate gate;
  int tested = 0;
  const auto check_one = [&](const std::string& name, const Graph& g) {
    const auto pattern = find_rotator_or_twister(g);
    if (pattern && pattern->kind == ObstructionKind::NotAttempted) {
      gate.expect(false, name + " exceeded the pattern-search cap");
      return;
    }
    gate.expect(is_orientable(g) == !pattern.has_value(),
                name + " consistency equals pattern absence");
    if (pattern)
      gate.expect(obstruction_valid(g, *pattern),
                  name + " pattern re-validates");
    ++tested;
  };
  for (const CorpusEntry& e : corpus) check_one(e.name, e.instance.graph);
  const auto randoms = random_schlafli_specs(100, 10, 27, 0);
  for (std::size_t i = 0; i < randoms.size(); ++i)
    check_one("random-" + std::to_string(i), generate(randoms[i]));
  gate.expect(tested >= 300, "tested " + std::to_string(tested) + " graphs");
  return report(4, "orientability equals rotator/twister absence on " +
                       std::to_string(tested) + " graphs",
                gate);
}

bool criterion_cover() {
  Gate gate;
  int compared = 0;
  for (const CorpusEntry& e : corpus) {
    const Graph& g = e.instance.graph;
    if (g.size() > 15) continue;
    const int best = clique_cover_bruteforce(g).size();
    if (find_hitting_set_at_most(g, 5).has_value()) {
      const CliqueCover c = clique_cover_small_hitting(g);
      gate.expect(cover_valid(g, c), e.name + " cover partitions validly");
      gate.expect(c.size() == best, e.name + " hitting-set cover optimal");
      ++compared;
    }
    if (!is_orientable(g)) {
      const CliqueCover c = clique_cover_nonorientable(g);
      gate.expect(cover_valid(g, c), e.name + " cover partitions validly");
      gate.expect(c.size() == best, e.name + " non-orientable cover optimal");
    }
  }
  gate.expect(compared >= 50, "compared " + std::to_string(compared));

  const Graph trap =
      build_graph(6, {{0, 1}, {1, 2}, {1, 4}, {2, 4}, {2, 3}, {4, 5}});
  gate.expect(clique_cover_bruteforce(trap).size() == 3,
              "trap-figure optimum is 3");
  gate.expect(clique_cover_small_hitting(trap).size() == 3,
              "trap-figure solved optimally");

  const Graph sigma = schlafli_complement();
  const CliqueCover sc = clique_cover_nonorientable(sigma);
  gate.expect(cover_valid(sigma, sc), "sigma cover valid");
  gate.expect(sc.size() == 9, "sigma cover size 9");
  return report(5, "clique covers match the exhaustive optimum (" +
                       std::to_string(compared) + " instances)",
                gate);
}

bool criterion_packing() {
  Gate gate;
  int compared = 0;
  for (const CorpusEntry& e : corpus) {
    const Graph& g = e.instance.graph;
    if (triangles(g).size() > 60) continue;
    const TrianglePacking fast = max_triangle_packing_prismatic(g);
    gate.expect(packing_valid(g, fast), e.name + " packing valid");
    gate.expect(fast.size() == max_triangle_packing_bruteforce(g).size(),
                e.name + " packing optimal");
    ++compared;
  }
  gate.expect(compared >= 200, "compared " + std::to_string(compared));

  const Graph line = line_graph_k33();
  gate.expect(is_isomorphic_small(derived_graph(line).graph,
                                  complete_bipartite(3, 3)),
              "triangle-intersection graph of the line graph is a K33");
  gate.expect(max_triangle_packing_prismatic(line).size() == 3,
              "line-graph packing is 3");
  gate.expect(
      max_triangle_packing_prismatic(schlafli_complement()).size() == 9,
      "sigma packing is 9");
  return report(6, "triangle packings match the exhaustive optimum (" +
                       std::to_string(compared) + " instances)",
                gate);
}

int exhaustive_matching(const Graph& g, unsigned mask) {
  if (mask == 0) return 0;
  const int v = __builtin_ctz(mask);
  const unsigned rest = mask & (mask - 1);
  int best = exhaustive_matching(g, rest);
  for (int u = v + 1; u < g.size(); ++u)
    if (((rest >> u) & 1u) && g.adjacent(v, u))
      best = std::max(best, 1 + exhaustive_matching(g, rest & ~(1u << u)));
  return best;
}

bool criterion_matching() {
  Gate gate;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 500; ++round) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const int denom = 1 + static_cast<int>(rng() % 9);
    GraphBuilder gb(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (static_cast<int>(rng() % 10) < denom) gb.add_edge(u, v);
    const Graph g = std::move(gb).build();
    const Matching m = max_matching(g);
    gate.expect(is_valid_matching(g, m),
                "round " + std::to_string(round) + " validity");
    gate.expect(m.size() == exhaustive_matching(g, (1u << n) - 1u),
                "round " + std::to_string(round) + " optimality");
    gate.expect(!has_augmenting_path(g, m.mate),
                "round " + std::to_string(round) + " maximality certificate");
  }
  const double elapsed = seconds_since(start);
  gate.expect(elapsed < 30.0, "runtime under 30 s");
  std::ostringstream suffix;
  suffix.precision(1);
  suffix << std::fixed << " (" << elapsed << "s)";
  return report(7, "500 random matchings equal the exhaustive optimum", gate,
                suffix.str());
}

bool criterion_normalization() {
  Gate gate;
  int normalized = 0;
  for (const CorpusEntry& e : corpus) {
    const Graph& g = e.instance.graph;
    if (g.size() > 15) continue;
    const CliqueCover c = clique_cover_bruteforce(g);
    const CliqueCover n = normalize_cover(g, c);
    gate.expect(cover_valid(g, n), e.name + " normalized cover valid");
    gate.expect(n.size() == c.size(), e.name + " size preserved");
    gate.expect(n.triangles.empty() || n.singletons.empty(),
                e.name + " no triangle/singleton mix");
    ++normalized;
  }
  gate.expect(normalized >= 80, "normalized " + std::to_string(normalized));
  return report(8, "cover normalization preserves size and removes mixes (" +
                       std::to_string(normalized) + " covers)",
                gate);
}

bool criterion_hitting_decision() {
  Gate gate;
  int tested = 0;
  for (const CorpusEntry& e : corpus) {
    const Graph& g = e.instance.graph;
    if (triangles(g).size() > 60) continue;
    const int min_size = cached_min_hitting(e);
    const auto bounded = find_hitting_set_at_most(g, 5);
    gate.expect(bounded.has_value() == (min_size <= 5),
                e.name + " bounded decision agrees with the minimum");
    if (bounded)
      gate.expect(is_hitting_set(g, bounded->vertices),
                  e.name + " bounded result hits all triangles");

    // Witness-table emptiness equals direct triangle enumeration.
    const WitnessMatrix w = witness_matrix(g);
    const auto agree = [&](const std::vector<int>& removed) {
      Bitset bits(g.size());
      std::vector<int> survivors;
      for (int v : removed) bits.set(v);
      for (int v = 0; v < g.size(); ++v)
        if (!bits.test(v)) survivors.push_back(v);
      const bool direct =
          triangles(induced_subgraph(g, survivors).graph).empty();
      gate.expect(w.triangle_free_without(bits) == direct,
                  e.name + " witness emptiness agrees");
    };
    agree(min_hitting_set(g).vertices);
    agree({});
    agree({0});
    ++tested;
  }
  gate.expect(tested >= 200, "tested " + std::to_string(tested));
  return report(9, "bounded hitting-set decisions agree with the oracle (" +
                       std::to_string(tested) + " instances)",
                gate);
}

// ---- CLI -------------------------------------------------------------------

struct CliResult {
  int exit_code;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CliResult run_cli(const fs::path& dir, const std::string& args) {
  const fs::path out = dir / "stdout.txt";
  const std::string cmd = std::string(PRISMATIC_CLI_PATH) + " " + args +
                          " > " + out.string() + " 2> " +
                          (dir / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out)};
}

bool criterion_cli() {
  Gate gate;
  const fs::path dir = fs::path("acceptance_tmp");
  fs::create_directories(dir);

  // Generation round-trips and byte determinism for every family.
  const std::vector<std::pair<std::string, FamilySpec>> cases = {
      {"sigma", SigmaSpec{}},
      {"rotator", RotatorSpec{}},
      {"twister", TwisterSpec{}},
      {"prism", PrismSpec{}},
      {"line-k33", LineK33Spec{}},
      {"schlafli-induced",
       SchlafliInducedSpec{{0, 1, 2, 3, 4, 5, 6, 7, 8}}},
      {"fuzzily", FuzzilySpec{}},
      {"parallel-square", ParallelSquareSpec{}},
      {"skew-square", SkewSquareSpec{}},
      {"f1", F1Spec{}},
      {"f2", F2Spec{}},
      {"f3", F3Spec{}},
      {"f6", F6Spec{}},
      {"f7", F7Spec{}},
      {"f8", F8Spec{}},
  };
  for (const auto& [family, spec] : cases) {
    const fs::path file = dir / (family + ".g");
    const fs::path file2 = dir / (family + "-again.g");
    const CliResult r1 =
        run_cli(dir, "gen " + family + " -o " + file.string());
    const CliResult r2 =
        run_cli(dir, "gen " + family + " -o " + file2.string());
    gate.expect(r1.exit_code == 0 && r2.exit_code == 0, family + " generates");
    if (r1.exit_code != 0) continue;
    gate.expect(slurp(file) == slurp(file2), family + " bytes reproducible");
    gate.expect(read_graph_file(file.string()) == generate(spec),
                family + " file round-trips the in-process graph");
  }
  // Families whose command-line defaults add the free index cells.
  for (const std::string family : {"f0", "f4", "f5", "f9"}) {
    const fs::path file = dir / (family + ".g");
    const CliResult r = run_cli(dir, "gen " + family + " -o " + file.string());
    gate.expect(r.exit_code == 0, family + " generates");
    if (r.exit_code == 0)
      gate.expect(!find_non_prismatic(read_graph_file(file.string())),
                  family + " output prismatic");
  }

  const std::string sigma_file = (dir / "sigma.g").string();
  const CliResult stats = run_cli(dir, "stats " + sigma_file);
  gate.expect(stats.exit_code == 0, "stats exit code");
  gate.expect(stats.out.rfind("n=27 m=135 triangles=45 core=27\n", 0) == 0,
              "stats first line");
  gate.expect(run_cli(dir, "stats " + sigma_file).out == stats.out,
              "stats deterministic");

  const CliResult check_yes = run_cli(dir, "check " + sigma_file + " --prismatic");
  gate.expect(check_yes.exit_code == 0 && check_yes.out == "prismatic: yes\n",
              "check --prismatic yes");
  const CliResult check_no = run_cli(dir, "check " + sigma_file + " --orientable");
  gate.expect(check_no.exit_code == 1, "check --orientable exits 1");
  gate.expect(check_no.out.rfind("orientable: no\n", 0) == 0,
              "check --orientable says no with an obstruction");
  gate.expect(run_cli(dir, "check " + sigma_file + " --orientable").out ==
                  check_no.out,
              "check deterministic");

  const CliResult hs_none = run_cli(dir, "hitting-set " + sigma_file);
  gate.expect(hs_none.exit_code == 0 && hs_none.out == "none\n",
              "bounded hitting-set answers none on sigma");
  const CliResult hs_exact =
      run_cli(dir, "hitting-set " + sigma_file + " --exact");
  gate.expect(hs_exact.exit_code == 0, "exact hitting-set exit code");
  gate.expect(hs_exact.out.find("size 10\n") != std::string::npos,
              "exact hitting-set size 10");

  const CliResult cover = run_cli(dir, "clique-cover " + sigma_file);
  gate.expect(cover.exit_code == 0, "clique-cover exit code");
  gate.expect(cover.out.find("size 9\n") != std::string::npos,
              "clique-cover size 9");
  gate.expect(run_cli(dir, "clique-cover " + sigma_file).out == cover.out,
              "clique-cover deterministic");

  const CliResult pack = run_cli(dir, "pack " + (dir / "prism.g").string());
  gate.expect(pack.exit_code == 0 && pack.out == "t 0 1 2\nt 3 4 5\nsize 2\n",
              "pack output on the prism");

  write_graph_file((dir / "k4.g").string(), complete_graph(4));
  gate.expect(run_cli(dir, "pack " + (dir / "k4.g").string()).exit_code == 3,
              "pack rejects non-prismatic input with exit 3");

  std::ofstream(dir / "broken.g") << "p 2 1\ne 1 0\n";
  gate.expect(run_cli(dir, "stats " + (dir / "broken.g").string()).exit_code ==
                  2,
              "malformed file exits 2");
  gate.expect(run_cli(dir, "gen unknown-family -o " +
                               (dir / "x.g").string())
                      .exit_code == 2,
              "unknown family exits 2");
  gate.expect(run_cli(dir, "gen f0 --param bogus=1 -o " +
                               (dir / "x.g").string())
                      .exit_code == 2,
              "unknown parameter exits 2");
  gate.expect(run_cli(dir, "gen f4 --param col3=1 -o " +
                               (dir / "x.g").string())
                      .exit_code == 3,
              "invalid family condition exits 3");
  gate.expect(run_cli(dir, "gen f0 --param i1=12 -o " +
                               (dir / "f0b.g").string())
                      .exit_code == 0,
              "family parameters accepted");

  return report(10, "command-line round-trips are exact and deterministic",
                gate);
}

}  // namespace

int main() {
  corpus = generate_default_corpus();

  int failed = 0;
  failed += !criterion_sigma();
  failed += !criterion_corpus_prismatic();
  failed += !criterion_constructive_bounds();
  failed += !criterion_orientability();
  failed += !criterion_cover();
  failed += !criterion_packing();
  failed += !criterion_matching();
  failed += !criterion_normalization();
  failed += !criterion_hitting_decision();
  failed += !criterion_cli();

  if (failed == 0)
    std::cout << "all 10 acceptance criteria hold\n";
  else
    std::cout << failed << " acceptance criteria failed\n";
  return failed == 0 ? 0 : 1;
}
