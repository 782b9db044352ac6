#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prismatic/clique_cover.hpp"
#include "prismatic/errors.hpp"
#include "prismatic/families.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/graph_io.hpp"
#include "prismatic/hitting_set.hpp"
#include "prismatic/recognition.hpp"
#include "prismatic/schlafli.hpp"
#include "prismatic/triangle_packing.hpp"

namespace {

using namespace prismatic;

// `--param key=value` arguments collected per family.
using Params = std::map<std::string, std::string>;

Params parse_params(const std::vector<std::string>& raw) {
  Params out;
  for (const std::string& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw parse_error("parameter '" + kv + "' is not of the form key=value");
    const std::string key = kv.substr(0, eq);
    if (out.contains(key))
      throw parse_error("parameter '" + key + "' given twice");
    out[key] = kv.substr(eq + 1);
  }
  return out;
}

int parse_int(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw parse_error("");
    return value;
  } catch (const std::exception&) {
    throw parse_error("parameter '" + key + "' needs an integer, got '" +
                      text + "'");
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

std::vector<int> parse_int_list(const std::string& key,
                                const std::string& text) {
  std::vector<int> out;
  for (const std::string& part : split_commas(text))
    out.push_back(parse_int(key, part));
  return out;
}

// Cells are two digits, line then column, e.g. "12,33".
void parse_cells_into(IndexSet& set, const std::string& key,
                      const std::string& text) {
  for (const std::string& part : split_commas(text)) {
    if (part.size() != 2 || part[0] < '1' || part[0] > '3' || part[1] < '1' ||
        part[1] > '3')
      throw parse_error("parameter '" + key + "' needs cells like 12,33; '" +
                        part + "' is not a cell");
    set.set(part[0] - '0', part[1] - '0');
  }
}

std::vector<std::pair<int, int>> parse_digit_pairs(const std::string& key,
                                                   const std::string& text) {
  std::vector<std::pair<int, int>> out;
  for (const std::string& part : split_commas(text)) {
    if (part.size() != 2 || !isdigit(part[0]) || !isdigit(part[1]))
      throw parse_error("parameter '" + key +
                        "' needs digit pairs like 04,15; '" + part +
                        "' is not one");
    out.push_back({part[0] - '0', part[1] - '0'});
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "0" || text == "false") return false;
  if (text == "1" || text == "true") return true;
  throw parse_error("parameter '" + key + "' needs 0 or 1, got '" + text +
                    "'");
}

// Pop helpers so unknown keys can be reported after a family consumed its own.
class ParamReader {
 public:
  ParamReader(std::string family, Params params)
      : family_(std::move(family)), params_(std::move(params)) {}

  bool has(const std::string& key) { return params_.contains(key); }
  std::string take(const std::string& key) {
    const auto it = params_.find(key);
    const std::string value = it->second;
    params_.erase(it);
    return value;
  }
  int take_int(const std::string& key, int fallback) {
    return has(key) ? parse_int(key, take(key)) : fallback;
  }
  std::vector<int> take_int_list(const std::string& key,
                                 std::vector<int> fallback) {
    return has(key) ? parse_int_list(key, take(key)) : std::move(fallback);
  }
  bool take_bool(const std::string& key, bool fallback) {
    return has(key) ? parse_bool(key, take(key)) : fallback;
  }
  void take_cells(IndexSet& set, const std::string& key) {
    if (has(key)) parse_cells_into(set, key, take(key));
  }
  void finish() {
    if (!params_.empty())
      throw parse_error("unknown parameter '" + params_.begin()->first +
                        "' for family '" + family_ + "'");
  }

 private:
  std::string family_;
  Params params_;
};

ExpansionShape take_shape(ParamReader& r, const std::string& prefix) {
  ExpansionShape s;
  s.a_count = r.take_int(prefix + "-a", 1);
  s.b_count = r.take_int(prefix + "-b", 1);
  s.c_count = r.take_int(prefix + "-c", 0);
  if (s.a_count < 1 || s.b_count < 1 || s.c_count < 0)
    throw parse_error("expansion counts must be positive (" + prefix +
                      "-a/-b) and non-negative (" + prefix + "-c)");
  s.matching.clear();
  s.a_side.clear();
  for (int i = 0; i < std::min(s.a_count, s.b_count); ++i) {
    s.matching.push_back({i, i});
    s.a_side.push_back(true);
  }
  return s;
}

FamilySpec spec_from_cli(const std::string& family, Params params,
                         std::uint64_t seed) {
  ParamReader r(family, std::move(params));
  FamilySpec spec;
  if (family == "sigma") {
    spec = SigmaSpec{};
  } else if (family == "rotator") {
    spec = RotatorSpec{};
  } else if (family == "twister") {
    spec = TwisterSpec{};
  } else if (family == "prism") {
    spec = PrismSpec{};
  } else if (family == "line-k33") {
    spec = LineK33Spec{};
  } else if (family == "schlafli-induced") {
    if (r.has("ids") && r.has("size"))
      throw parse_error("give either ids or size, not both");
    if (r.has("size")) {
      const int size = parse_int("size", r.take("size"));
      if (size < 1 || size > 27)
        throw parse_error("parameter 'size' must lie within 1..27");
      spec = random_schlafli_specs(1, size, size, seed)[0];
    } else {
      SchlafliInducedSpec s;
      s.sigma_ids = r.take_int_list("ids", {0, 1, 2, 3, 4, 5, 6, 7, 8});
      spec = s;
    }
  } else if (family == "fuzzily") {
    FuzzilySpec s;
    s.phi_a = r.take_int_list("phi-a", {1});
    s.phi_b = r.take_int_list("phi-b", {1});
    spec = s;
  } else if (family == "parallel-square") {
    ParallelSquareSpec s;
    for (int c = 0; c < 4; ++c)
      s.phi[c] = r.take_int_list("phi" + std::to_string(c + 1), {1});
    s.delete_z = r.take_bool("delete-z", false);
    spec = s;
  } else if (family == "skew-square") {
    SkewSquareSpec s;
    s.phi[0] = r.take_int_list("phi-a", {1});
    s.phi[1] = r.take_int_list("phi-b", {1});
    s.phi[2] = r.take_int_list("phi-c", {1});
    spec = s;
  } else if (family == "f0") {
    F0Spec s;
    s.i1 = IndexSet::of({{1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 1}, {3, 2}});
    s.i2 = IndexSet::of({{1, 1}, {2, 1}, {3, 2}});
    s.i3 = IndexSet::of({{1, 3}, {2, 1}, {2, 2}});
    r.take_cells(s.i1, "i1");
    r.take_cells(s.i2, "i2");
    r.take_cells(s.i3, "i3");
    spec = s;
  } else if (family == "f1") {
    F1Spec s;
    s.r_count = r.take_int("r", 1);
    s.a_pairs = r.take_int("a-pairs", 1);
    s.a_singles = r.take_int("a-singles", 1);
    s.b_pairs = r.take_int("b-pairs", 1);
    s.b_singles = r.take_int("b-singles", 1);
    s.choice_bits = static_cast<std::uint64_t>(r.take_int("bits", 0));
    spec = s;
  } else if (family == "f2") {
    F2Spec s;
    s.phi[0] = r.take_int_list("phi12", {1});
    s.phi[1] = r.take_int_list("phi13", {2});
    s.phi[2] = r.take_int_list("phi21", {1});
    s.phi[3] = r.take_int_list("phi31", {3});
    s.expansion = take_shape(r, "exp");
    spec = s;
  } else if (family == "f3") {
    F3Spec s;
    s.delete_11 = r.take_bool("delete-11", false);
    s.phi[0] = r.take_int_list("phi12", {1});
    s.phi[1] = r.take_int_list("phi13", {2});
    s.phi[2] = r.take_int_list("phi21", {2});
    s.phi[3] = r.take_int_list("phi31", {1});
    s.expansion_first = take_shape(r, "exp1");
    s.expansion_second = take_shape(r, "exp2");
    spec = s;
  } else if (family == "f4") {
    F4Spec s;
    s.y = {false, false, false};
    for (int line : r.take_int_list("y", {1})) {
      if (line < 1 || line > 3)
        throw parse_error("parameter 'y' lists lines 1..3");
      s.y[line - 1] = true;
    }
    for (int l = 1; l <= 3; ++l)
      for (int c = 1; c <= 2; ++c) s.i.set(l, c);
    for (int line : r.take_int_list("col3", {1, 2, 3})) {
      if (line < 1 || line > 3)
        throw parse_error("parameter 'col3' lists lines 1..3");
      s.i.set(line, 3);
    }
    s.expansion = take_shape(r, "exp");
    spec = s;
  } else if (family == "f5") {
    F5Spec s;
    s.i1 = IndexSet::of({{1, 1}, {3, 1}, {3, 2}, {3, 3}});
    s.i3 = IndexSet::of({{1, 2}, {1, 3}, {2, 3}, {3, 3}});
    r.take_cells(s.i1, "i1");
    r.take_cells(s.i2, "i2");
    r.take_cells(s.i3, "i3");
    spec = s;
  } else if (family == "f6") {
    F6Spec s;
    s.phi_r = r.take_int_list("phi-r", {1});
    s.phi_t = r.take_int_list("phi-t", {1});
    spec = s;
  } else if (family == "f7") {
    F7Spec s;
    if (r.has("extra")) s.extra_edges = parse_digit_pairs("extra", r.take("extra"));
    if (r.has("vertices")) s.k_vertices = parse_int_list("vertices", r.take("vertices"));
    spec = s;
  } else if (family == "f8") {
    F8Spec s;
    const std::array<std::string, 6> keys = {"phi4", "phi7", "phi5",
                                             "phi8", "phi6", "phi9"};
    for (int c = 0; c < 6; ++c) s.phi[c] = r.take_int_list(keys[c], {1});
    spec = s;
  } else if (family == "f9") {
    F9Spec s;
    s.i1 = IndexSet::of({{1, 2}, {2, 1}, {3, 1}, {3, 2}, {3, 3}});
    s.i2 = IndexSet::of({{1, 1}, {2, 2}, {3, 3}});
    s.i3 = IndexSet::of({{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}});
    r.take_cells(s.i1, "i1");
    r.take_cells(s.i2, "i2");
    r.take_cells(s.i3, "i3");
    spec = s;
  } else {
    throw parse_error(
        "unknown family '" + family +
        "'; available: sigma schlafli-induced rotator twister prism "
        "line-k33 fuzzily parallel-square skew-square f0 f1 f2 f3 f4 f5 f6 "
        "f7 f8 f9");
  }
  r.finish();
  return spec;
}

int run_gen(const std::string& family, const std::vector<std::string>& raw,
            const std::string& out_path, std::uint64_t seed) {
  const FamilySpec spec = spec_from_cli(family, parse_params(raw), seed);
  write_graph_file(out_path, generate(spec));
  return 0;
}

void print_hitting_set(const std::vector<int>& vertices) {
  if (!vertices.empty()) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      std::cout << (i ? " " : "") << vertices[i];
    std::cout << "\n";
  }
  std::cout << "size " << vertices.size() << "\n";
}

int run_check(const Graph& g, bool prismatic, bool orientable, bool rigid,
              bool clawfree) {
  if (!prismatic && !orientable && !rigid && !clawfree) prismatic = true;
  bool all_yes = true;
  const auto report = [&](const std::string& name, bool yes,
                          const std::optional<Obstruction>& obstruction) {
    std::cout << name << ": " << (yes ? "yes" : "no") << "\n";
    if (obstruction) std::cout << obstruction->describe() << "\n";
    all_yes = all_yes && yes;
  };
  if (prismatic) {
    const auto o = find_non_prismatic(g);
    report("prismatic", !o, o);
  }
  if (orientable) {
    const auto o = find_parity_obstruction(g);
    report("orientable", !o, o);
  }
  if (rigid) report("rigid", is_rigid(g), std::nullopt);
  if (clawfree) {
    const auto o = find_claw(g);
    report("clawfree", !o, o);
  }
  return all_yes ? 0 : 1;
}

int run_hitting_set(const Graph& g, bool exact, int max_k) {
  if (exact) {
    print_hitting_set(min_hitting_set(g).vertices);
    return 0;
  }
  const auto found = find_hitting_set_at_most(g, max_k);
  if (!found) {
    std::cout << "none\n";
    return 0;
  }
  print_hitting_set(found->vertices);
  return 0;
}

int run_clique_cover(const Graph& g) {
  if (is_prismatic(g) && !is_orientable(g))
    std::cout << format_cover(clique_cover_nonorientable(g));
  else
    std::cout << format_cover(clique_cover_small_hitting(g));
  return 0;
}

int run_pack(const Graph& g) {
  std::cout << format_packing(max_triangle_packing_prismatic(g));
  return 0;
}

int run_stats(const Graph& g) {
  const auto tris = triangles(g);
  std::cout << "n=" << g.size() << " m=" << g.edge_count()
            << " triangles=" << tris.size() << " core=" << core(g).size()
            << "\n";
  const DerivedGraph d = derived_graph(g);
  int k33 = 0, clawfree = 0, other = 0, components = 0;
  std::vector<bool> seen(d.graph.size(), false);
  for (int v = 0; v < d.graph.size(); ++v) {
    if (seen[v]) continue;
    ++components;
    std::vector<int> queue = {v};
    std::vector<int> members;
    seen[v] = true;
    while (!queue.empty()) {
      const int u = queue.back();
      queue.pop_back();
      members.push_back(u);
      d.graph.row(u).for_each([&](int w) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      });
    }
    std::sort(members.begin(), members.end());
    const Graph component = induced_subgraph(d.graph, members).graph;
    if (component.size() == 6 &&
        is_isomorphic_small(component, complete_bipartite(3, 3)))
      ++k33;
    else if (is_clawfree(component))
      ++clawfree;
    else
      ++other;
  }
  std::cout << "derived: components=" << components << " k33=" << k33
            << " clawfree=" << clawfree << " other=" << other << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers and generators for triangle-structured graphs"};
  app.require_subcommand(1);

  std::string family, out_path, input_path;
  std::vector<std::string> raw_params;
  std::uint64_t seed = 0;
  bool flag_prismatic = false, flag_orientable = false, flag_rigid = false,
       flag_clawfree = false, flag_exact = false;
  int max_k = 5;

  CLI::App* gen = app.add_subcommand("gen", "Generate a family instance");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("--param", raw_params, "Family parameter key=value");
  gen->add_option("-o,--output", out_path, "Output graph file")->required();
  gen->add_option("--seed", seed, "Seed for randomized choices");

  CLI::App* check = app.add_subcommand("check", "Test structural properties");
  check->add_option("file", input_path, "Input graph file")->required();
  check->add_flag("--prismatic", flag_prismatic);
  check->add_flag("--orientable", flag_orientable);
  check->add_flag("--rigid", flag_rigid);
  check->add_flag("--clawfree", flag_clawfree);

  CLI::App* hs = app.add_subcommand("hitting-set", "Find a triangle hitting set");
  hs->add_option("file", input_path, "Input graph file")->required();
  CLI::Option* opt_max =
      hs->add_option("--max", max_k, "Bound for the bounded search");
  hs->add_flag("--exact", flag_exact, "Exact minimum instead of bounded")
      ->excludes(opt_max);

  CLI::App* cover = app.add_subcommand("clique-cover", "Minimum clique cover");
  cover->add_option("file", input_path, "Input graph file")->required();

  CLI::App* pack = app.add_subcommand("pack", "Maximum disjoint triangle packing");
  pack->add_option("file", input_path, "Input graph file")->required();

  CLI::App* stats = app.add_subcommand("stats", "Graph and derived-graph summary");
  stats->add_option("file", input_path, "Input graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return run_gen(family, raw_params, out_path, seed);
    const prismatic::Graph g = prismatic::read_graph_file(input_path);
    if (check->parsed())
      return run_check(g, flag_prismatic, flag_orientable, flag_rigid,
                       flag_clawfree);
    if (hs->parsed()) return run_hitting_set(g, flag_exact, max_k);
    if (cover->parsed()) return run_clique_cover(g);
    if (pack->parsed()) return run_pack(g);
    if (stats->parsed()) return run_stats(g);
  } catch (const prismatic::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const prismatic::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
