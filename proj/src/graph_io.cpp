#include "prismatic/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "prismatic/errors.hpp"

namespace prismatic {

namespace {

// Splits strict line-oriented input; requires the final line to end in '\n'.
std::vector<std::string> split_lines(const std::string& text) {
  if (text.empty()) throw parse_error("empty input");
  if (text.back() != '\n') throw parse_error("missing trailing newline");
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return lines;
}

int parse_int(const std::string& token, const std::string& what) {
  if (token.empty()) throw parse_error("missing " + what);
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    throw parse_error("bad " + what + ": '" + token + "'");
  }
  if (pos != token.size())
    throw parse_error("bad " + what + ": '" + token + "'");
  return value;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw parse_error("empty input");

  const std::vector<std::string> header = tokens_of(lines[0]);
  if (header.size() != 3 || header[0] != "p")
    throw parse_error("first line must be 'p <n> <m>'");
  const int n = parse_int(header[1], "vertex count");
  const int m = parse_int(header[2], "edge count");
  if (n < 0) throw parse_error("vertex count must be non-negative");
  if (m < 0) throw parse_error("edge count must be non-negative");

  GraphBuilder b(n);
  int edges_seen = 0;
  std::pair<int, int> prev{-1, -1};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty()) throw parse_error("blank line " + std::to_string(i + 1));
    if (line[0] == 'c') {
      // Comment line.  'c label <v> <text>' restores a vertex label; any
      // other comment is ignored.
      std::istringstream in(line);
      std::string c, kind;
      in >> c >> kind;
      if (kind == "label") {
        std::string vtok;
        if (!(in >> vtok))
          throw parse_error("label line " + std::to_string(i + 1) +
                            ": missing vertex");
        const int v = parse_int(vtok, "label vertex");
        if (v < 0 || v >= n)
          throw parse_error("label line " + std::to_string(i + 1) +
                            ": vertex out of range");
        std::string text_part;
        std::getline(in, text_part);
        if (!text_part.empty() && text_part.front() == ' ')
          text_part.erase(text_part.begin());
        b.set_label(v, text_part);
      }
      continue;
    }
    if (line[0] == 'e') {
      const std::vector<std::string> et = tokens_of(line);
      if (et.size() != 3 || et[0] != "e")
        throw parse_error("line " + std::to_string(i + 1) +
                          ": edge lines are 'e <u> <v>'");
      const int u = parse_int(et[1], "edge endpoint");
      const int v = parse_int(et[2], "edge endpoint");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw parse_error("line " + std::to_string(i + 1) +
                          ": edge endpoint out of range");
      if (u >= v)
        throw parse_error("line " + std::to_string(i + 1) +
                          ": edges need u < v");
      if (std::pair{u, v} <= prev)
        throw parse_error("line " + std::to_string(i + 1) +
                          ": edges must be sorted without duplicates");
      prev = {u, v};
      b.add_edge(u, v);
      ++edges_seen;
      continue;
    }
    throw parse_error("line " + std::to_string(i + 1) + ": unknown line kind '" +
                      std::string(1, line[0]) + "'");
  }
  if (edges_seen != m)
    throw parse_error("header announces " + std::to_string(m) +
                      " edges but " + std::to_string(edges_seen) +
                      " are present");
  return std::move(b).build();
}

Graph read_graph(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.size() << " " << g.edge_count() << "\n";
  for (int v = 0; v < g.size(); ++v)
    if (!g.label(v).empty()) out << "c label " << v << " " << g.label(v) << "\n";
  for (auto [u, v] : g.edge_list()) out << "e " << u << " " << v << "\n";
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_graph(out, g);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace prismatic
