#pragma once

#include <iosfwd>
#include <string>

#include "prismatic/graph.hpp"

namespace prismatic {

// Text format, line-oriented:
//   p <n> <m>              header, exactly once, first line
//   c label <v> <text>     optional vertex label (any number, after header)
//   e <u> <v>              edge with u < v, exactly m of them
// Every line including the last ends with '\n'.  Parsing is strict: wrong
// counts, out-of-range ids, duplicate or misordered edges, unknown line
// kinds, and a missing trailing newline all raise parse_error.
Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace prismatic
