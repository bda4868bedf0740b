#pragma once

#include "countlab/coloured_graph.hpp"
#include "countlab/graph.hpp"

#include <iosfwd>
#include <string>

namespace countlab {

// Line-oriented text format:
//   # comment
//   p <n> <m>
//   e <u> <v>        0-based, u < v
//   c <vertex> <colour>
// A coloured-graph file holds two p-sections introduced by `%pattern` and
// `%host` markers; colour lines live in the host section.

Graph parse_graph(std::istream& in);
ColouredGraph parse_coloured_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
ColouredGraph read_coloured_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_coloured_graph(std::ostream& out, const ColouredGraph& cg);

std::string to_dot(const Graph& g);

} // namespace countlab
