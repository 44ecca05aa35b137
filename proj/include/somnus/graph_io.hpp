#pragma once

#include <iosfwd>
#include <string>

#include "somnus/graph.hpp"

namespace somnus {

// Plain-text graph format: line 1 "n m", then m sorted lines "u v".
// Vertices are 1..n; the writer requires exactly that id range.
void write_graph(const Graph& g, std::ostream& out);
Graph read_graph(std::istream& in);

void write_graph_file(const Graph& g, const std::string& path);
Graph read_graph_file(const std::string& path);

}  // namespace somnus
