#ifndef PLANRAM_GRAPH6_HPP
#define PLANRAM_GRAPH6_HPP

#include "planram/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace planram {

std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" prefix and trailing whitespace.
Graph from_graph6(std::string_view text);
// One graph per non-empty line.
std::vector<Graph> read_graph6_lines(std::istream& in);

} // namespace planram

#endif
