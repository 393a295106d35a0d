#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "zfx/graph.hpp"

namespace zfx {

// graph6 encoding (one graph per line). Leading ">>graph6<<" and trailing whitespace are accepted.
// Throws ParseError with the offending byte offset, or CapacityError for n > 64.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Reads every non-blank line of a stream. Errors carry the 1-based line number in their message.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace zfx
