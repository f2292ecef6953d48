#pragma once

#include <iosfwd>
#include <string>

#include "wordrep/graph.hpp"

namespace wordrep {

// Edge-list text format, produced byte-for-byte:
//   p <n> <m>
//   c <vertex> <label>     (one per vertex, only when labels are set)
//   e <u> <v>              (0-indexed, u < v, sorted by (u, v))
// UTF-8 with LF line endings.
std::string write_edge_list(const Graph& g);
void write_edge_list(const Graph& g, std::ostream& out);

// Accepts c/e lines in any order after the p line; validates counts,
// ranges, and simplicity. Throws std::runtime_error on malformed input.
Graph parse_edge_list(const std::string& text);
Graph read_edge_list(std::istream& in);

}  // namespace wordrep
