#pragma once

#include "wordrep/graph.hpp"

namespace wordrep {

// Cycle on n >= 3 vertices in consecutive order; edge (0, n-1) closes it.
Graph cycle(int n);

// Path on n >= 1 vertices 0-1-...-(n-1).
Graph path(int n);

// Complete graph on n >= 1 vertices.
Graph clique(int n);

// One center (vertex 0) adjacent to `leaves` >= 1 leaves.
Graph star(int leaves);

// The claw K_{1,3}.
Graph claw();

// Cycle on n >= 3 vertices plus a hub (vertex n) adjacent to all of them.
Graph wheel(int n);

// The Petersen graph with the usual drawing's vertex numbering:
// outer 5-cycle 0-4-3-2-1, inner pentagram on 5..9, spokes i-(i+5).
Graph petersen();

// The four classical minimal non-representable graphs, i in 1..4.
// 1: wheel(5).  2: triangular prism plus an apex adjacent to all six.
// 3: as 2 with the inner triangle replaced by the single edge 4-6.
// 4: as 2 with no inner edges.
Graph minimal_nonrep(int i);

// The four graphs of the line-graph iteration chain, i in 1..4:
// fork, paw, diamond, wheel(4). Each maps to the next under the line
// graph. Labels carry the drawings' 1-based numbering.
Graph fig6_graph(int i);

}  // namespace wordrep
