#pragma once

#include "wordrep/graph.hpp"
#include "wordrep/search.hpp"

namespace wordrep {

// One vertex per edge of g (in g's sorted edge order), labeled by the
// endpoint pair it came from; two vertices adjacent iff the underlying
// edges share an endpoint.
Graph line_graph(const Graph& g);

// Applies the line graph k times; k = 0 returns g unchanged. Iterated
// line graphs grow without bound on most inputs, so an intermediate
// result with more vertices than `vertex_budget` raises
// ResourceLimitError rather than ever returning a wrong answer.
Graph iterate_line_graph(const Graph& g, int k,
                         int vertex_budget = kDefaultVertexBudget);

}  // namespace wordrep
