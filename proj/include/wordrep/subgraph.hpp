#pragma once

#include <optional>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/search.hpp"

namespace wordrep {

// Injective map from pattern vertices to host vertices; to_host[p] is the
// host image of pattern vertex p.
struct LabelMap {
    std::vector<int> to_host;
};

struct EmbedResult {
    SearchStatus status = SearchStatus::unknown;
    std::optional<LabelMap> witness;
    SearchStats stats;
};

// Graph on vs (relabeled 0..|vs|-1 in the given order) with exactly the
// edges of g inside vs; labels carried over.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

// Exhaustive backtracking with degree pruning; a decision procedure at
// desk scale. Pattern vertices are matched in descending-degree order
// (ties by index) and host candidates in ascending order, so the witness
// is the first in that canonical branch order.
EmbedResult contains_induced(const Graph& host, const Graph& pattern,
                             std::uint64_t budget = kDefaultEmbedBudget);

// Bijective adjacency-preserving map or absent; degree-sequence screening
// then the same canonical backtracking.
EmbedResult is_isomorphic(const Graph& a, const Graph& b,
                          std::uint64_t budget = kDefaultEmbedBudget);

// Witnesses are self-verifying; these re-check them edge by edge.
bool verify_induced_embedding(const Graph& host, const Graph& pattern,
                              const LabelMap& map);
bool verify_isomorphism(const Graph& a, const Graph& b, const LabelMap& map);

}  // namespace wordrep
