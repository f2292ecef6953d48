#include "wordrep/line_graph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wordrep {

Graph line_graph(const Graph& g) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());

    // Edge index at each endpoint; two edges of a simple graph share at
    // most one endpoint, so each adjacent pair is generated exactly once.
    std::vector<std::vector<int>> incident(g.vertex_count());
    for (int i = 0; i < m; ++i) {
        incident[edges[i].first].push_back(i);
        incident[edges[i].second].push_back(i);
    }

    std::vector<Edge> line_edges;
    for (const auto& at : incident)
        for (size_t a = 0; a < at.size(); ++a)
            for (size_t b = a + 1; b < at.size(); ++b)
                line_edges.push_back({at[a], at[b]});

    std::vector<std::string> labels;
    labels.reserve(m);
    for (const auto& [u, v] : edges)
        labels.push_back("{" + g.label(u) + "," + g.label(v) + "}");

    return Graph(m, std::move(line_edges), std::move(labels));
}

Graph iterate_line_graph(const Graph& g, int k, int vertex_budget) {
    if (k < 0) throw std::invalid_argument("iterate_line_graph: need k >= 0");
    Graph current = g;
    for (int step = 0; step < k; ++step) {
        if (current.edge_count() > vertex_budget)
            throw ResourceLimitError(
                "iterate_line_graph: step " + std::to_string(step + 1) + " would produce " +
                std::to_string(current.edge_count()) + " vertices (budget " +
                std::to_string(vertex_budget) + ")");
        current = line_graph(current);
    }
    return current;
}

}  // namespace wordrep
