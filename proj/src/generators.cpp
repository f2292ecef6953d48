#include "wordrep/generators.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wordrep {

namespace {

std::vector<std::string> numbered_labels(int n, int first) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(first + i));
    return labels;
}

}  // namespace

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph clique(int n) {
    if (n < 1) throw std::invalid_argument("clique: need n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star: need at least one leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph(leaves + 1, std::move(edges));
}

Graph claw() { return star(3); }

Graph wheel(int n) {
    if (n < 3) throw std::invalid_argument("wheel: need n >= 3");
    std::vector<Edge> edges = cycle(n).edges();
    for (int i = 0; i < n; ++i) edges.push_back({i, n});
    return Graph(n + 1, std::move(edges));
}

Graph petersen() {
    std::vector<Edge> edges = {
        // outer 5-cycle as drawn
        {0, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 0},
        // inner pentagram
        {5, 8}, {5, 7}, {9, 6}, {9, 7}, {6, 8},
        // spokes
        {0, 5}, {4, 9}, {3, 8}, {2, 7}, {1, 6},
    };
    return Graph(10, std::move(edges));
}

Graph minimal_nonrep(int i) {
    if (i == 1) return wheel(5);
    if (i < 1 || i > 4) throw std::invalid_argument("minimal_nonrep: index must be 1..4");
    // Apex 0, outer triangle {1,2,3}, inner vertices {4,5,6}, spokes 1-4,
    // 2-5, 3-6; i selects how much of the inner triangle remains.
    std::vector<Edge> edges = {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 5}, {3, 6}};
    if (i == 2) {
        edges.push_back({4, 5});
        edges.push_back({5, 6});
        edges.push_back({4, 6});
    } else if (i == 3) {
        edges.push_back({4, 6});
    }
    for (int v = 1; v <= 6; ++v) edges.push_back({0, v});
    return Graph(7, std::move(edges));
}

Graph fig6_graph(int i) {
    switch (i) {
        case 1:  // fork: edges 2-3, 3-1, 3-4, 4-5 in the drawing's numbering
            return Graph(5, {{1, 2}, {2, 0}, {2, 3}, {3, 4}}, numbered_labels(5, 1));
        case 2:  // paw: triangle {1,2,3} plus pendant 3-4
            return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, numbered_labels(4, 1));
        case 3:  // diamond: 4-cycle 1-2-3-4 plus chord 1-3
            return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}, numbered_labels(4, 1));
        case 4:
            return wheel(4);
        default:
            throw std::invalid_argument("fig6_graph: index must be 1..4");
    }
}

}  // namespace wordrep
