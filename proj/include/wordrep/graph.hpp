#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wordrep {

// Unordered edge, stored normalized with first < second.
using Edge = std::pair<int, int>;

// Finite simple undirected graph on dense vertices 0..n-1. Display labels
// are a separate layer on top of the dense ids so drawings with their own
// numbering can be reproduced without affecting any algorithm. Graph values
// are immutable after construction and safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : Graph(n, {}) {}
    Graph(int n, std::vector<Edge> edges);
    Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges sorted by (u, v), u < v.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;  // sorted ascending

    bool has_labels() const { return !labels_.empty(); }
    // Explicit label, or the decimal vertex id when none was set.
    std::string label(int v) const;
    const std::vector<std::string>& raw_labels() const { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;

    // Structural equality: vertex count, edge set, and effective labels.
    bool operator==(const Graph& other) const;
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

}  // namespace wordrep
