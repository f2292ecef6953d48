#include "wordrep/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordrep {

Graph::Graph(int n, std::vector<Edge> edges)
    : Graph(n, std::move(edges), {}) {}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("graph: label list does not match vertex count");
    n_ = n;
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("graph: endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: duplicate edge");
    edges_ = std::move(edges);
    labels_ = std::move(labels);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::string Graph::label(int v) const {
    check_vertex(v);
    if (labels_.empty()) return std::to_string(v);
    return labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    return Graph(n_, edges_, std::move(labels));
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_ || edges_ != other.edges_) return false;
    for (int v = 0; v < n_; ++v)
        if (label(v) != other.label(v)) return false;
    return true;
}

}  // namespace wordrep
