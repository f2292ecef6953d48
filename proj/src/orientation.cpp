#include "wordrep/orientation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace wordrep {

Orientation::Orientation(Graph base_, std::vector<bool> reversed_)
    : base(std::move(base_)), reversed(std::move(reversed_)) {
    if (reversed.size() != base.edges().size())
        throw std::invalid_argument("orientation: direction list does not match edge list");
}

Orientation Orientation::from_directed(Graph base,
                                       const std::vector<std::pair<int, int>>& directed) {
    std::map<Edge, int> index;
    const auto& edges = base.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) index[edges[i]] = i;
    std::vector<bool> reversed(edges.size(), false);
    std::vector<char> seen(edges.size(), 0);
    for (auto [a, b] : directed) {
        Edge e = a < b ? Edge{a, b} : Edge{b, a};
        auto it = index.find(e);
        if (it == index.end())
            throw std::invalid_argument("orientation: directed pair is not a base edge");
        if (seen[it->second])
            throw std::invalid_argument("orientation: edge directed twice");
        seen[it->second] = 1;
        reversed[it->second] = a > b;
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("orientation: edge left undirected");
    return Orientation(std::move(base), std::move(reversed));
}

std::pair<int, int> Orientation::directed_edge(int i) const {
    auto [u, v] = base.edges()[i];
    return reversed[i] ? std::pair<int, int>{v, u} : std::pair<int, int>{u, v};
}

std::vector<std::pair<int, int>> Orientation::directed_edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(reversed.size());
    for (int i = 0; i < static_cast<int>(reversed.size()); ++i)
        out.push_back(directed_edge(i));
    return out;
}

namespace {

struct Digraph {
    int n;
    int stride;
    std::vector<std::uint64_t> out;  // successor bitset rows

    explicit Digraph(const Orientation& o)
        : n(o.base.vertex_count()), stride((n + 63) / 64), out(size_t(n) * stride, 0) {
        for (int i = 0; i < static_cast<int>(o.reversed.size()); ++i) {
            auto [a, b] = o.directed_edge(i);
            out[size_t(a) * stride + b / 64] |= std::uint64_t(1) << (b % 64);
        }
    }

    bool topo_order(std::vector<int>& order) const {
        std::vector<int> indeg(n, 0);
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < stride; ++j) {
                std::uint64_t bits = out[size_t(v) * stride + j];
                while (bits) {
                    indeg[j * 64 + __builtin_ctzll(bits)] += 1;
                    bits &= bits - 1;
                }
            }
        order.clear();
        std::vector<int> queue;
        for (int v = 0; v < n; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            order.push_back(v);
            for (int j = 0; j < stride; ++j) {
                std::uint64_t bits = out[size_t(v) * stride + j];
                while (bits) {
                    int w = j * 64 + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    if (--indeg[w] == 0) queue.push_back(w);
                }
            }
        }
        return static_cast<int>(order.size()) == n;
    }
};

}  // namespace

bool is_acyclic(const Orientation& o) {
    Digraph d(o);
    std::vector<int> order;
    return d.topo_order(order);
}

bool is_semi_transitive(const Orientation& o) {
    Digraph d(o);
    std::vector<int> order;
    if (!d.topo_order(order)) return false;

    const int n = d.n, stride = d.stride;

    // Strict reachability, forward and backward, in reverse topo order.
    std::vector<std::uint64_t> reach(size_t(n) * stride, 0);
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        for (int j = 0; j < stride; ++j) {
            std::uint64_t bits = d.out[size_t(v) * stride + j];
            reach[size_t(v) * stride + j] |= bits;
            while (bits) {
                int w = j * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                for (int jj = 0; jj < stride; ++jj)
                    reach[size_t(v) * stride + jj] |= reach[size_t(w) * stride + jj];
            }
        }
    }
    std::vector<std::uint64_t> reach_to(size_t(n) * stride, 0);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < stride; ++j) {
            std::uint64_t bits = reach[size_t(v) * stride + j];
            while (bits) {
                int w = j * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                reach_to[size_t(w) * stride + v / 64] |= std::uint64_t(1) << (v % 64);
            }
        }

    std::vector<std::uint64_t> nonadj(size_t(n) * stride, 0);
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w)
            if (w != v && !o.base.has_edge(v, w))
                nonadj[size_t(v) * stride + w / 64] |= std::uint64_t(1) << (w % 64);
    }

    std::vector<std::uint64_t> between(stride);
    for (int i = 0; i < static_cast<int>(o.reversed.size()); ++i) {
        auto [u, v] = o.directed_edge(i);
        for (int j = 0; j < stride; ++j)
            between[j] = (reach[size_t(u) * stride + j] | (std::uint64_t(j == u / 64) << (u % 64))) &
                         (reach_to[size_t(v) * stride + j] | (std::uint64_t(j == v / 64) << (v % 64)));
        for (int j = 0; j < stride; ++j) {
            std::uint64_t bits = between[j];
            while (bits) {
                int x = j * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                for (int jj = 0; jj < stride; ++jj) {
                    std::uint64_t reach_to_v =
                        reach_to[size_t(v) * stride + jj] | (std::uint64_t(jj == v / 64) << (v % 64));
                    std::uint64_t bad =
                        reach[size_t(x) * stride + jj] & reach_to_v & nonadj[size_t(x) * stride + jj];
                    if (bad) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace wordrep
