#include "wordrep/subgraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace wordrep {

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    const int k = static_cast<int>(vs.size());
    std::vector<int> where(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) {
        int v = vs[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (where[v] != -1)
            throw std::invalid_argument("induced_subgraph: duplicate vertex");
        where[v] = i;
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (where[u] != -1 && where[v] != -1) edges.push_back({where[u], where[v]});
    std::vector<std::string> labels;
    labels.reserve(k);
    for (int v : vs) labels.push_back(g.label(v));
    return Graph(k, std::move(edges), std::move(labels));
}

namespace {

// Flat bitset adjacency rows for O(1) edge tests during search.
struct AdjacencyBits {
    int n = 0;
    int stride = 0;
    std::vector<std::uint64_t> rows;

    explicit AdjacencyBits(const Graph& g)
        : n(g.vertex_count()), stride((g.vertex_count() + 63) / 64), rows(size_t(n) * stride, 0) {
        for (const auto& [u, v] : g.edges()) {
            rows[size_t(u) * stride + v / 64] |= std::uint64_t(1) << (v % 64);
            rows[size_t(v) * stride + u / 64] |= std::uint64_t(1) << (u % 64);
        }
    }

    bool test(int u, int v) const {
        return (rows[size_t(u) * stride + v / 64] >> (v % 64)) & 1;
    }
};

struct EmbedSearch {
    const Graph& host;
    const Graph& pattern;
    AdjacencyBits host_bits;
    std::vector<int> order;     // pattern vertices, descending degree, ties by index
    std::vector<int> mapped;    // pattern vertex -> host vertex or -1
    std::vector<char> used;     // host vertex taken
    bool require_equal_degree;  // isomorphism mode
    std::uint64_t budget;
    SearchStats stats;
    bool out_of_budget = false;

    EmbedSearch(const Graph& h, const Graph& p, bool equal_degree, std::uint64_t budget_)
        : host(h),
          pattern(p),
          host_bits(h),
          mapped(p.vertex_count(), -1),
          used(h.vertex_count(), 0),
          require_equal_degree(equal_degree),
          budget(budget_) {
        stats.budget = budget_;
        order.resize(p.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (p.degree(a) != p.degree(b)) return p.degree(a) > p.degree(b);
            return a < b;
        });
    }

    bool consistent(int p, int c, int depth) const {
        for (int d = 0; d < depth; ++d) {
            int q = order[d];
            bool pe = pattern.has_edge(p, q);
            bool he = host_bits.test(c, mapped[q]);
            if (pe != he) return false;
        }
        return true;
    }

    bool try_candidate(int p, int c, int depth) {
        ++stats.expansions;
        if (stats.expansions > budget) {
            out_of_budget = true;
            return false;
        }
        if (used[c]) return false;
        int dh = host.degree(c), dp = pattern.degree(p);
        if (require_equal_degree ? dh != dp : dh < dp) return false;
        return consistent(p, c, depth);
    }

    bool dfs(int depth) {
        if (depth == pattern.vertex_count()) return true;
        int p = order[depth];
        // Enumerate through a mapped pattern-neighbor's host adjacency when
        // one exists; the candidate set is the same either way and both
        // enumerations are ascending, so the first witness is canonical.
        int anchor = -1;
        for (int d = 0; d < depth && anchor == -1; ++d)
            if (pattern.has_edge(p, order[d])) anchor = mapped[order[d]];
        const std::vector<int>* base = anchor >= 0 ? &host.neighbors(anchor) : nullptr;
        const int limit = base ? static_cast<int>(base->size()) : host.vertex_count();
        for (int i = 0; i < limit; ++i) {
            int c = base ? (*base)[i] : i;
            if (!try_candidate(p, c, depth)) {
                if (out_of_budget) return false;
                continue;
            }
            mapped[p] = c;
            used[c] = 1;
            if (dfs(depth + 1)) return true;
            mapped[p] = -1;
            used[c] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }

    EmbedResult run() {
        EmbedResult result;
        if (pattern.vertex_count() > host.vertex_count()) {
            result.status = SearchStatus::absent;
            result.stats = stats;
            result.stats.exhausted = true;
            return result;
        }
        bool found = dfs(0);
        result.stats = stats;
        if (found) {
            result.status = SearchStatus::found;
            result.witness = LabelMap{mapped};
        } else if (out_of_budget) {
            result.status = SearchStatus::unknown;
        } else {
            result.status = SearchStatus::absent;
            result.stats.exhausted = true;
        }
        return result;
    }
};

}  // namespace

EmbedResult contains_induced(const Graph& host, const Graph& pattern, std::uint64_t budget) {
    return EmbedSearch(host, pattern, false, budget).run();
}

EmbedResult is_isomorphic(const Graph& a, const Graph& b, std::uint64_t budget) {
    EmbedResult result;
    result.stats.budget = budget;
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        result.status = SearchStatus::absent;
        result.stats.exhausted = true;
        return result;
    }
    std::vector<int> da, db;
    for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) {
        result.status = SearchStatus::absent;
        result.stats.exhausted = true;
        return result;
    }
    return EmbedSearch(b, a, true, budget).run();
}

bool verify_induced_embedding(const Graph& host, const Graph& pattern, const LabelMap& map) {
    const int k = pattern.vertex_count();
    if (static_cast<int>(map.to_host.size()) != k) return false;
    std::vector<char> seen(host.vertex_count(), 0);
    for (int v : map.to_host) {
        if (v < 0 || v >= host.vertex_count() || seen[v]) return false;
        seen[v] = 1;
    }
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (pattern.has_edge(u, v) != host.has_edge(map.to_host[u], map.to_host[v]))
                return false;
    return true;
}

bool verify_isomorphism(const Graph& a, const Graph& b, const LabelMap& map) {
    return a.vertex_count() == b.vertex_count() && verify_induced_embedding(b, a, map);
}

}  // namespace wordrep
