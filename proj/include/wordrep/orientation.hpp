#pragma once

#include <utility>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// A direction for every edge of a base graph. reversed[i] refers to
// base.edges()[i]: false orients low->high, true the other way.
struct Orientation {
    Graph base;
    std::vector<bool> reversed;

    Orientation() = default;
    Orientation(Graph base_, std::vector<bool> reversed_);

    // Builds from an explicit directed pair per edge; every base edge must
    // appear exactly once. Throws std::invalid_argument otherwise.
    static Orientation from_directed(Graph base, const std::vector<std::pair<int, int>>& directed);

    std::pair<int, int> directed_edge(int i) const;
    std::vector<std::pair<int, int>> directed_edges() const;
};

// True iff the directed graph has no directed cycle.
bool is_acyclic(const Orientation& o);

// True iff o is acyclic and shortcut-free: along every directed path
// v0 -> ... -> vk whose closing edge v0 -> vk exists, every pair (vi, vj),
// i < j, is an edge directed vi -> vj. For acyclic orientations this
// reduces to: no directed edge u -> v admits vertices x, y with u => x,
// x => y, y => v reachable and {x, y} missing from the base graph (a
// present pair on a path can only be oriented forward).
bool is_semi_transitive(const Orientation& o);

}  // namespace wordrep
