#pragma once

#include <utility>
#include <vector>

#include "essgraph/graph.hpp"

namespace essgraph::detail {

/// Dart (directed edge) indexing over a graph's canonical edge list.
/// Edge e has darts 2e (first->second) and 2e+1 (second->first).
struct Darts {
    std::vector<std::pair<int, int>> edge;
    std::vector<std::vector<int>> at;  // darts out of each vertex, ascending

    explicit Darts(const Graph& g) : edge(g.edges()), at(g.n()) {
        for (int e = 0; e < static_cast<int>(edge.size()); ++e) {
            at[edge[e].first].push_back(2 * e);
            at[edge[e].second].push_back(2 * e + 1);
        }
    }

    int count() const { return static_cast<int>(edge.size()) * 2; }
    int tail(int d) const { return d & 1 ? edge[d >> 1].second : edge[d >> 1].first; }
    int head(int d) const { return d & 1 ? edge[d >> 1].first : edge[d >> 1].second; }
    static int rev(int d) { return d ^ 1; }
    static int eidx(int d) { return d >> 1; }

    /// Dart from u to adjacent v.
    int dart(int u, int v) const {
        for (int d : at[u])
            if (head(d) == v) return d;
        return -1;
    }
};

}  // namespace essgraph::detail
