#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "essgraph/graph.hpp"

namespace essgraph {

namespace {

bool subgraph_extend(const Graph& g, const Graph& h, const std::vector<int>& order,
                     std::vector<int>& map, std::vector<char>& used, size_t pos) {
    if (pos == order.size()) return true;
    int hv = order[pos];
    for (int gv = 0; gv < g.n(); ++gv) {
        if (used[gv] || g.degree(gv) < h.degree(hv)) continue;
        bool ok = true;
        for (size_t i = 0; i < pos && ok; ++i)
            if (h.has_edge(order[i], hv) && !g.has_edge(map[order[i]], gv)) ok = false;
        if (!ok) continue;
        map[hv] = gv;
        used[gv] = 1;
        if (subgraph_extend(g, h, order, map, used, pos + 1)) return true;
        used[gv] = 0;
    }
    return false;
}

std::vector<int> by_descending_degree(const Graph& h) {
    std::vector<int> order(h.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    return order;
}

struct SubdivSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> branch;          // H vertex -> G vertex
    std::vector<char> used;           // G vertices consumed (branch or internal)
    std::vector<std::pair<int, int>> hedges;

    bool find_path(int from, int target, int first_edge_done);
    bool realize(size_t edge_idx);
    bool assign(const std::vector<int>& order, size_t pos);
};

bool SubdivSearch::find_path(int cur, int target, int edge_idx) {
    for (int next = 0; next < g.n(); ++next) {
        if (!g.has_edge(cur, next)) continue;
        if (next == target) {
            if (realize(edge_idx + 1)) return true;
            continue;
        }
        if (used[next]) continue;
        used[next] = 1;
        if (find_path(next, target, edge_idx)) return true;
        used[next] = 0;
    }
    return false;
}

bool SubdivSearch::realize(size_t edge_idx) {
    if (edge_idx == hedges.size()) return true;
    auto [a, b] = hedges[edge_idx];
    return find_path(branch[a], branch[b], static_cast<int>(edge_idx));
}

bool SubdivSearch::assign(const std::vector<int>& order, size_t pos) {
    if (pos == order.size()) {
        std::vector<char> saved = used;
        if (realize(0)) return true;
        used = saved;
        return false;
    }
    int hv = order[pos];
    for (int gv = 0; gv < g.n(); ++gv) {
        if (used[gv] || g.degree(gv) < h.degree(hv)) continue;
        branch[hv] = gv;
        used[gv] = 1;
        if (assign(order, pos + 1)) return true;
        used[gv] = 0;
    }
    return false;
}

}  // namespace

bool contains_subgraph(const Graph& g, const Graph& h) {
    if (h.n() > g.n() || h.edge_count() > g.edge_count()) return false;
    auto order = by_descending_degree(h);
    std::vector<int> map(h.n(), -1);
    std::vector<char> used(g.n(), 0);
    return subgraph_extend(g, h, order, map, used, 0);
}

bool contains_subdivision(const Graph& g, const Graph& h) {
    if (h.n() > 8) throw std::invalid_argument("pattern too large (> 8 vertices)");
    if (!h.connected()) throw std::invalid_argument("pattern must be connected");
    if (h.n() > g.n() || h.edge_count() > g.edge_count()) return false;

    // A star subdivision is a set of disjoint paths from one center, which
    // exists iff some vertex has the required degree.
    auto hdeg = h.degree_sequence();
    bool star = h.n() >= 2 && h.edge_count() == h.n() - 1 &&
                hdeg[0] == h.n() - 1;
    if (star) {
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) >= hdeg[0]) return true;
        return false;
    }

    SubdivSearch s{g, h, std::vector<int>(h.n(), -1), std::vector<char>(g.n(), 0), {}};
    s.hedges = h.edges();
    std::stable_sort(s.hedges.begin(), s.hedges.end(),
                     [&](auto a, auto b) {
                         return h.degree(a.first) + h.degree(a.second) >
                                h.degree(b.first) + h.degree(b.second);
                     });
    return s.assign(by_descending_degree(h), 0);
}

}  // namespace essgraph
