#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "darts.hpp"
#include "essgraph/embed.hpp"

namespace essgraph {

namespace {

// succ[d] = rotation successor of dart d around tail(d); pred is the inverse.
struct RotationMaps {
    std::vector<int> succ, pred;
};

RotationMaps rotation_maps(const Graph& g, const detail::Darts& darts,
                           const EmbeddingScheme& scheme) {
    if (static_cast<int>(scheme.rotation.size()) != g.n())
        throw std::invalid_argument("rotation size mismatch");
    if (static_cast<int>(scheme.sign.size()) != static_cast<int>(darts.edge.size()))
        throw std::invalid_argument("sign size mismatch");
    for (int8_t s : scheme.sign)
        if (s != 1 && s != -1) throw std::invalid_argument("edge sign must be +-1");

    RotationMaps maps;
    maps.succ.assign(darts.count(), -1);
    maps.pred.assign(darts.count(), -1);
    for (int v = 0; v < g.n(); ++v) {
        const auto& rot = scheme.rotation[v];
        auto nbrs = g.neighbors(v);
        auto sorted = rot;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != nbrs)
            throw std::invalid_argument("rotation at a vertex is not a permutation of its neighbors");
        int k = static_cast<int>(rot.size());
        for (int i = 0; i < k; ++i) {
            int d = darts.dart(v, rot[i]);
            int n = darts.dart(v, rot[(i + 1) % k]);
            maps.succ[d] = n;
            maps.pred[n] = d;
        }
    }
    return maps;
}

}  // namespace

bool EmbeddingScheme::orientable() const {
    for (int8_t s : sign)
        if (s == -1) return false;
    return true;
}

int trace_faces(const Graph& g, const EmbeddingScheme& scheme) {
    detail::Darts darts(g);
    if (darts.count() == 0) return 1;
    auto maps = rotation_maps(g, darts, scheme);

    // Walk signed darts (d, side); a face lifts to two walks in the
    // orientation double cover, so the orbit count is 2F.
    int total = darts.count() * 2;
    std::vector<char> seen(total, 0);
    int orbits = 0;
    for (int start = 0; start < total; ++start) {
        if (seen[start]) continue;
        ++orbits;
        int cur = start;
        while (!seen[cur]) {
            seen[cur] = 1;
            int d = cur >> 1;
            int side = cur & 1 ? -1 : 1;
            int t = side * scheme.sign[detail::Darts::eidx(d)];
            int r = detail::Darts::rev(d);
            int next = t > 0 ? maps.succ[r] : maps.pred[r];
            cur = next * 2 + (t > 0 ? 0 : 1);
        }
        if (cur != start)
            throw std::logic_error("face tracing did not return to its start");
    }
    if (orbits % 2 != 0) throw std::logic_error("odd signed face orbit count");
    return orbits / 2;
}

int euler_genus_of_scheme(const Graph& g, const EmbeddingScheme& scheme) {
    if (!g.connected()) throw std::invalid_argument("graph must be connected");
    int f = trace_faces(g, scheme);
    return 2 - g.n() + g.edge_count() - f;
}

std::string scheme_to_json(const Graph& g, const EmbeddingScheme& scheme) {
    nlohmann::json j;
    auto& rot = j["rotations"];
    for (int v = 0; v < g.n(); ++v) {
        auto& lst = rot[std::to_string(v)];
        lst = nlohmann::json::array();
        for (int u : scheme.rotation[v]) lst.push_back(u);
    }
    auto& signs = j["signs"];
    auto es = g.edges();
    for (size_t e = 0; e < es.size(); ++e) {
        std::string key = std::to_string(es[e].first) + "-" + std::to_string(es[e].second);
        signs[key] = static_cast<int>(scheme.sign[e]);
    }
    int f = 0;
    for (const auto& comp : g.components()) {
        Graph sub = g.induced(comp);
        EmbeddingScheme local;
        local.sign.assign(sub.edge_count(), 1);
        // rebuild per-component scheme
        std::vector<int> idx(g.n(), -1);
        for (size_t i = 0; i < comp.size(); ++i) idx[comp[i]] = static_cast<int>(i);
        local.rotation.resize(sub.n());
        for (size_t i = 0; i < comp.size(); ++i)
            for (int u : scheme.rotation[comp[i]]) local.rotation[i].push_back(idx[u]);
        auto sub_edges = sub.edges();
        for (size_t e = 0; e < sub_edges.size(); ++e) {
            int gu = comp[sub_edges[e].first], gv = comp[sub_edges[e].second];
            for (size_t ge = 0; ge < es.size(); ++ge)
                if ((es[ge].first == gu && es[ge].second == gv) ||
                    (es[ge].first == gv && es[ge].second == gu))
                    local.sign[e] = scheme.sign[ge];
        }
        f += trace_faces(sub, local);
    }
    j["faces"] = f;
    int comps = static_cast<int>(g.components().size());
    j["euler_genus"] = 2 * comps - g.n() + g.edge_count() - f;
    return j.dump(2);
}

}  // namespace essgraph
