#include "essgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace essgraph {

Graph::Graph(int n, std::vector<std::string> labels)
    : labels_(std::move(labels)), adj_(n, std::vector<char>(n, 0)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (labels_.empty()) {
        labels_.resize(n);
        for (int i = 0; i < n; ++i) labels_[i] = std::to_string(i);
    }
    if (static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count mismatch");
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw std::out_of_range("vertex index");
    if (!adj_[u][v]) {
        adj_[u][v] = adj_[v][u] = 1;
        ++edge_count_;
    }
}

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n(); ++u) d += adj_[v][u];
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n(); ++u)
        for (int v = u + 1; v < n(); ++v)
            if (adj_[u][v]) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n(); ++u)
        if (adj_[v][u]) out.push_back(u);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n());
    for (int v = 0; v < n(); ++v) d[v] = degree(v);
    std::sort(d.rbegin(), d.rend());
    return d;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(n(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int u = 0; u < n(); ++u)
                if (adj_[v][u] && comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool Graph::connected() const {
    if (n() <= 1) return true;
    return components().size() == 1;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (int v : verts) labels.push_back(labels_[v]);
    Graph out(static_cast<int>(verts.size()), labels);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (adj_[verts[i]][verts[j]])
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph Graph::complement() const {
    Graph out(n(), labels_);
    for (int u = 0; u < n(); ++u)
        for (int v = u + 1; v < n(); ++v)
            if (!adj_[u][v]) out.add_edge(u, v);
    return out;
}

Graph complete(int m) {
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int m) { return Graph(m); }

Graph complete_bipartite(int m, int n) {
    return complete_multipartite({m, n});
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    Graph g(total);
    std::vector<int> part(total);
    int idx = 0;
    for (size_t p = 0; p < sizes.size(); ++p) {
        if (sizes[p] < 1) throw std::invalid_argument("part size < 1");
        for (int i = 0; i < sizes[p]; ++i) part[idx++] = static_cast<int>(p);
    }
    for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v)
            if (part[u] != part[v]) g.add_edge(u, v);
    return g;
}

Graph path(int m) {
    Graph g(m);
    for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    Graph g = path(m);
    g.add_edge(m - 1, 0);
    return g;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < h.n(); ++v) out.add_edge(u, g.n() + v);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<std::string> labels;
    for (int v = 0; v < g.n(); ++v) labels.push_back("a:" + g.label(v));
    for (int v = 0; v < h.n(); ++v) labels.push_back("b:" + h.label(v));
    Graph out(g.n() + h.n(), labels);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.n() + u, g.n() + v);
    return out;
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    std::vector<std::string> labels;
    labels.reserve(es.size());
    for (auto [u, v] : es)
        labels.push_back("{" + g.label(u) + "," + g.label(v) + "}");
    Graph out(static_cast<int>(es.size()), labels);
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return out;
}

std::optional<std::vector<int>> recognize_complete_multipartite(const Graph& g) {
    if (g.n() == 0) return std::vector<int>{};
    Graph co = g.complement();
    std::vector<int> sizes;
    for (const auto& comp : co.components()) {
        // each complement component must be a clique
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j)
                if (!co.has_edge(comp[i], comp[j])) return std::nullopt;
        sizes.push_back(static_cast<int>(comp.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

bool is_complete(const Graph& g) {
    return g.edge_count() == g.n() * (g.n() - 1) / 2;
}

std::optional<std::pair<int, int>> recognize_complete_bipartite(const Graph& g) {
    auto sizes = recognize_complete_multipartite(g);
    if (!sizes || sizes->size() != 2) return std::nullopt;
    return std::make_pair((*sizes)[0], (*sizes)[1]);
}

namespace {

bool iso_extend(const Graph& g, const Graph& h, std::vector<int>& map,
                std::vector<char>& used, int v) {
    if (v == g.n()) return true;
    for (int w = 0; w < h.n(); ++w) {
        if (used[w] || g.degree(v) != h.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) != h.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (iso_extend(g, h, map, used, v + 1)) return true;
        used[w] = 0;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() > 30 || h.n() > 30)
        throw std::invalid_argument("isomorphism cap exceeded (30 vertices)");
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    std::vector<int> map(g.n(), -1);
    std::vector<char> used(h.n(), 0);
    return iso_extend(g, h, map, used, 0);
}

std::vector<int> top_degrees(const Graph& g, int k) {
    if (k > g.n()) throw std::invalid_argument("k > |V|");
    auto d = g.degree_sequence();
    d.resize(k);
    return d;
}

int max_k2m_subgraph(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            int common = 0;
            for (int w = 0; w < g.n(); ++w)
                if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w))
                    ++common;
            best = std::max(best, common);
        }
    return best;
}

namespace {

void clique_search(const Graph& g, std::vector<int>& cand, int size, int& best) {
    if (size + static_cast<int>(cand.size()) <= best) return;
    if (cand.empty()) {
        best = std::max(best, size);
        return;
    }
    while (!cand.empty()) {
        if (size + static_cast<int>(cand.size()) <= best) return;
        int v = cand.back();
        cand.pop_back();
        std::vector<int> next;
        for (int u : cand)
            if (g.has_edge(u, v)) next.push_back(u);
        clique_search(g, next, size + 1, best);
    }
}

}  // namespace

int max_clique(const Graph& g) {
    std::vector<int> cand(g.n());
    std::iota(cand.begin(), cand.end(), 0);
    int best = 0;
    clique_search(g, cand, 0, best);
    return best;
}

std::optional<int> max_k12m_subgraph(const Graph& g, int min_m) {
    // hub h adjacent to all of {y1,y2} u Z; y1,y2 adjacent to all of Z;
    // Z independent, nonadjacent pairs y1-y2 not required (subgraph search,
    // internal part edges may exist in G and are simply unused).
    int best = -1;
    for (int h = 0; h < g.n(); ++h) {
        auto nh = g.neighbors(h);
        for (size_t i = 0; i < nh.size(); ++i)
            for (size_t j = i + 1; j < nh.size(); ++j) {
                int y1 = nh[i], y2 = nh[j];
                int m = 0;
                for (int z : nh)
                    if (z != y1 && z != y2 && g.has_edge(y1, z) && g.has_edge(y2, z))
                        ++m;
                best = std::max(best, m);
            }
    }
    if (best >= min_m) return best;
    return std::nullopt;
}

std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.n(); ++v)
        out += "  v" + std::to_string(v) + " [label=\"" + g.label(v) + "\"];\n";
    for (auto [u, v] : g.edges())
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

std::string to_json(const Graph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < g.n(); ++v) j["vertices"].push_back(g.label(v));
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump(2);
}

Graph graph_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
    Graph g(static_cast<int>(labels.size()), labels);
    for (const auto& e : j.at("edges"))
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

}  // namespace essgraph
