#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "essgraph/embed.hpp"

namespace essgraph {

namespace {

using Edge = std::pair<int, int>;

Edge canon(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// Biconnected components as edge sets (Tarjan, recursive).
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;

    explicit BlockFinder(const Graph& g) : g(g), disc(g.n(), -1), low(g.n(), 0) {}

    void dfs(int v, int parent) {
        disc[v] = low[v] = timer++;
        for (int u : g.neighbors(v)) {
            if (u == parent) {
                parent = -2;  // skip the tree edge once; simple graph
                continue;
            }
            if (disc[u] < 0) {
                stack.push_back(canon(v, u));
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= disc[v]) {
                    std::vector<Edge> block;
                    Edge top = canon(v, u);
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e == top) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (disc[u] < disc[v]) {
                stack.push_back(canon(v, u));
                low[v] = std::min(low[v], disc[u]);
            }
        }
    }
};

// Demoucron's face-embedding algorithm on one biconnected block.
// Vertices keep their global ids; rotations are neighbor lists.
class BlockEmbedder {
public:
    BlockEmbedder(const std::vector<Edge>& edges) {
        for (auto [u, v] : edges) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            remaining_.insert(canon(u, v));
        }
        for (auto& [v, nbrs] : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    bool run() {
        int nv = static_cast<int>(adj_.size());
        int ne = static_cast<int>(remaining_.size());
        if (ne <= 2) {  // a single edge block
            for (auto [u, v] : remaining_) {
                rot_[u].push_back(v);
                rot_[v].push_back(u);
            }
            remaining_.clear();
            return true;
        }
        if (nv >= 3 && ne > 3 * nv - 6) return false;

        embed_cycle(find_cycle());
        while (!remaining_.empty()) {
            auto frags = fragments();
            // pick a fragment with the fewest admissible faces
            int best = -1;
            size_t best_count = SIZE_MAX;
            for (size_t i = 0; i < frags.size(); ++i) {
                size_t c = frags[i].faces.size();
                if (c == 0) return false;
                if (c < best_count) {
                    best_count = c;
                    best = static_cast<int>(i);
                }
            }
            embed_path(frag_path(frags[best]), frags[best].faces.front());
        }
        return true;
    }

    const std::map<int, std::vector<int>>& rotations() const { return rot_; }

private:
    struct Fragment {
        std::set<Edge> edges;
        std::vector<int> attachments;
        std::vector<int> faces;  // admissible face indices
    };

    std::map<int, std::vector<int>> adj_;
    std::set<Edge> remaining_;
    std::map<int, std::vector<int>> rot_;            // embedded rotations
    std::vector<std::vector<std::pair<int, int>>> faces_;  // dart walks

    bool embedded(int v) const { return rot_.count(v) > 0; }

    std::vector<int> find_cycle() const {
        // DFS until a back edge reaches a vertex still on the current path
        std::map<int, int> parent;
        std::map<int, int> state;  // 1 = on path, 2 = finished
        int start = adj_.begin()->first;
        parent[start] = -1;
        state[start] = 1;
        std::vector<std::pair<int, size_t>> stack{{start, 0}};
        while (!stack.empty()) {
            int v = stack.back().first;
            size_t i = stack.back().second++;
            const auto& nbrs = adj_.at(v);
            if (i == nbrs.size()) {
                state[v] = 2;
                stack.pop_back();
                continue;
            }
            int u = nbrs[i];
            if (u == parent.at(v)) continue;
            auto it = state.find(u);
            if (it != state.end() && it->second == 1) {
                std::vector<int> cyc{v};
                int w = v;
                while (w != u) {
                    w = parent.at(w);
                    cyc.push_back(w);
                }
                return cyc;
            }
            if (it == state.end()) {
                parent[u] = v;
                state[u] = 1;
                stack.push_back({u, 0});
            }
        }
        throw std::logic_error("biconnected block without a cycle");
    }

    void embed_cycle(const std::vector<int>& cyc) {
        int k = static_cast<int>(cyc.size());
        for (int i = 0; i < k; ++i) {
            int prev = cyc[(i + k - 1) % k], next = cyc[(i + 1) % k];
            rot_[cyc[i]] = {next, prev};
            remaining_.erase(canon(cyc[i], next));
        }
        retrace();
    }

    int succ_in_rot(int v, int after) const {
        const auto& r = rot_.at(v);
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] == after) return r[(i + 1) % r.size()];
        throw std::logic_error("rotation successor lookup failed");
    }

    void retrace() {
        faces_.clear();
        std::set<std::pair<int, int>> seen;
        for (const auto& [v, nbrs] : rot_)
            for (int u : nbrs) {
                if (seen.count({v, u})) continue;
                std::vector<std::pair<int, int>> walk;
                int a = v, b = u;
                while (!seen.count({a, b})) {
                    seen.insert({a, b});
                    walk.push_back({a, b});
                    int c = succ_in_rot(b, a);
                    a = b;
                    b = c;
                }
                faces_.push_back(std::move(walk));
            }
    }

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        std::set<int> interior_seen;
        for (Edge e : remaining_) {
            auto [u, v] = e;
            if (embedded(u) && embedded(v)) {
                Fragment f;
                f.edges.insert(e);
                f.attachments = {u, v};
                out.push_back(std::move(f));
            }
        }
        for (Edge e : remaining_) {
            for (int s : {e.first, e.second}) {
                if (embedded(s) || interior_seen.count(s)) continue;
                // flood the non-embedded component containing s
                Fragment f;
                std::set<int> att;
                std::vector<int> stack{s};
                interior_seen.insert(s);
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (int u : adj_.at(v)) {
                        if (!remaining_.count(canon(v, u))) continue;
                        f.edges.insert(canon(v, u));
                        if (embedded(u)) {
                            att.insert(u);
                        } else if (!interior_seen.count(u)) {
                            interior_seen.insert(u);
                            stack.push_back(u);
                        }
                    }
                }
                f.attachments.assign(att.begin(), att.end());
                out.push_back(std::move(f));
            }
        }
        for (auto& f : out) {
            for (size_t i = 0; i < faces_.size(); ++i) {
                std::set<int> fv;
                for (auto [a, b] : faces_[i]) fv.insert(a);
                bool ok = true;
                for (int a : f.attachments)
                    if (!fv.count(a)) {
                        ok = false;
                        break;
                    }
                if (ok) f.faces.push_back(static_cast<int>(i));
            }
        }
        return out;
    }

    std::vector<int> frag_path(const Fragment& f) const {
        int start = f.attachments.front();
        if (f.edges.size() == 1) {
            auto e = *f.edges.begin();
            return {e.first, e.second};
        }
        // BFS from one attachment through fragment interior to another
        std::map<int, int> parent;
        std::deque<int> queue{start};
        parent[start] = -1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : adj_.at(v)) {
                if (!f.edges.count(canon(v, u)) || parent.count(u)) continue;
                parent[u] = v;
                if (embedded(u) && u != start) {
                    std::vector<int> path{u};
                    int w = u;
                    while (w != start) {
                        w = parent.at(w);
                        path.push_back(w);
                    }
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (!embedded(u)) queue.push_back(u);
            }
        }
        throw std::logic_error("fragment path not found");
    }

    void embed_path(const std::vector<int>& path, int face_idx) {
        const auto& walk = faces_[face_idx];
        int u = path.front(), v = path.back();
        // corner darts: the walk enters u via (a,u) and v via (c,v)
        int a = -1, c = -1;
        for (auto [x, y] : walk) {
            if (y == u) a = x;
            if (y == v) c = x;
        }
        if (a < 0 || c < 0) throw std::logic_error("face does not touch path ends");
        insert_after(u, a, path[1]);
        insert_after(v, c, path[path.size() - 2]);
        for (size_t i = 1; i + 1 < path.size(); ++i)
            rot_[path[i]] = {path[i + 1], path[i - 1]};
        for (size_t i = 0; i + 1 < path.size(); ++i)
            remaining_.erase(canon(path[i], path[i + 1]));
        retrace();
    }

    void insert_after(int v, int after, int nbr) {
        auto& r = rot_.at(v);
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] == after) {
                r.insert(r.begin() + static_cast<long>(i) + 1, nbr);
                return;
            }
        throw std::logic_error("rotation insert anchor missing");
    }
};

}  // namespace

PlanarityResult is_planar(const Graph& g) {
    PlanarityResult out;
    out.embedding = EmbeddingScheme{};
    out.embedding->rotation.assign(g.n(), {});
    out.embedding->sign.assign(g.edge_count(), 1);

    for (const auto& comp : g.components()) {
        if (comp.size() < 2) continue;
        Graph sub = g.induced(comp);
        BlockFinder bf(sub);
        for (size_t i = 0; i < comp.size(); ++i)
            if (bf.disc[i] < 0) bf.dfs(static_cast<int>(i), -1);
        for (const auto& block : bf.blocks) {
            std::vector<Edge> global;
            for (auto [u, v] : block) global.push_back(canon(comp[u], comp[v]));
            BlockEmbedder be(global);
            if (!be.run()) return PlanarityResult{false, std::nullopt};
            // splice each block's rotation at its (cut) vertices
            for (const auto& [v, nbrs] : be.rotations()) {
                auto& r = out.embedding->rotation[v];
                r.insert(r.end(), nbrs.begin(), nbrs.end());
            }
        }
    }

    // sanity: every component must satisfy V - E + F = 2
    for (const auto& comp : g.components()) {
        Graph sub = g.induced(comp);
        EmbeddingScheme local;
        local.sign.assign(sub.edge_count(), 1);
        local.rotation.resize(sub.n());
        std::vector<int> idx(g.n(), -1);
        for (size_t i = 0; i < comp.size(); ++i) idx[comp[i]] = static_cast<int>(i);
        for (size_t i = 0; i < comp.size(); ++i)
            for (int u : out.embedding->rotation[comp[i]])
                local.rotation[i].push_back(idx[u]);
        int f = trace_faces(sub, local);
        if (sub.n() - sub.edge_count() + f != 2)
            throw std::logic_error("planar embedding failed Euler validation");
    }
    out.planar = true;
    return out;
}

std::string kuratowski_witness(const Graph& g) {
    if (is_planar(g).planar) return "";
    if (contains_subdivision(g, complete(5))) return "K5";
    if (contains_subdivision(g, complete_bipartite(3, 3))) return "K3,3";
    throw std::logic_error("nonplanar graph without Kuratowski subdivision");
}

bool is_outerplanar(const Graph& g) {
    return is_planar(join(g, complete(1))).planar;
}

int euler_lower_bound(const Graph& g, bool orientable) {
    if (g.n() < 3) return 0;
    bool triangle_free = true;
    for (auto [u, v] : g.edges()) {
        for (int w = 0; w < g.n(); ++w)
            if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)) {
                triangle_free = false;
                break;
            }
        if (!triangle_free) break;
    }
    long e = g.edge_count(), v = g.n();
    long num = triangle_free ? e - 2 * (v - 2) : e - 3 * (v - 2);
    long den = (orientable ? 2 : 1) * (triangle_free ? 2 : 3);
    if (num <= 0) return 0;
    return static_cast<int>((num + den - 1) / den);
}

}  // namespace essgraph
