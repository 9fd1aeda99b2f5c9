#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace essgraph {

/// Finite simple undirected graph with stable vertex labels.
/// Adjacency math uses indices only; labels are for display/export.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, std::vector<std::string> labels = {});

    int n() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const { return adj_[u][v]; }
    void add_edge(int u, int v);

    int degree(int v) const;
    const std::string& label(int v) const { return labels_[v]; }
    void set_label(int v, std::string s) { labels_[v] = std::move(s); }

    /// Edges as canonical (min,max) pairs, lexicographic.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int v) const;

    std::vector<int> degree_sequence() const;  // descending
    bool connected() const;
    std::vector<std::vector<int>> components() const;

    Graph induced(const std::vector<int>& verts) const;
    Graph complement() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<char>> adj_;
    int edge_count_ = 0;
};

// standard generators
Graph complete(int m);
Graph empty_graph(int m);
Graph complete_bipartite(int m, int n);
Graph complete_multipartite(const std::vector<int>& sizes);
Graph path(int m);
Graph cycle(int m);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Vertices of L(G) are the edges of G (in canonical order); adjacency is
/// sharing an endpoint.
Graph line_graph(const Graph& g);

/// Part sizes (sorted ascending) iff the complement of G is a disjoint union
/// of cliques.
std::optional<std::vector<int>> recognize_complete_multipartite(const Graph& g);

/// Convenience wrappers over the multipartite recognizer.
bool is_complete(const Graph& g);
std::optional<std::pair<int, int>> recognize_complete_bipartite(const Graph& g);

/// Exact isomorphism test by backtracking with degree pruning; |V| <= 30.
bool is_isomorphic(const Graph& g, const Graph& h);

/// True iff G contains a subgraph isomorphic to H (not a subdivision).
bool contains_subgraph(const Graph& g, const Graph& h);

/// True iff G contains a subgraph homeomorphic to H (topological minor).
/// H must be connected with |V(H)| <= 8.
bool contains_subdivision(const Graph& g, const Graph& h);

/// k largest vertex degrees, descending.
std::vector<int> top_degrees(const Graph& g, int k);

/// Largest m such that K_{2,m} is a subgraph (two vertices with m common
/// neighbors); 0 when none.
int max_k2m_subgraph(const Graph& g);

/// Size of a maximum clique (exact, branch and bound; desk scale).
int max_clique(const Graph& g);

/// Largest m >= min_m with K_{1,2,m} as a subgraph, or nullopt.
std::optional<int> max_k12m_subgraph(const Graph& g, int min_m);

std::string to_dot(const Graph& g);
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace essgraph
