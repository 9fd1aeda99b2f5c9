#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "essgraph/graph.hpp"

using namespace essgraph;

TEST_CASE("generators and counts") {
    CHECK(complete(5).edge_count() == 10);
    CHECK(complete_bipartite(3, 4).edge_count() == 12);
    CHECK(path(4).edge_count() == 3);
    CHECK(cycle(5).edge_count() == 5);
    CHECK(join(path(3), complete(1)).edge_count() == 5);
    CHECK(complete_multipartite({1, 2, 2}).edge_count() == 8);
    CHECK(disjoint_union(complete(3), complete(3)).components().size() == 2);
}

TEST_CASE("line graph basics") {
    // L(K4) is the octahedron K_{2,2,2}
    Graph l = line_graph(complete(4));
    CHECK(l.n() == 6);
    CHECK(l.edge_count() == 12);
    CHECK(is_isomorphic(l, complete_multipartite({2, 2, 2})));
    // L(K_{1,n}) = K_n
    CHECK(is_isomorphic(line_graph(complete_bipartite(1, 5)), complete(5)));
    // L(C5) = C5
    CHECK(is_isomorphic(line_graph(cycle(5)), cycle(5)));
    // L(K_{3,3}) is 4-regular on 9 vertices
    Graph l33 = line_graph(complete_bipartite(3, 3));
    CHECK(l33.n() == 9);
    for (int v = 0; v < 9; ++v) CHECK(l33.degree(v) == 4);
}

TEST_CASE("complete multipartite recognition") {
    auto p = recognize_complete_multipartite(complete_multipartite({1, 2, 4}));
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<int>{1, 2, 4});
    CHECK(recognize_complete_multipartite(path(4)) == std::nullopt);
    CHECK(is_complete(complete(6)));
    auto b = recognize_complete_bipartite(complete_bipartite(2, 5));
    REQUIRE(b.has_value());
    CHECK(b->first == 2);
    CHECK(b->second == 5);
    CHECK_FALSE(recognize_complete_bipartite(complete(3)).has_value());
}

TEST_CASE("isomorphism") {
    // K_{3,3} is the complement of two disjoint triangles
    Graph two_triangles = disjoint_union(complete(3), complete(3));
    CHECK(is_isomorphic(complete_bipartite(3, 3), two_triangles.complement()));
    CHECK(is_isomorphic(cycle(6), cycle(6)));
    CHECK_FALSE(is_isomorphic(cycle(6), path(6)));
    CHECK_FALSE(is_isomorphic(complete_bipartite(2, 4), complete_bipartite(3, 3)));
}

TEST_CASE("subgraph and subdivision containment") {
    CHECK(contains_subgraph(complete(5), complete(4)));
    CHECK_FALSE(contains_subgraph(complete_bipartite(3, 3), complete(3)));
    // subdividing K4 keeps the topological K4 but not the subgraph
    Graph sub(7);
    // K4 on {0,1,2,3} with edge 0-1 replaced by path 0-4-5-6-1
    sub.add_edge(0, 4);
    sub.add_edge(4, 5);
    sub.add_edge(5, 6);
    sub.add_edge(6, 1);
    sub.add_edge(0, 2);
    sub.add_edge(0, 3);
    sub.add_edge(1, 2);
    sub.add_edge(1, 3);
    sub.add_edge(2, 3);
    CHECK_FALSE(contains_subgraph(sub, complete(4)));
    CHECK(contains_subdivision(sub, complete(4)));
    CHECK_FALSE(contains_subdivision(sub, complete(5)));
    // K_{1,k} shortcut: a degree-4 vertex suffices
    CHECK(contains_subdivision(complete(5), complete_bipartite(1, 4)));
    CHECK_FALSE(contains_subdivision(cycle(8), complete_bipartite(1, 3)));
}

TEST_CASE("degree helpers") {
    Graph g = complete_multipartite({1, 2, 4});
    auto d = g.degree_sequence();
    CHECK(d == std::vector<int>{6, 5, 5, 3, 3, 3, 3});
    auto top = top_degrees(g, 2);
    CHECK(top == std::vector<int>{6, 5});
    CHECK(max_k2m_subgraph(complete_bipartite(4, 7)) == 7);
    CHECK(max_clique(complete(6)) == 6);
    CHECK(max_clique(complete_bipartite(3, 3)) == 2);
    auto m = max_k12m_subgraph(complete_multipartite({1, 2, 4}), 4);
    REQUIRE(m.has_value());
    CHECK(*m == 4);
    CHECK_FALSE(max_k12m_subgraph(complete_bipartite(5, 5), 4).has_value());
}

TEST_CASE("json round trip and dot output") {
    Graph g = complete_bipartite(2, 3);
    Graph h = graph_from_json(to_json(g));
    CHECK(h.n() == g.n());
    CHECK(h.edges() == g.edges());
    std::string dot = to_dot(g);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}
