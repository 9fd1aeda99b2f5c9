#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "essgraph/embed.hpp"

using namespace essgraph;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);
    }
    return g;
}

void check_exact(const Graph& g, const GenusResult& r, int want, bool orientable) {
    REQUIRE(r.exact());
    CHECK(r.lower == want);
    REQUIRE(r.certificate.has_value());
    int eg = euler_genus_of_scheme(g, *r.certificate);
    if (orientable) {
        CHECK(r.certificate->orientable());
        CHECK(eg == 2 * want);
    } else {
        CHECK(eg == want);
        if (want > 0) CHECK_FALSE(r.certificate->orientable());
    }
}

}  // namespace

TEST_CASE("face tracing on fixed schemes") {
    // planar K4 with a rotation that closes 4 triangular faces
    Graph k4 = complete(4);
    EmbeddingScheme s;
    s.rotation = {{1, 2, 3}, {2, 0, 3}, {0, 1, 3}, {0, 2, 1}};
    s.sign.assign(6, 1);
    CHECK(trace_faces(k4, s) == 4);
    CHECK(euler_genus_of_scheme(k4, s) == 0);
    // canonical ascending rotations embed K4 on the torus instead
    EmbeddingScheme t;
    t.rotation = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    t.sign.assign(6, 1);
    CHECK(trace_faces(k4, t) == 2);
    CHECK(euler_genus_of_scheme(k4, t) == 2);
}

TEST_CASE("planarity decisions") {
    CHECK(is_planar(complete(4)).planar);
    CHECK(is_planar(complete_bipartite(2, 6)).planar);
    CHECK_FALSE(is_planar(complete(5)).planar);
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)).planar);
    CHECK_FALSE(is_planar(petersen()).planar);
    CHECK(is_planar(line_graph(complete(4))).planar);  // octahedron
    CHECK_FALSE(is_planar(line_graph(complete(5))).planar);

    auto pr = is_planar(complete(4));
    REQUIRE(pr.embedding.has_value());
    CHECK(euler_genus_of_scheme(complete(4), *pr.embedding) == 0);
}

TEST_CASE("planarity handles cut vertices and disconnection") {
    // two K4 blocks sharing a vertex, plus an isolated K3,3-free component
    Graph g(8);
    auto K4at = [&](int a, int b, int c, int d) {
        int vs[4] = {a, b, c, d};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) g.add_edge(vs[i], vs[j]);
    };
    K4at(0, 1, 2, 3);
    K4at(3, 4, 5, 6);
    g.add_edge(6, 7);
    auto pr = is_planar(g);
    CHECK(pr.planar);
    REQUIRE(pr.embedding.has_value());
}

TEST_CASE("kuratowski witnesses") {
    CHECK(kuratowski_witness(complete(5)) == "K5");
    CHECK(kuratowski_witness(complete_bipartite(3, 3)) == "K3,3");
    CHECK(kuratowski_witness(petersen()) == "K3,3");
    CHECK(kuratowski_witness(complete(4)).empty());
}

TEST_CASE("outerplanarity") {
    CHECK(is_outerplanar(cycle(6)));
    CHECK(is_outerplanar(path(5)));
    CHECK_FALSE(is_outerplanar(complete(4)));
    CHECK_FALSE(is_outerplanar(complete_bipartite(2, 3)));
    CHECK(is_outerplanar(line_graph(complete(3))));
}

TEST_CASE("euler counting floor") {
    CHECK(euler_lower_bound(complete(7), true) == 1);
    CHECK(euler_lower_bound(complete(7), false) == 2);
    CHECK(euler_lower_bound(complete_bipartite(3, 3), true) == 1);  // triangle-free
    CHECK(euler_lower_bound(complete(4), true) == 0);
}

TEST_CASE("orientable genus by search") {
    SearchBudget b;
    check_exact(complete(5), min_genus(complete(5), b), 1, true);
    check_exact(complete(6), min_genus(complete(6), b), 1, true);
    check_exact(complete_bipartite(3, 3), min_genus(complete_bipartite(3, 3), b), 1, true);
    check_exact(complete_bipartite(3, 5), min_genus(complete_bipartite(3, 5), b), 1, true);
    check_exact(complete_bipartite(4, 4), min_genus(complete_bipartite(4, 4), b), 1, true);
    check_exact(petersen(), min_genus(petersen(), b), 1, true);
    // planar input returns the planar certificate
    auto r = min_genus(complete(4), b);
    check_exact(complete(4), r, 0, true);
}

TEST_CASE("genus is additive over components") {
    Graph g = disjoint_union(complete(5), complete_bipartite(3, 3));
    auto r = min_genus(g, SearchBudget{});
    REQUIRE(r.exact());
    CHECK(r.lower == 2);
}

TEST_CASE("crosscap by search") {
    SearchBudget b;
    check_exact(complete(5), min_crosscap(complete(5), b), 1, false);
    check_exact(complete(6), min_crosscap(complete(6), b), 1, false);
    check_exact(complete_bipartite(3, 3), min_crosscap(complete_bipartite(3, 3), b), 1, false);
    check_exact(complete_bipartite(3, 4), min_crosscap(complete_bipartite(3, 4), b), 1, false);
    check_exact(complete_bipartite(3, 5), min_crosscap(complete_bipartite(3, 5), b), 2, false);
    auto r = min_crosscap(cycle(4), b);
    REQUIRE(r.exact());
    CHECK(r.lower == 0);  // planar convention
}

TEST_CASE("K7 crosscap stays an interval under a small budget") {
    auto r = min_crosscap(complete(7), SearchBudget{200'000});
    CHECK(r.lower >= 2);
    if (!r.exact()) {
        REQUIRE(r.upper.has_value());
        CHECK(*r.upper >= 3);
        CHECK(r.lower <= 3);
    } else {
        CHECK(r.lower == 3);
    }
}

TEST_CASE("budget exhaustion yields a certified interval") {
    auto r = min_genus(complete(6), SearchBudget{10});
    CHECK(r.lower >= 1);
    REQUIRE(r.upper.has_value());
    CHECK(r.lower <= *r.upper);
    REQUIRE(r.certificate.has_value());
    CHECK(euler_genus_of_scheme(complete(6), *r.certificate) == 2 * *r.upper);
}
