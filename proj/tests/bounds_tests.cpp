#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "essgraph/bounds.hpp"

using namespace essgraph;
using namespace essgraph::bounds;

TEST_CASE("complete graph surface formulas") {
    CHECK(genus_complete(5) == 1);
    CHECK(genus_complete(7) == 1);
    CHECK(genus_complete(8) == 2);
    CHECK(genus_complete(12) == 6);
    CHECK(crosscap_complete(5) == 1);
    CHECK(crosscap_complete(6) == 1);
    CHECK(crosscap_complete(7) == 3);  // the exceptional case
    CHECK(crosscap_complete(8) == 4);
    CHECK_THROWS(genus_complete(2));
}

TEST_CASE("complete bipartite surface formulas") {
    CHECK(genus_bipartite(3, 3) == 1);
    CHECK(genus_bipartite(4, 4) == 1);
    CHECK(genus_bipartite(3, 6) == 1);
    CHECK(genus_bipartite(4, 5) == 2);
    CHECK(crosscap_bipartite(3, 3) == 1);
    CHECK(crosscap_bipartite(3, 4) == 1);
    CHECK(crosscap_bipartite(3, 5) == 2);
    CHECK(crosscap_bipartite(2, 9) == 0);
}

TEST_CASE("line graphs of complete graphs") {
    CHECK(line_complete_genus_bound(4).value == 0);
    CHECK(line_complete_genus_bound(4).exact);
    auto b5 = line_complete_genus_bound(5);
    CHECK(b5.value == 1);
    CHECK_FALSE(b5.exact);  // 5 is outside the equality congruence classes
    auto b6 = line_complete_genus_bound(6);
    CHECK(b6.value == 4);
    CHECK_FALSE(b6.exact);
    auto b7 = line_complete_genus_bound(7);
    CHECK(b7.value == 8);
    CHECK(b7.exact);
    auto c6 = line_complete_crosscap_bound(6);
    CHECK(c6.value == 7);
    CHECK(c6.exact);
    auto c7 = line_complete_crosscap_bound(7);
    CHECK(c7.value == 16);
    CHECK_FALSE(c7.exact);  // m = 7 is excluded
}

TEST_CASE("line graphs of K_{2,m}") {
    CHECK(line_bipartite2_genus_bound(3).value == 0);
    auto g4 = line_bipartite2_genus_bound(4);
    CHECK(g4.value == 1);  // small-case table overrides the floor formula
    CHECK(g4.exact);
    auto g5 = line_bipartite2_genus_bound(5);
    CHECK(g5.value == 2);
    CHECK(g5.exact);
    auto g6 = line_bipartite2_genus_bound(6);
    CHECK(g6.value == 2);
    CHECK(g6.exact);
    auto g7 = line_bipartite2_genus_bound(7);
    CHECK(g7.value == 4);
    CHECK(g7.exact);
    auto c4 = line_bipartite2_crosscap_bound(4);
    CHECK(c4.value == 2);
    CHECK(c4.exact);
    auto c5 = line_bipartite2_crosscap_bound(5);
    CHECK(c5.value == 2);
    CHECK(c5.exact);
    auto c6 = line_bipartite2_crosscap_bound(6);
    CHECK(c6.value == 4);
    CHECK_FALSE(c6.exact);  // m = 6 excluded
    // K_{1,1,m} reduces to K_{2,m+1}
    CHECK(line_K11m_genus(4).value == line_bipartite2_genus_bound(5).value);
}

TEST_CASE("small line-graph fixtures for K_{3,m}") {
    CHECK(small_line_bipartite_exact(3, 4, true) == 2);
    CHECK_FALSE(small_line_bipartite_exact(3, 4, false).has_value());
    CHECK(small_line_bipartite_lower(3, 4, false) == 3);
    CHECK(small_line_bipartite_lower(3, 5, true) == 3);
    CHECK(small_line_bipartite_lower(3, 5, false) == 3);
    CHECK(small_line_bipartite_exact(2, 5, false) == 2);
}

TEST_CASE("degree-pair and three-vertex lower bounds") {
    Graph g = complete_multipartite({1, 2, 4});  // degrees 6,5,5,...
    CHECK(degree_pair_lower(g, true) == 2);   // gamma(K6) + gamma(K5)
    CHECK(degree_pair_lower(g, false) == 2);  // crosscap(K6) + crosscap(K5)
    Graph h = complete(8);
    CHECK(degree_pair_lower(h, true) == 2 * genus_complete(7));
    // the -1 adjustment fires when a top degree is exactly 7
    CHECK(degree_pair_lower(h, false) == 2 * crosscap_complete(7) - 1);
    auto tv = three_vertex_lower(complete(8));
    REQUIRE(tv.has_value());
    CHECK(*tv == 3);
    CHECK_FALSE(three_vertex_lower(complete_bipartite(2, 9)).has_value());
}

TEST_CASE("strict K_{1,2,m} containment rule") {
    Graph g = complete_multipartite({1, 2, 4});
    auto lo = k12m_rule(g, true);
    REQUIRE(lo.has_value());
    CHECK(*lo == 3);  // one more than the exact K_{2,5} line-graph value
    auto lc = k12m_rule(g, false);
    REQUIRE(lc.has_value());
    CHECK(*lc == 3);
    CHECK_FALSE(k12m_rule(complete_bipartite(4, 4), true).has_value());
}

TEST_CASE("combined intervals") {
    SearchBudget b;
    auto k7 = combined_interval(complete(7), b, false);
    REQUIRE(k7.exact());
    CHECK(k7.lower == 3);  // formula closes without search
    auto k5 = combined_interval(complete(5), b, true);
    REQUIRE(k5.exact());
    CHECK(k5.lower == 1);
    auto c4 = combined_interval(cycle(4), b, false);
    REQUIRE(c4.exact());
    CHECK(c4.lower == 0);

    // L(K_{2,4}) with its base graph attached: table value 1, exact
    Graph base = complete_bipartite(2, 4);
    Graph l = line_graph(base);
    auto r = combined_interval(l, b, true, &base);
    REQUIRE(r.exact());
    CHECK(r.lower == 1);

    // big graphs stay one-sided instead of searching
    Graph big = complete(12);
    auto big_r = combined_interval(line_graph(big), SearchBudget{1}, true, &big);
    CHECK(big_r.lower >= line_complete_genus_bound(12).value);
}

TEST_CASE("bound report serialization") {
    SearchBudget b;
    auto r = combined_interval(complete(5), b, true);
    std::string j = bound_report_json(r, true);
    CHECK(j.find("\"surface\": \"orientable\"") != std::string::npos);
    CHECK(j.find("\"exact\": true") != std::string::npos);
    CHECK(j.find("lower_rules") != std::string::npos);
}
