// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "essgraph/bounds.hpp"
#include "essgraph/classify.hpp"

using namespace essgraph;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
bool g_ok = true;

#define REQUIRE(cond)                                                         \
    do {                                                                      \
        if (!(cond)) {                                                        \
            g_ok = false;                                                     \
            std::cout << "    failed: " << #cond << " (line " << __LINE__     \
                      << ")\n";                                               \
        }                                                                     \
    } while (0)

void criterion(int n, const std::string& what, double limit_s,
               const std::function<void()>& body) {
    g_ok = true;
    auto t0 = Clock::now();
    try {
        body();
    } catch (const std::exception& ex) {
        g_ok = false;
        std::cout << "    exception: " << ex.what() << "\n";
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) {
        g_ok = false;
        std::cout << "    over time budget: " << secs << "s > " << limit_s << "s\n";
    }
    if (!g_ok) ++g_failures;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    std::cout << "criterion " << n << " (" << what << "): "
              << (g_ok ? "pass" : "FAIL") << "  [" << buf << "]\n";
}

const std::vector<std::string>& table1_locals() {
    static const std::vector<std::string> v = {
        "Z4", "Z2[x]/(x^2)", "Z9", "Z3[x]/(x^2)", "Z8", "Z2[x]/(x^3)",
        "Z4[x]/(x^3, x^2-2)", "Z4[x]/(2x, x^2)", "GF(4)[x]/(x^2)",
        "Z4[x]/(x^2+x+1)", "Z2[x,y]/(x^2, xy, y^2)", "Z25", "Z5[x]/(x^2)",
        "Z49", "Z7[x]/(x^2)"};
    return v;
}

int table1_clique(const std::string& id) {
    if (id == "Z4" || id == "Z2[x]/(x^2)") return 1;
    if (id == "Z9" || id == "Z3[x]/(x^2)") return 2;
    if (id == "Z25" || id == "Z5[x]/(x^2)") return 4;
    if (id == "Z49" || id == "Z7[x]/(x^2)") return 6;
    return 3;  // the order-8/16 rings with three nonzero zero-divisors
}

Graph six_vertex_graph(unsigned mask) {
    Graph g(6);
    int bit = 0;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

std::set<std::string> positives(const classify::TheoremReport& rep,
                                const std::string& truthy) {
    std::set<std::string> out;
    for (const auto& v : rep.rings)
        if (v.value == truthy) out.insert(v.spec);
    return out;
}

std::set<std::string> to_set(std::initializer_list<const char*> xs) {
    std::set<std::string> out;
    for (const char* x : xs) out.insert(x);
    return out;
}

}  // namespace

int main() {
    const SearchBudget kBudget{};  // default per-graph node budget

    criterion(1, "ring axioms on the catalog", 10.0, [] {
        int checked = 0;
        for (const auto& e : classify::catalog()) {
            if (e.order > 81) continue;
            FiniteRing r = build_ring(e.spec);
            validate_ring(r);
            ++checked;
        }
        REQUIRE(checked >= 25);
    });

    criterion(2, "essentiality vs all-ideals oracle", 0, [] {
        for (const auto& e : classify::catalog()) {
            if (e.order > 64) continue;
            FiniteRing r = build_ring(e.spec);
            auto ideals = enumerate_ideals(r);
            for (const auto& i : ideals) {
                bool oracle = true;
                for (const auto& j : ideals) {
                    if (j.size() <= 1) continue;
                    bool meets = false;
                    for (int a = 1; a < r.order && !meets; ++a)
                        meets = i.contains(a) && j.contains(a);
                    if (!meets) oracle = false;
                }
                REQUIRE(is_essential(r, i) == oracle);
            }
        }
    });

    criterion(3, "structural lemmas", 0, [] {
        // per-ring lemmas over catalog entries and small products
        std::vector<std::string> specs;
        for (const auto& e : classify::catalog()) specs.push_back(e.id);
        for (const char* s : {"Z2 x Z2", "Z2 x Z4", "Z2 x Z9", "Z3 x GF(4)",
                              "Z2 x Z2 x Z2", "GF(4) x Z4"})
            specs.push_back(s);
        for (const auto& s : specs) {
            FiniteRing r = build_ring(parse_spec(s));
            for (const auto& [name, ok] : classify::check_structural_lemmas(r)) {
                if (!ok) std::cout << "    lemma fails on " << s << ": " << name << "\n";
                REQUIRE(ok);
            }
        }
        // exact clique sizes for the local table
        for (const auto& id : table1_locals()) {
            FiniteRing r = build_ring(parse_spec(id));
            Graph eg = essential_graph(r);
            int n = table1_clique(id);
            REQUIRE(eg.n() == n);
            REQUIRE(eg.edge_count() == n * (n - 1) / 2);
        }
        // EG(F_n x F_m) = K_{n-1,m-1} for all catalog field pairs of order <= 81
        const auto& cat = classify::catalog();
        int pairs = 0;
        for (const auto& a : cat)
            for (const auto& b : cat) {
                if (!a.field || !b.field || a.order > b.order) continue;
                if (static_cast<long>(a.order) * b.order > 81) continue;
                RingSpec prod;
                prod.kind = RingSpec::Kind::Product;
                prod.factors = {a.spec, b.spec};
                Graph eg = essential_graph(build_ring(prod));
                auto parts = recognize_complete_bipartite(eg);
                if (a.order == 2 && b.order == 2) {
                    REQUIRE(eg.n() == 2);
                    REQUIRE(eg.edge_count() == 1);
                } else {
                    REQUIRE(parts.has_value());
                    if (parts) {
                        REQUIRE(parts->first == a.order - 1);
                        REQUIRE(parts->second == b.order - 1);
                    }
                }
                ++pairs;
            }
        REQUIRE(pairs >= 15);
    });

    criterion(4, "planarity theorems", 60.0, [&] {
        auto pegl = classify::verify_theorem("pegl", 64, kBudget, 4);
        REQUIRE(pegl.overall() == "VERIFIED");
        auto pos = positives(pegl, "true");
        auto want = to_set({"Z4", "Z2[x]/(x^2)", "Z9", "Z3[x]/(x^2)", "Z8",
                            "Z2[x]/(x^3)", "Z25", "Z5[x]/(x^2)",
                            "Z4[x]/(x^3, x^2-2)", "Z4[x]/(2x, x^2)",
                            "Z2[x,y]/(x^2, xy, y^2)", "Z4[x]/(x^2+x+1)",
                            "GF(4)[x]/(x^2)"});  // incl. the flagged omission
        REQUIRE(pos == want);
        REQUIRE(!pegl.flags.empty());

        auto pegnl = classify::verify_theorem("pegnl", 64, kBudget, 4);
        REQUIRE(pegnl.overall() == "VERIFIED");
        auto npos = positives(pegnl, "true");
        REQUIRE(npos == to_set({"Z2 x Z2", "Z2 x Z3", "Z3 x Z3", "Z2 x GF(4)",
                                "Z3 x GF(4)", "Z2 x Z5", "Z2 x Z2 x Z2"}));

        auto cor = classify::verify_theorem("planar-nonreduced", 64, kBudget, 4);
        REQUIRE(cor.overall() == "VERIFIED");
    });

    criterion(5, "outerplanarity theorems + exhaustive apex test", 300.0, [&] {
        auto oegl = classify::verify_theorem("oegl", 64, kBudget, 4);
        REQUIRE(oegl.overall() == "VERIFIED");
        REQUIRE(positives(oegl, "true").size() == 11);

        auto zdo = classify::verify_theorem("gamma-outerplanar", 64, kBudget, 4);
        REQUIRE(zdo.overall() == "VERIFIED");
        REQUIRE(positives(zdo, "true") ==
                to_set({"Z2 x Z2", "Z2 x Z3", "Z3 x Z3", "Z2 x GF(4)", "Z2 x Z4",
                        "Z2 x Z2[x]/(x^2)", "Z2 x Z2 x Z2"}));

        auto oegnl = classify::verify_theorem("oegnl", 64, kBudget, 4);
        REQUIRE(oegnl.overall() == "VERIFIED");
        REQUIRE(positives(oegnl, "true") ==
                to_set({"Z2 x Z2", "Z2 x Z3", "Z3 x Z3", "Z2 x GF(4)",
                        "Z2 x Z2 x Z2"}));

        Graph k23 = complete_bipartite(2, 3);
        Graph k14 = complete_bipartite(1, 4);
        Graph p3k1 = join(path(3), complete(1));
        int bad = 0;
        for (unsigned mask = 0; mask < (1u << 15); ++mask) {
            Graph g = six_vertex_graph(mask);
            bool via_line = is_outerplanar(line_graph(g));
            bool via_forbidden = !contains_subdivision(g, k23) &&
                                 !contains_subdivision(g, k14) &&
                                 !contains_subdivision(g, p3k1);
            if (via_line != via_forbidden) ++bad;
        }
        REQUIRE(bad == 0);
    });

    criterion(6, "planar line-graph forbidden-subdivision oracle", 0, [] {
        Graph k33 = complete_bipartite(3, 3);
        Graph k15 = complete_bipartite(1, 5);
        Graph p4k1 = join(path(4), complete(1));
        Graph k2e3 = join(complete(2), empty_graph(3));
        int bad = 0;
        for (unsigned mask = 0; mask < (1u << 15); ++mask) {
            Graph g = six_vertex_graph(mask);
            bool via_line = is_planar(line_graph(g)).planar;
            bool via_forbidden = !contains_subdivision(g, k33) &&
                                 !contains_subdivision(g, k15) &&
                                 !contains_subdivision(g, p4k1) &&
                                 !contains_subdivision(g, k2e3);
            if (via_line != via_forbidden) ++bad;
        }
        REQUIRE(bad == 0);
    });

    criterion(7, "surface formulas vs the embedder", 1800.0, [&] {
        for (int m = 3; m <= 7; ++m) {
            auto r = min_genus(complete(m), kBudget);
            REQUIRE(r.exact());
            REQUIRE(r.lower == (m < 5 ? 0 : bounds::genus_complete(m)));
        }
        for (int m = 2; m <= 3; ++m)
            for (int n = m; n <= 6 && m + n <= 9; ++n) {
                auto r = min_genus(complete_bipartite(m, n), kBudget);
                REQUIRE(r.exact());
                REQUIRE(r.lower == bounds::genus_bipartite(m, n));
            }
        for (int m = 3; m <= 6; ++m) {
            auto r = min_crosscap(complete(m), kBudget);
            REQUIRE(r.exact());
            REQUIRE(r.lower == (m < 5 ? 0 : bounds::crosscap_complete(m)));
        }
        for (int m = 2; m <= 3; ++m)
            for (int n = m; m + n <= 8; ++n) {
                auto r = min_crosscap(complete_bipartite(m, n), kBudget);
                REQUIRE(r.exact());
                REQUIRE(r.lower == bounds::crosscap_bipartite(m, n));
            }
        auto l24 = min_genus(line_graph(complete_bipartite(2, 4)), kBudget);
        REQUIRE(l24.exact());
        REQUIRE(l24.lower == 1);
        auto l25 = min_genus(line_graph(complete_bipartite(2, 5)), kBudget);
        REQUIRE(l25.exact());
        REQUIRE(l25.lower == 2);
    });

    criterion(8, "genus and crosscap of L(EG(Z2 x Z4))", 60.0, [&] {
        Graph eg = essential_graph(build_ring(parse_spec("Z2 x Z4")));
        Graph l = line_graph(eg);
        auto g = min_genus(l, kBudget);
        REQUIRE(g.exact());
        REQUIRE(g.lower == 1);
        REQUIRE(g.certificate.has_value());
        if (g.certificate) REQUIRE(euler_genus_of_scheme(l, *g.certificate) == 2);
        auto c = min_crosscap(l, kBudget);
        REQUIRE(c.exact());
        REQUIRE(c.lower == 1);
        REQUIRE(c.certificate.has_value());
        if (c.certificate) {
            REQUIRE(euler_genus_of_scheme(l, *c.certificate) == 1);
            REQUIRE(!c.certificate->orientable());
        }
    });

    criterion(9, "genus-1 classification", 0, [&] {
        auto rep = classify::verify_theorem("g1leg", 64, kBudget, 4);
        REQUIRE(rep.overall() == "VERIFIED");
        auto pos = positives(rep, "1");
        REQUIRE(pos == to_set({"Z2 x Z4", "Z2 x Z2[x]/(x^2)", "GF(4) x GF(4)",
                               "Z3 x Z5", "Z2 x Z7", "Z2 x GF(8)"}));
    });

    criterion(10, "genus-2 / crosscap classifications", 0, [&] {
        for (const char* id : {"g2leg", "c1leg", "c2leg"}) {
            auto rep = classify::verify_theorem(id, 64, kBudget, 4);
            std::string overall = rep.overall();
            REQUIRE((overall == "VERIFIED" || overall == "CONSISTENT"));
            for (const auto& v : rep.rings) REQUIRE(v.verdict != "MISMATCH");
        }
        auto g2 = classify::verify_theorem("g2leg", 64, kBudget, 4);
        REQUIRE(!g2.flags.empty());
        bool z2z9_flag = false, z2f9_seen = false;
        for (const auto& v : g2.rings) {
            if (v.spec == "Z2 x Z9") z2z9_flag = v.verdict == "FLAG";
            if (v.spec == "Z2 x GF(9)") z2f9_seen = v.verdict == "FLAG";
        }
        REQUIRE(z2z9_flag);
        REQUIRE(z2f9_seen);

        // the strict K_{1,2,m} rule reproduces the Z3 x Z4 bound
        Graph eg = essential_graph(build_ring(parse_spec("Z3 x Z4")));
        auto glo = bounds::k12m_rule(eg, true);
        auto clo = bounds::k12m_rule(eg, false);
        REQUIRE((glo && *glo == 3));
        REQUIRE((clo && *clo == 3));

        for (const char* id : {"genus-local", "crosscap-local"}) {
            auto rep = classify::verify_theorem(id, 121, kBudget, 4);
            REQUIRE(rep.overall() == "VERIFIED");
        }
    });

    criterion(11, "certificates re-validate", 0, [&] {
        struct Case {
            Graph g;
            int genus;
        };
        std::vector<Case> cases;
        cases.push_back({complete(5), 1});
        cases.push_back({complete(6), 1});
        cases.push_back({complete(7), 1});
        cases.push_back({complete_bipartite(3, 3), 1});
        cases.push_back({line_graph(complete_bipartite(2, 4)), 1});
        for (const auto& c : cases) {
            auto r = min_genus(c.g, kBudget);
            REQUIRE(r.exact());
            REQUIRE(r.lower == c.genus);
            REQUIRE(r.certificate.has_value());
            if (!r.certificate) continue;
            int f = trace_faces(c.g, *r.certificate);
            REQUIRE(c.g.n() - c.g.edge_count() + f == 2 - 2 * c.genus);
            REQUIRE(r.certificate->orientable());
        }
        auto cc = min_crosscap(complete(6), kBudget);
        REQUIRE(cc.exact());
        REQUIRE(cc.certificate.has_value());
        if (cc.certificate)
            REQUIRE(euler_genus_of_scheme(complete(6), *cc.certificate) == cc.lower);
    });

    criterion(12, "report determinism across --jobs", 0, [&] {
        for (const char* id : {"pegnl", "gamma-outerplanar"}) {
            auto a = classify::verify_theorem(id, 64, kBudget, 1);
            auto b = classify::verify_theorem(id, 64, kBudget, 8);
            REQUIRE(a.to_json() == b.to_json());
        }
    });

    std::cout << (g_failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << " ("
              << (12 - g_failures) << "/12)\n";
    return g_failures ? 1 : 0;
}
