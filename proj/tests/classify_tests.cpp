#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "essgraph/classify.hpp"

using namespace essgraph;
using namespace essgraph::classify;

TEST_CASE("catalog entries build with consistent tags") {
    const auto& cat = catalog();
    CHECK(cat.size() >= 25);
    for (const auto& e : cat) {
        CHECK(e.local);
        CHECK(e.order >= 2);
        if (e.field) CHECK(e.reduced);
    }
    const auto* z49 = catalog_find("Z49");
    REQUIRE(z49 != nullptr);
    CHECK(z49->order == 49);
    CHECK_FALSE(z49->field);
    const auto* gf4 = catalog_find("GF(4)");
    REQUIRE(gf4 != nullptr);
    CHECK(gf4->field);
    // alias lookup collapses the duplicate ring names
    const auto* alias = catalog_find("F3[x]/(x^2)");
    REQUIRE(alias != nullptr);
    CHECK(alias->id == "Z3[x]/(x^2)");
    CHECK(catalog_find("Z6") == nullptr);
}

TEST_CASE("product enumeration respects order and dedupes") {
    auto cands = enumerate_products(8);
    std::set<std::string> names;
    for (const auto& c : cands) names.insert(c.name);
    CHECK(names.count("Z2 x Z4"));
    CHECK(names.count("Z2 x Z2 x Z2"));
    CHECK(names.count("Z2 x GF(4)"));
    CHECK_FALSE(names.count("Z3 x Z4"));       // order 12
    CHECK_FALSE(names.count("GF(4) x Z2"));    // canonical factor order
    CHECK(names.size() == cands.size());       // no duplicates
    for (const auto& c : cands) CHECK(c.order <= 8);
    CHECK_THROWS(enumerate_products(100000));
}

TEST_CASE("structural lemma checks") {
    for (const char* spec : {"Z2 x Z3", "Z2 x Z4", "Z8", "Z9", "Z2 x Z2 x Z2",
                             "GF(4)[x]/(x^2)"}) {
        auto r = build_ring(parse_spec(spec));
        for (const auto& [name, ok] : check_structural_lemmas(r)) {
            INFO(spec << ": " << name);
            CHECK(ok);
        }
    }
}

TEST_CASE("verdict vocabulary and report shape") {
    auto rep = verify_theorem("pegnl", 16, SearchBudget{1000});
    CHECK(rep.theorem == "pegnl");
    CHECK(rep.overall() == "VERIFIED");
    std::set<std::string> positives;
    for (const auto& v : rep.rings) {
        CHECK((v.verdict == "VERIFIED" || v.verdict == "CONSISTENT" ||
               v.verdict == "FLAG"));
        if (v.value == "true") positives.insert(v.spec);
    }
    // every in-scope listed ring of order <= 16 shows up planar
    for (const char* n : {"Z2 x Z2", "Z2 x Z3", "Z3 x Z3", "Z2 x GF(4)",
                          "Z3 x GF(4)", "Z2 x Z5", "Z2 x Z2 x Z2"})
        CHECK(positives.count(n));
    CHECK(positives.size() == 7);
    std::string j = rep.to_json();
    CHECK(j.find("\"theorem\": \"pegnl\"") != std::string::npos);
    CHECK(j.find("value_or_interval") != std::string::npos);
    CHECK_THROWS(verify_theorem("no-such-theorem", 16, SearchBudget{1}));
}

TEST_CASE("local planarity verifier flags the omitted order-16 ring") {
    auto rep = verify_theorem("pegl", 64, SearchBudget{1000});
    CHECK(rep.overall() == "VERIFIED");
    bool flagged = false;
    for (const auto& v : rep.rings)
        if (v.spec == "GF(4)[x]/(x^2)") {
            CHECK(v.verdict == "FLAG");
            CHECK(v.value == "true");
            flagged = true;
        }
    CHECK(flagged);
    CHECK_FALSE(rep.flags.empty());
}

TEST_CASE("theorem id registry") {
    const auto& ids = theorem_ids();
    CHECK(ids.size() == 14);
    for (const char* id : {"pegl", "pegnl", "oegl", "oegnl", "gamma-outerplanar",
                           "genus-local", "g1leg", "g2leg", "crosscap-local",
                           "c1leg", "c2leg"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
}
