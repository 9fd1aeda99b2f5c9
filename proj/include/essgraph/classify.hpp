#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "essgraph/embed.hpp"
#include "essgraph/ring.hpp"

namespace essgraph::classify {

struct CatalogEntry {
    std::string id;  // canonical spec string
    std::vector<std::string> aliases;
    int order = 0;
    bool local = false, field = false, reduced = false;
    RingSpec spec;
};

/// Every local ring named anywhere in the classification theorems, plus the
/// small fields needed as product factors. Built (and axiom-checked) once.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);  // id or alias

struct Candidate {
    std::string name;          // "Z2 x Z4" style; bare entry id for locals
    long order = 0;
    std::vector<int> factors;  // catalog indices; size 1 = the local itself
    RingSpec spec() const;
};

/// Products (up to factor reordering) of catalog local rings with >= 2
/// factors and total order <= max_order, plus the catalog locals themselves.
std::vector<Candidate> enumerate_products(int max_order);

struct RingVerdict {
    std::string spec;
    std::string verdict;   // VERIFIED | CONSISTENT | MISMATCH | FLAG
    std::string property;  // e.g. "genus(L(EG)) == 1"
    std::string value;     // computed value, interval or bool
    bool expected = false; // membership in the published list
    std::string note;
};

struct TheoremReport {
    std::string theorem;
    int max_order = 0;
    std::uint64_t budget_nodes = 0;
    std::string scope_note;
    std::vector<RingVerdict> rings;
    std::vector<std::string> flags;

    std::string overall() const;  // worst verdict across rings
    std::string to_json() const;
};

/// Mechanically re-check one classification theorem over the candidate scope.
/// jobs > 1 fans the per-ring work out to worker threads; the report order is
/// fixed regardless.
TheoremReport verify_theorem(const std::string& id, int max_order,
                             SearchBudget budget, int jobs = 1);
const std::vector<std::string>& theorem_ids();

/// Per-lemma pass/fail for the structural facts applicable to r:
/// EG = Gamma when reduced, nilpotents universal and a clique otherwise,
/// EG complete when local, and Gamma always a subgraph of EG.
std::vector<std::pair<std::string, bool>> check_structural_lemmas(const FiniteRing& r);

}  // namespace essgraph::classify
