#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "essgraph/graph.hpp"

namespace essgraph {

/// Rotation-plus-signature description of an embedding.
/// rotation[v] is the cyclic order of neighbors around v; sign is per edge in
/// the canonical Graph::edges() order. Signs on a spanning tree are +1; the
/// scheme is nonorientable iff some cycle has negative sign product.
struct EmbeddingScheme {
    std::vector<std::vector<int>> rotation;
    std::vector<int8_t> sign;

    bool orientable() const;  // all cycles positive
};

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
};

/// Exact value (lower == upper) or certified interval for genus / crosscap.
struct GenusResult {
    int lower = 0;
    std::optional<int> upper;  // nullopt: no embedding found within budget
    std::optional<EmbeddingScheme> certificate;
    std::vector<std::string> lower_rules;
    std::uint64_t nodes_explored = 0;

    bool exact() const { return upper && *upper == lower; }
    int value() const { return lower; }
};

/// Number of face orbits of the scheme on G (G connected, scheme valid).
int trace_faces(const Graph& g, const EmbeddingScheme& scheme);

/// Euler genus 2 - V + E - F of a scheme on connected G.
int euler_genus_of_scheme(const Graph& g, const EmbeddingScheme& scheme);

struct PlanarityResult {
    bool planar = false;
    std::optional<EmbeddingScheme> embedding;  // when planar
};

/// Polynomial-time decision (Demoucron face embedding per biconnected
/// component); certificate is a planar rotation system.
PlanarityResult is_planar(const Graph& g);

/// "K5" or "K3,3" for a nonplanar graph (subdivision search), "" if planar.
std::string kuratowski_witness(const Graph& g);

/// G is outerplanar iff G joined with one apex vertex is planar.
bool is_outerplanar(const Graph& g);

/// Euler/girth counting floor; G connected, |V| >= 3. Never negative.
int euler_lower_bound(const Graph& g, bool orientable);

/// Minimum orientable genus by branch and bound over rotation systems.
/// known_lower seeds the pruning floor (from the bounds module).
GenusResult min_genus(const Graph& g, SearchBudget budget, int known_lower = 0);

/// Minimum nonorientable genus over embedding schemes with a negative cycle.
GenusResult min_crosscap(const Graph& g, SearchBudget budget, int known_lower = 0);

std::string scheme_to_json(const Graph& g, const EmbeddingScheme& scheme);

}  // namespace essgraph
