#pragma once

#include <optional>
#include <string>

#include "essgraph/embed.hpp"
#include "essgraph/graph.hpp"

namespace essgraph::bounds {

/// Genus of K_m: ceil((m-4)(m-3)/12). Throws for m < 3.
int genus_complete(int m);
/// Crosscap of K_m: ceil((m-4)(m-3)/6), except the value 3 at m = 7.
int crosscap_complete(int m);
/// Genus of K_{n,m}: ceil((n-2)(m-2)/4). Throws for n or m < 2.
int genus_bipartite(int n, int m);
/// Crosscap of K_{n,m}: ceil((n-2)(m-2)/2).
int crosscap_bipartite(int n, int m);

/// A lower bound together with a flag telling whether it is attained.
struct Bound {
    int value = 0;
    bool exact = false;
};

/// gamma(L(K_m)) >= (m-4)(m-3)(m+1)/12; equality for m = 0,3,4,7 (mod 12).
Bound line_complete_genus_bound(int m);
/// crosscap analogue over 6; equality for m = 0,1,3,4 (mod 6), m != 7.
Bound line_complete_crosscap_bound(int m);
/// gamma(L(K_{2,m})) >= (m-3)(m-2)/6; equality unless m = 5 or 9 (mod 12).
/// Small fixed values override the bound where they are sharper.
Bound line_bipartite2_genus_bound(int m);
/// crosscap analogue over 3; equality unless m = 6 or m = 1,4 (mod 6).
Bound line_bipartite2_crosscap_bound(int m);
/// L(K_{1,1,m}) has the same genus/crosscap as L(K_{2,m+1}).
Bound line_K11m_genus(int m);
Bound line_K11m_crosscap(int m);

/// Fixed small line-of-bipartite values; exact value or nullopt.
std::optional<int> small_line_bipartite_exact(int n, int m, bool orientable);
/// Lower bounds from the same fixed table (0 when absent).
int small_line_bipartite_lower(int n, int m, bool orientable);

/// Two largest degrees n, m of G give gamma(L(G)) >= gamma(K_n) + gamma(K_m);
/// nonorientable form adds alpha = -1 when n = 7 or m = 7 (applied once).
int degree_pair_lower(const Graph& g, bool orientable);

/// Three vertices of degrees >= 5, 5, 7 force genus and crosscap of L(G) >= 3.
std::optional<int> three_vertex_lower(const Graph& g);

/// K_{1,2,m} subgraph (m >= 4) forces a strict jump over L(K_{2,m+1}).
std::optional<int> k12m_rule(const Graph& g, bool orientable);

/// H1 planar + 3-connected with every vertex adjacent into H2 lets the caller
/// record gamma(G) > gamma(G[H2]) on both surfaces.
bool lm1_applicable(const Graph& g, const std::vector<int>& h1,
                    const std::vector<int>& h2);

/// Aggregate every applicable rule with the embedder into one result.
/// When `line_base` is given, G is treated as the line graph of it and the
/// base-level degree/subgraph rules apply.
GenusResult combined_interval(const Graph& g, SearchBudget budget, bool orientable,
                              const Graph* line_base = nullptr);

std::string bound_report_json(const GenusResult& r, bool orientable);

}  // namespace essgraph::bounds
