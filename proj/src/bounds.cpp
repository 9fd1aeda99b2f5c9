#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "essgraph/bounds.hpp"

namespace essgraph::bounds {

namespace {

int ceil_div(long num, long den) {
    if (num <= 0) return 0;
    return static_cast<int>((num + den - 1) / den);
}

// formula wrappers that treat tiny parameters as the trivial planar cases
int gc0(int d) { return d < 3 ? 0 : genus_complete(d); }
int cc0(int d) { return d < 3 ? 0 : crosscap_complete(d); }

}  // namespace

int genus_complete(int m) {
    if (m < 3) throw std::invalid_argument("genus_complete requires m >= 3");
    return ceil_div(static_cast<long>(m - 4) * (m - 3), 12);
}

int crosscap_complete(int m) {
    if (m < 3) throw std::invalid_argument("crosscap_complete requires m >= 3");
    if (m == 7) return 3;
    return ceil_div(static_cast<long>(m - 4) * (m - 3), 6);
}

int genus_bipartite(int n, int m) {
    if (n < 2 || m < 2) throw std::invalid_argument("genus_bipartite requires n, m >= 2");
    return ceil_div(static_cast<long>(n - 2) * (m - 2), 4);
}

int crosscap_bipartite(int n, int m) {
    if (n < 2 || m < 2) throw std::invalid_argument("crosscap_bipartite requires n, m >= 2");
    return ceil_div(static_cast<long>(n - 2) * (m - 2), 2);
}

Bound line_complete_genus_bound(int m) {
    if (m < 1) throw std::invalid_argument("m >= 1 required");
    if (m <= 4) return {0, true};  // L(K_m) is planar up to the octahedron
    int v = ceil_div(static_cast<long>(m - 4) * (m - 3) * (m + 1), 12);
    int r = m % 12;
    return {v, r == 0 || r == 3 || r == 4 || r == 7};
}

Bound line_complete_crosscap_bound(int m) {
    if (m < 1) throw std::invalid_argument("m >= 1 required");
    if (m <= 4) return {0, true};
    int v = ceil_div(static_cast<long>(m - 4) * (m - 3) * (m + 1), 6);
    int r = m % 6;
    return {v, (r == 0 || r == 1 || r == 3 || r == 4) && m != 7};
}

std::optional<int> small_line_bipartite_exact(int n, int m, bool orientable) {
    if (n > m) std::swap(n, m);
    if (n == 2 && m == 4) return orientable ? 1 : 2;
    if (n == 2 && m == 5) return 2;
    if (n == 3 && m == 4 && orientable) return 2;
    return std::nullopt;
}

int small_line_bipartite_lower(int n, int m, bool orientable) {
    if (auto v = small_line_bipartite_exact(n, m, orientable)) return *v;
    if (n > m) std::swap(n, m);
    if (n == 3 && m == 4 && !orientable) return 3;
    if (n == 3 && m == 5) return 3;
    return 0;
}

Bound line_bipartite2_genus_bound(int m) {
    if (m < 1) throw std::invalid_argument("m >= 1 required");
    if (m <= 3) return {0, true};
    int v = ceil_div(static_cast<long>(m - 3) * (m - 2), 6);
    int r = m % 12;
    Bound b{v, r != 5 && r != 9};
    if (auto e = small_line_bipartite_exact(2, m, true)) return {*e, true};
    b.value = std::max(b.value, small_line_bipartite_lower(2, m, true));
    return b;
}

Bound line_bipartite2_crosscap_bound(int m) {
    if (m < 1) throw std::invalid_argument("m >= 1 required");
    if (m <= 3) return {0, true};
    int v = ceil_div(static_cast<long>(m - 3) * (m - 2), 3);
    int r = m % 6;
    Bound b{v, m != 6 && r != 1 && r != 4};
    if (auto e = small_line_bipartite_exact(2, m, false)) return {*e, true};
    b.value = std::max(b.value, small_line_bipartite_lower(2, m, false));
    return b;
}

Bound line_K11m_genus(int m) { return line_bipartite2_genus_bound(m + 1); }
Bound line_K11m_crosscap(int m) { return line_bipartite2_crosscap_bound(m + 1); }

int degree_pair_lower(const Graph& g, bool orientable) {
    if (g.n() < 2) return 0;
    auto top = top_degrees(g, 2);
    int n = top[0], m = top[1];
    if (orientable) return gc0(n) + gc0(m);
    int v = cc0(n) + cc0(m);
    if (n == 7 || m == 7) v -= 1;  // alpha applied once, by the literal text
    return std::max(v, 0);
}

std::optional<int> three_vertex_lower(const Graph& g) {
    if (g.n() < 3) return std::nullopt;
    auto d = g.degree_sequence();
    if (d[0] >= 7 && d[1] >= 5 && d[2] >= 5) return 3;
    return std::nullopt;
}

std::optional<int> k12m_rule(const Graph& g, bool orientable) {
    auto m = max_k12m_subgraph(g, 4);
    if (!m) return std::nullopt;
    Bound inner = orientable ? line_bipartite2_genus_bound(*m + 1)
                             : line_bipartite2_crosscap_bound(*m + 1);
    return inner.value + 1;  // the containment is strict
}

bool lm1_applicable(const Graph& g, const std::vector<int>& h1,
                    const std::vector<int>& h2) {
    for (int a : h1)
        for (int b : h2)
            if (a == b) return false;
    Graph g1 = g.induced(h1);
    if (!g1.connected() || !g.induced(h2).connected()) return false;
    if (!is_planar(g1).planar) return false;
    // 3-connected: at least 4 vertices and no cut pair
    if (g1.n() < 4) return false;
    for (int a = 0; a < g1.n(); ++a)
        for (int b = a + 1; b < g1.n(); ++b) {
            std::vector<int> rest;
            for (int v = 0; v < g1.n(); ++v)
                if (v != a && v != b) rest.push_back(v);
            if (!g1.induced(rest).connected()) return false;
        }
    for (int a : h1) {
        bool touched = false;
        for (int b : h2)
            if (g.has_edge(a, b)) touched = true;
        if (!touched) return false;
    }
    return true;
}

GenusResult combined_interval(const Graph& g, SearchBudget budget, bool orientable,
                              const Graph* line_base) {
    GenusResult r;
    auto add_lower = [&](const std::string& name, int v) {
        if (v > r.lower) {
            r.lower = v;
            r.lower_rules = {name};
        } else if (v == r.lower && v > 0) {
            r.lower_rules.push_back(name);
        }
    };

    std::optional<int> formula_upper;
    std::string upper_source;

    if (auto parts = recognize_complete_multipartite(g)) {
        int k = static_cast<int>(parts->size());
        if (k >= 1 && parts->back() == 1) {  // all parts singletons: K_m
            int m = k;
            int v = m < 3 ? 0 : (orientable ? genus_complete(m) : crosscap_complete(m));
            formula_upper = v;
            upper_source = "complete_formula";
            add_lower("complete_formula", v);
        } else if (k == 2) {
            int n = (*parts)[0], m = (*parts)[1];
            int v = n < 2 ? 0 : (orientable ? genus_bipartite(n, m) : crosscap_bipartite(n, m));
            formula_upper = v;
            upper_source = "bipartite_formula";
            add_lower("bipartite_formula", v);
        } else if (k == 1) {
            formula_upper = 0;
            upper_source = "edgeless";
        }
    }

    if (g.connected() && g.n() >= 3) add_lower("euler_count", euler_lower_bound(g, orientable));

    if (line_base) {
        const Graph& b = *line_base;
        if (auto parts = recognize_complete_multipartite(b)) {
            int k = static_cast<int>(parts->size());
            if (k >= 1 && parts->back() == 1) {
                Bound lb = orientable ? line_complete_genus_bound(k)
                                      : line_complete_crosscap_bound(k);
                add_lower("line_complete", lb.value);
                if (lb.exact && !formula_upper) {
                    formula_upper = lb.value;
                    upper_source = "line_complete";
                }
            } else if (k == 2 && (*parts)[0] <= 2) {
                int n = (*parts)[0], m = (*parts)[1];
                Bound lb;
                if (n == 2)
                    lb = orientable ? line_bipartite2_genus_bound(m)
                                    : line_bipartite2_crosscap_bound(m);
                else
                    lb = Bound{0, true};  // L(K_{1,m}) = K_m is handled above
                add_lower("line_bipartite2", lb.value);
                if (lb.exact && !formula_upper) {
                    formula_upper = lb.value;
                    upper_source = "line_bipartite2";
                }
            } else if (k == 2) {
                int n = (*parts)[0], m = (*parts)[1];
                if (auto e = small_line_bipartite_exact(n, m, orientable)) {
                    add_lower("remark_table", *e);
                    if (!formula_upper) {
                        formula_upper = *e;
                        upper_source = "remark_table";
                    }
                } else {
                    add_lower("remark_table", small_line_bipartite_lower(n, m, orientable));
                }
            } else if (k == 3 && (*parts)[0] == 1 && (*parts)[1] == 1) {
                Bound lb = orientable ? line_K11m_genus((*parts)[2])
                                      : line_K11m_crosscap((*parts)[2]);
                add_lower("line_k11m", lb.value);
                if (lb.exact && !formula_upper) {
                    formula_upper = lb.value;
                    upper_source = "line_k11m";
                }
            }
        }
        add_lower("lm2_degree_pair", degree_pair_lower(b, orientable));
        if (auto v = three_vertex_lower(b)) add_lower("lm3_three_vertex", *v);
        if (auto v = k12m_rule(b, orientable)) add_lower("k12m", *v);
        int cl = max_clique(b);
        if (cl >= 5) {
            Bound lb = orientable ? line_complete_genus_bound(cl)
                                  : line_complete_crosscap_bound(cl);
            add_lower("clique_line", lb.value);
        }
        int m2 = max_k2m_subgraph(b);
        if (m2 >= 4) {
            Bound lb = orientable ? line_bipartite2_genus_bound(m2)
                                  : line_bipartite2_crosscap_bound(m2);
            add_lower("k2m_line", lb.value);
        }
        if (b.n() >= 7 && contains_subgraph(b, complete_bipartite(3, 4)))
            add_lower("k34_remark", small_line_bipartite_lower(3, 4, orientable));
        if (b.n() >= 8 && contains_subgraph(b, complete_bipartite(3, 5)))
            add_lower("k35_remark", small_line_bipartite_lower(3, 5, orientable));
    }

    if (formula_upper) {
        if (*formula_upper < r.lower)
            throw std::logic_error("bound rules contradict an exact formula value");
        if (*formula_upper == r.lower) {
            r.upper = formula_upper;
            return r;
        }
    }

    // search only at desk scale; bigger graphs keep a one-sided bound
    if (g.edge_count() <= 32) {
        GenusResult s = orientable ? min_genus(g, budget, r.lower)
                                   : min_crosscap(g, budget, r.lower);
        if (s.lower > r.lower) r.lower_rules = s.lower_rules;
        r.lower = std::max(r.lower, s.lower);
        r.nodes_explored = s.nodes_explored;
        if (s.upper && (!formula_upper || *s.upper < *formula_upper)) {
            r.upper = s.upper;
            r.certificate = s.certificate;
        } else {
            r.upper = formula_upper;
        }
    } else {
        r.upper = formula_upper;
    }
    return r;
}

std::string bound_report_json(const GenusResult& r, bool orientable) {
    nlohmann::json j;
    j["surface"] = orientable ? "orientable" : "nonorientable";
    j["lower"] = r.lower;
    j["lower_rules"] = r.lower_rules;
    if (r.upper)
        j["upper"] = *r.upper;
    else
        j["upper"] = nullptr;
    j["upper_source"] = r.upper ? (r.certificate ? "search" : "formula") : "none";
    j["exact"] = r.exact();
    return j.dump(2);
}

}  // namespace essgraph::bounds
