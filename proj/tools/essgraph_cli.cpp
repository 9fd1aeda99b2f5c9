#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "essgraph/bounds.hpp"
#include "essgraph/classify.hpp"

using namespace essgraph;

namespace {

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Graph base_graph(const std::string& spec, const std::string& which) {
    FiniteRing r = build_ring(parse_spec(spec));
    return which == "zd" ? zero_divisor_graph(r) : essential_graph(r);
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c))) ? c : '_';
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring essential graph toolkit"};
    app.require_subcommand(1);

    std::string spec, which = "essential", format = "json", input, theorem, out_dir = ".";
    std::uint64_t budget_nodes = 50'000'000;
    int max_order = 64, jobs = 1;

    auto* ring_info = app.add_subcommand("ring-info", "ring facts for a spec");
    ring_info->add_option("spec", spec)->required();

    auto* graph_cmd = app.add_subcommand("graph", "emit a ring's graph");
    graph_cmd->add_option("kind", which)->check(CLI::IsMember({"zd", "essential"}));
    graph_cmd->add_option("spec", spec)->required();
    graph_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* line_cmd = app.add_subcommand("linegraph", "line graph of a graph JSON");
    line_cmd->add_option("--input", input, "file or - for stdin");
    line_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* test_cmd = app.add_subcommand("test", "planarity tests on a graph JSON");
    std::string prop = "planar";
    test_cmd->add_option("property", prop)->check(CLI::IsMember({"planar", "outerplanar"}));
    test_cmd->add_option("--input", input);

    auto* genus_cmd = app.add_subcommand("genus", "orientable genus of a graph JSON");
    genus_cmd->add_option("--input", input);
    genus_cmd->add_option("--budget-nodes", budget_nodes);

    auto* crosscap_cmd = app.add_subcommand("crosscap", "crosscap of a graph JSON");
    crosscap_cmd->add_option("--input", input);
    crosscap_cmd->add_option("--budget-nodes", budget_nodes);

    auto* verify_cmd = app.add_subcommand("verify", "re-check a classification theorem");
    verify_cmd->add_option("theorem", theorem)->required();
    verify_cmd->add_option("--max-order", max_order);
    verify_cmd->add_option("--budget-nodes", budget_nodes);
    verify_cmd->add_option("--jobs", jobs);

    auto* corpus_cmd = app.add_subcommand("corpus", "write catalog graph fixtures");
    corpus_cmd->add_option("--out", out_dir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (ring_info->parsed()) {
            FiniteRing r = build_ring(parse_spec(spec));
            auto facts = classify_elements(r);
            int units = 0, zds = 0, nils = 0;
            for (int a = 0; a < r.order; ++a) {
                units += facts.is_unit[a];
                zds += a != r.zero && facts.is_zero_divisor[a];
                nils += a != r.zero && facts.is_nilpotent[a];
            }
            std::cout << "order: " << r.order << "\n"
                      << "units: " << units << "\n"
                      << "nonzero zero-divisors: " << zds << "\n"
                      << "nonzero nilpotents: " << nils << "\n"
                      << "local: " << (is_local(r).first ? "yes" : "no") << "\n"
                      << "reduced: " << (is_reduced(r) ? "yes" : "no") << "\n";
            return 0;
        }
        if (graph_cmd->parsed()) {
            Graph g = base_graph(spec, which);
            std::cout << (format == "dot" ? to_dot(g) : to_json(g)) << "\n";
            return 0;
        }
        if (line_cmd->parsed()) {
            Graph g = line_graph(graph_from_json(slurp(input)));
            std::cout << (format == "dot" ? to_dot(g) : to_json(g)) << "\n";
            return 0;
        }
        if (test_cmd->parsed()) {
            Graph g = graph_from_json(slurp(input));
            bool yes = prop == "planar" ? is_planar(g).planar : is_outerplanar(g);
            std::cout << prop << ": " << (yes ? "true" : "false") << "\n";
            if (prop == "planar" && !yes)
                std::cout << "witness: subdivision of " << kuratowski_witness(g) << "\n";
            return 0;
        }
        if (genus_cmd->parsed() || crosscap_cmd->parsed()) {
            bool orientable = genus_cmd->parsed();
            Graph g = graph_from_json(slurp(input));
            auto r = bounds::combined_interval(g, SearchBudget{budget_nodes}, orientable);
            std::cout << bounds::bound_report_json(r, orientable) << "\n";
            return r.exact() ? 0 : 2;
        }
        if (verify_cmd->parsed()) {
            auto rep = classify::verify_theorem(theorem, max_order,
                                                SearchBudget{budget_nodes}, jobs);
            std::cout << rep.to_json() << "\n";
            std::string overall = rep.overall();
            return overall == "VERIFIED" ? 0 : overall == "CONSISTENT" ? 2 : 1;
        }
        if (corpus_cmd->parsed()) {
            for (const auto& e : classify::catalog()) {
                Graph g = base_graph(e.id, "essential");
                std::ofstream f(out_dir + "/eg_" + sanitize(e.id) + ".json");
                f << to_json(g) << "\n";
                std::cout << "eg_" << sanitize(e.id) << ".json\n";
            }
            struct Named {
                const char* name;
                Graph g;
            } named[] = {{"k5", complete(5)},
                         {"k33", complete_bipartite(3, 3)},
                         {"k24", complete_bipartite(2, 4)},
                         {"k25", complete_bipartite(2, 5)},
                         {"k6", complete(6)}};
            for (const auto& n : named) {
                std::ofstream f(out_dir + "/" + n.name + ".json");
                f << to_json(n.g) << "\n";
                std::cout << n.name << ".json\n";
            }
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
