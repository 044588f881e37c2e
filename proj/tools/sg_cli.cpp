// Command-line front end: build the named constructions, compute exact
// characteristic polynomials and floating spectra, run the published-value
// fixture suite, and search small orders for cospectral pairs.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sg/construct.hpp"
#include "sg/enumerate.hpp"
#include "sg/io.hpp"
#include "sg/spectra.hpp"
#include "sg/tu.hpp"
#include "sg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeLimit = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) sg::fail(sg::errc::parse_error, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

sg::SignedGraph load_graph(const std::string& path) { return sg::from_json(slurp(path)); }

sg::SignedGraph family_member(const sg::TheoremFamily& fam, const std::string& member) {
    if (member == "gamma1") return fam.gamma1;
    if (member == "gamma1_tau") return fam.gamma1_tau;
    if (member == "gamma2") return fam.gamma2;
    if (member == "gamma3") return fam.gamma3;
    if (member == "gamma4" && fam.gamma4) return *fam.gamma4;
    if (member == "gamma5" && fam.gamma5) return *fam.gamma5;
    sg::fail(sg::errc::parse_error, "unknown family member " + member);
}

void print_family(const sg::TheoremFamily& fam, const std::string& member) {
    if (!member.empty()) {
        std::cout << sg::to_json(family_member(fam, member)) << "\n";
        return;
    }
    std::cout << "{\"gamma1\": " << sg::to_json(fam.gamma1)
              << ", \"gamma1_tau\": " << sg::to_json(fam.gamma1_tau)
              << ", \"gamma2\": " << sg::to_json(fam.gamma2)
              << ", \"gamma3\": " << sg::to_json(fam.gamma3);
    if (fam.gamma4) std::cout << ", \"gamma4\": " << sg::to_json(*fam.gamma4);
    if (fam.gamma5) std::cout << ", \"gamma5\": " << sg::to_json(*fam.gamma5);
    std::cout << "}\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed-graph spectral toolkit"};
    app.require_subcommand(1);

    sg::RunConfig cfg;
    app.add_option("--tolerance", cfg.tolerance, "floating comparison tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.thread_count, "worker threads (0 = all)");
    app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
    app.add_option("--max-order", cfg.max_order, "order cap for searches");

    // --- build ---
    auto* build = app.add_subcommand("build", "construct a named graph or family");
    std::string family, member;
    int bn = 4, bi = 1, bj = 3, bneg = 0;
    build->add_option("family", family,
                      "t31 | t32 | example31 | c3minus | path | cycle | complete")
        ->required();
    build->add_option("--n", bn, "order parameter");
    build->add_option("--i", bi, "first index (t32)");
    build->add_option("--j", bj, "second index (t32)");
    build->add_option("--negatives", bneg, "negative edge count (path/cycle/complete)");
    build->add_option("--member", member, "emit a single family member");

    // --- charpoly / tu-charpoly / spectrum ---
    auto* charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
    std::string cp_input = "-", cp_matrix = "adjacency";
    charpoly->add_option("graph", cp_input, "graph JSON file or - for stdin");
    charpoly->add_option("--matrix", cp_matrix, "adjacency | laplacian");

    auto* tucp = app.add_subcommand("tu-charpoly",
                                    "Laplacian polynomial via TU-subgraph expansion");
    std::string tu_input = "-";
    tucp->add_option("graph", tu_input, "graph JSON file or - for stdin");

    auto* spectrum = app.add_subcommand("spectrum", "floating eigenvalues");
    std::string sp_input = "-", sp_matrix = "adjacency";
    spectrum->add_option("graph", sp_input, "graph JSON file or - for stdin");
    spectrum->add_option("--matrix", sp_matrix, "adjacency | laplacian");

    // --- cospectral ---
    auto* cosp = app.add_subcommand("cospectral", "exact cospectrality of two graphs");
    std::string cs_a, cs_b, cs_matrix = "adjacency";
    cosp->add_option("a", cs_a, "first graph")->required();
    cosp->add_option("b", cs_b, "second graph")->required();
    cosp->add_option("--matrix", cs_matrix, "adjacency | laplacian");

    // --- construct ---
    auto* construct = app.add_subcommand("construct", "apply a graph operation");
    std::string op, in_a, in_b;
    int op_p = 1, op_k = 0;
    construct->add_option("op", op, "pt | subdivision | sp | spk | cartesian | kronecker")
        ->required();
    construct->add_option("a", in_a, "input graph")->required();
    construct->add_option("b", in_b, "second input graph (products)");
    construct->add_option("--p", op_p, "replication count");
    construct->add_option("--k", op_k, "edge-side clone count (spk)");

    // --- search ---
    auto* search = app.add_subcommand("search", "cospectral pair search over one order");
    int search_n = 4;
    std::string search_mode = "lap";
    search->add_option("--n", search_n, "graph order")->required();
    search->add_option("--mode", search_mode, "adj | lap");

    // --- verify-paper ---
    auto* verify = app.add_subcommand("verify-paper", "run the published-value fixture suite");

    // --- export ---
    auto* exp = app.add_subcommand("export", "re-emit a graph as dot or json");
    std::string ex_input = "-", ex_format = "json";
    exp->add_option("graph", ex_input, "graph JSON file or - for stdin");
    exp->add_option("--format", ex_format, "dot | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build) {
            if (family == "t31") {
                print_family(sg::theorem31_family(bn), member);
            } else if (family == "t32") {
                print_family(sg::theorem32_family(bn, bi, bj), member);
            } else if (family == "example31") {
                std::cout << sg::to_json(sg::example31_graph()) << "\n";
            } else if (family == "c3minus") {
                std::cout << sg::to_json(sg::c3_minus()) << "\n";
            } else if (family == "path") {
                auto g = sg::path_graph(bn, sg::Sign::positive);
                std::vector<sg::SignedEdge> es = g.edges();
                for (int t = 0; t < bneg && t < static_cast<int>(es.size()); ++t)
                    es[t].sign = sg::Sign::negative;
                std::cout << sg::to_json(sg::SignedGraph::build(bn, es)) << "\n";
            } else if (family == "cycle") {
                std::cout << sg::to_json(sg::cycle_graph(bn, bneg)) << "\n";
            } else if (family == "complete") {
                auto g = sg::complete_graph(bn, sg::Sign::positive);
                std::vector<sg::SignedEdge> es = g.edges();
                for (int t = 0; t < bneg && t < static_cast<int>(es.size()); ++t)
                    es[t].sign = sg::Sign::negative;
                std::cout << sg::to_json(sg::SignedGraph::build(bn, es)) << "\n";
            } else {
                std::cerr << "unknown family: " << family << "\n";
                return kExitUsage;
            }
        } else if (*charpoly) {
            sg::SignedGraph g = load_graph(cp_input);
            sg::IntMatrix m = cp_matrix == "laplacian" ? sg::laplacian_matrix(g)
                                                       : sg::adjacency_matrix(g);
            auto p = sg::char_poly_exact(m);
            std::cout << p.coeff_list() << "\n" << p.pretty() << "\n";
        } else if (*tucp) {
            sg::SignedGraph g = load_graph(tu_input);
            auto p = sg::laplacian_charpoly_via_tu(g, cfg.thread_count);
            std::cout << p.coeff_list() << "\n" << p.pretty() << "\n";
        } else if (*spectrum) {
            sg::SignedGraph g = load_graph(sp_input);
            sg::IntMatrix m = sp_matrix == "laplacian" ? sg::laplacian_matrix(g)
                                                       : sg::adjacency_matrix(g);
            std::cout << sg::format_spectrum(sg::eigenvalues(m, cfg.tolerance)) << "\n";
        } else if (*cosp) {
            sg::SignedGraph a = load_graph(cs_a), b = load_graph(cs_b);
            bool same = cs_matrix == "laplacian" ? sg::laplacian_cospectral(a, b)
                                                 : sg::cospectral(a, b);
            std::cout << (same ? "true" : "false") << "\n";
        } else if (*construct) {
            sg::SignedGraph a = load_graph(in_a);
            sg::SignedGraph out;
            if (op == "pt") {
                out = sg::partial_transpose(a, {a.order() / 2});
            } else if (op == "subdivision") {
                out = sg::subdivision(a, sg::default_orientation(a));
            } else if (op == "sp") {
                out = sg::s_p(a, op_p);
            } else if (op == "spk") {
                out = sg::s_p_k(a, op_p, op_k);
            } else if (op == "cartesian" || op == "kronecker") {
                if (in_b.empty()) {
                    std::cerr << "product needs a second graph\n";
                    return kExitUsage;
                }
                sg::SignedGraph b = load_graph(in_b);
                out = op == "cartesian" ? sg::cartesian_product(a, b)
                                        : sg::kronecker_product(a, b);
            } else {
                std::cerr << "unknown operation: " << op << "\n";
                return kExitUsage;
            }
            std::cout << sg::to_json(out) << "\n";
        } else if (*search) {
            if (search_n > cfg.max_order)
                sg::fail(sg::errc::size_limit_exceeded, "order above --max-order");
            auto mode = search_mode == "adj" ? sg::SpectrumKind::adjacency
                                             : sg::SpectrumKind::laplacian;
            auto pairs = sg::find_cospectral_pairs(search_n, mode, cfg.thread_count);
            std::cout << pairs.size() << " cospectral pair(s) at order " << search_n << " ("
                      << (mode == sg::SpectrumKind::adjacency ? "adjacency" : "laplacian")
                      << ")\n";
            for (const auto& pr : pairs) {
                std::cout << "pair poly=" << pr.shared_poly.coeff_list()
                          << " strict_iso=" << (pr.isomorphic_strict ? "yes" : "no")
                          << " switching_iso=" << (pr.switching_iso ? "yes" : "no") << "\n"
                          << "  a=" << sg::to_json(pr.graph_a) << "\n"
                          << "  b=" << sg::to_json(pr.graph_b) << "\n";
            }
        } else if (*verify) {
            sg::VerifyReport report = sg::verify_paper(cfg);
            std::cout << report.render();
            return report.all_passed() ? kExitOk : kExitVerifyFailed;
        } else if (*exp) {
            sg::SignedGraph g = load_graph(ex_input);
            if (ex_format == "dot")
                std::cout << sg::to_dot(g);
            else
                std::cout << sg::to_json(g) << "\n";
        }
    } catch (const sg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == sg::errc::size_limit_exceeded ? kExitSizeLimit : kExitUsage;
    }
    return kExitOk;
}
