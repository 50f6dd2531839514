// superdom command line: exact super domination solves, family formulas,
// modification-bound checks, sweeps, oracle comparison and the gap witness.
//
// Exit codes: 0 success, 1 property violation or oracle mismatch,
// 2 usage/parse error, 3 solver resource limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "superdom/families.hpp"
#include "superdom/gnp.hpp"
#include "superdom/graph.hpp"
#include "superdom/io.hpp"
#include "superdom/solver.hpp"
#include "superdom/theorems.hpp"

namespace {

using namespace superdom;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct RandomSpec {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    int count = 0;
};

RandomSpec parse_random_spec(const std::string& text) {
    RandomSpec r;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream is(text);
    unsigned long long seed = 0;
    if (!(is >> r.n >> c1 >> r.p >> c2 >> seed >> c3 >> r.count) || c1 != ',' || c2 != ',' ||
        c3 != ',' || !is.eof())
        throw std::invalid_argument("--random expects n,p,seed,count (got '" + text + "')");
    if (r.n < 1 || r.p < 0.0 || r.p > 1.0 || r.count < 1)
        throw std::invalid_argument("--random parameters out of range");
    r.seed = seed;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool looks_like_dimacs(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                              : nl - pos);
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i != std::string_view::npos) {
            char c = line[i];
            return c == 'c' || c == 'p' || c == 'e';
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return false;
}

Graph load_graph_file(const std::string& path) {
    std::string text = read_file(path);
    if (looks_like_dimacs(text)) {
        DimacsResult r = parse_dimacs(text);
        for (const auto& w : r.warnings) std::cerr << path << ": warning: " << w << '\n';
        return r.graph;
    }
    return parse_edge_list(text);
}

Graph load_input(const std::string& file, const std::string& family) {
    if (file.empty() == family.empty())
        throw std::invalid_argument("exactly one input required: a graph file or --family");
    if (!family.empty()) return generate(FamilySpec::parse(family));
    return load_graph_file(file);
}

void print_reports(const std::vector<BoundReport>& reports, const std::string& format) {
    std::span<const BoundReport> view(reports);
    std::cout << (format == "records" ? write_report(view) : write_report_table(view));
}

bool all_hold(const std::vector<BoundReport>& reports) {
    for (const auto& r : reports)
        if (!r.holds) return false;
    return true;
}

int report_violation(const Graph& g, const std::string& context) {
    std::cerr << "BOUND VIOLATION (" << context
              << "): a proven theorem failed, which indicates a solver or operator bug.\n"
              << "graph for reproduction (edge-list format):\n"
              << write_edge_list(g);
    return kExitViolation;
}

int run_solve(const std::string& file, const std::string& family, const SolveOptions& opt) {
    Graph g = load_input(file, family);
    SolveResult r = super_domination_number(g, opt);
    DominationResult d = domination_number(g, opt);
    std::cout << "graph: " << g.order() << " vertices, " << g.edge_count() << " edges\n";
    std::cout << "gamma_sp = " << r.value << '\n';
    std::cout << "witness = " << r.witness.to_string() << '\n';
    std::cout << "gamma = " << d.value << " (witness " << d.witness.to_string() << ")\n";
    if (g.edge_count() > 0) {
        Theorem1Bounds b = theorem1_bounds(g);
        std::cout << "theorem1 bounds: " << b.lower << " <= gamma_sp <= " << b.upper << '\n';
    } else {
        std::cout << "theorem1 bounds: not applicable (no edges)\n";
    }
    std::cout << "subsets examined = " << r.subsets_examined << '\n';
    std::cout << "strategy = " << r.strategy << '\n';
    return 0;
}

int run_family(const std::string& family, const SolveOptions& opt) {
    FamilySpec spec = FamilySpec::parse(family);
    Graph g = generate(spec);
    std::cout << "family " << spec.to_string() << '\n';
    std::cout << "order = " << g.order() << ", size = " << g.edge_count() << '\n';
    if (auto cf = closed_form_gamma_sp(spec)) {
        std::cout << "closed form gamma_sp = " << cf->value << " ("
                  << (cf->source == FormulaSource::published ? "published formula"
                                                         : "solver-established extension")
                  << ")\n";
    } else {
        std::cout << "closed form gamma_sp = none (upper bound only)\n";
    }
    if (spec.kind == FamilyKind::dutch_windmill && spec.b >= 4)
        std::cout << "dutch upper bound = " << dutch_upper_bound(spec.a, spec.b) << '\n';
    if (g.edge_count() > 0) {
        Theorem1Bounds b = theorem1_bounds(g);
        std::cout << "theorem1 bounds: " << b.lower << " <= gamma_sp <= " << b.upper << '\n';
    }
    int limit = std::min(opt.component_limit, detail::kMaxComponentVertices);
    if (g.order() <= limit) {
        SolveResult r = super_domination_number(g, opt);
        std::cout << "exact gamma_sp = " << r.value << " (witness " << r.witness.to_string()
                  << ")\n";
    } else {
        std::cout << "exact gamma_sp: skipped (order " << g.order() << " above limit " << limit
                  << ")\n";
    }
    return 0;
}

int run_modify(const std::string& file, const std::string& family, const std::string& edge_text,
               std::optional<int> vertex, const std::string& format, const SolveOptions& opt) {
    Graph g = load_input(file, family);
    if (edge_text.empty() == !vertex.has_value())
        throw std::invalid_argument("exactly one operand required: --edge u,v or --vertex v");

    std::vector<BoundReport> reports;
    if (!edge_text.empty()) {
        int u = 0, v = 0;
        char comma = 0;
        std::istringstream is(edge_text);
        if (!(is >> u >> comma >> v) || comma != ',' || !is.eof())
            throw std::invalid_argument("--edge expects u,v (got '" + edge_text + "')");
        Edge e(u, v);
        if (e.v >= g.order() || !g.has_edge(e))
            throw std::invalid_argument("edge " + std::to_string(u) + "," + std::to_string(v) +
                                        " is not in the graph");
        reports.push_back(check_edge_removal(g, e, opt));
        reports.push_back(check_edge_contraction(g, e, opt));
        reports.push_back(check_corollary_alpha(g, e, opt));
    } else {
        int v = *vertex;
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        reports.push_back(check_vertex_removal(g, v, opt));
        reports.push_back(check_vertex_contraction(g, v, opt));
        if (g.degree(v) == 1) reports.push_back(check_corollary_beta(g, v, opt));
        if (g.degree(v) == 2) reports.push_back(check_corollary_theta(g, v, opt));
    }
    print_reports(reports, format);
    if (!all_hold(reports)) return report_violation(g, "modify");
    return 0;
}

int run_sweep(const std::vector<std::string>& files, const std::string& family,
              const std::string& random_text, const std::string& sharp_filter,
              const std::string& format, const SolveOptions& opt) {
    std::optional<TheoremId> sharp_id;
    if (!sharp_filter.empty() && sharp_filter != "any") {
        sharp_id = theorem_id_from_string(sharp_filter);
        if (!sharp_id)
            throw std::invalid_argument("--sharp: unknown theorem id '" + sharp_filter + "'");
    }

    struct Item {
        std::string label;
        Graph graph;
    };
    std::vector<Item> items;
    int sources = (!files.empty() ? 1 : 0) + (!family.empty() ? 1 : 0) +
                  (!random_text.empty() ? 1 : 0);
    if (sources != 1)
        throw std::invalid_argument(
            "exactly one input required: graph file(s), --family, or --random");
    if (!family.empty()) {
        items.push_back({family, generate(FamilySpec::parse(family))});
    } else if (!random_text.empty()) {
        RandomSpec r = parse_random_spec(random_text);
        for (int i = 0; i < r.count; ++i) {
            std::uint64_t seed = r.seed + static_cast<std::uint64_t>(i);
            std::ostringstream label;
            label << "gnp(n=" << r.n << ", p=" << r.p << ", seed=" << seed << ")";
            items.push_back({label.str(), gnp(r.n, r.p, seed)});
        }
    } else {
        for (const auto& f : files) items.push_back({f, load_graph_file(f)});
    }

    std::size_t total = 0, held = 0, sharp_low = 0, sharp_high = 0;
    for (const Item& item : items) {
        std::vector<BoundReport> reports = sweep(item.graph, opt);
        std::size_t item_held = 0, item_low = 0, item_high = 0;
        for (const auto& r : reports) {
            item_held += r.holds;
            item_low += r.sharp_low;
            item_high += r.sharp_high;
        }
        total += reports.size();
        held += item_held;
        sharp_low += item_low;
        sharp_high += item_high;
        if (!sharp_filter.empty()) {
            // sharpness search mode: emit only the attaining reports
            std::vector<BoundReport> sharp;
            for (const BoundReport& r : reports)
                if ((r.sharp_low || r.sharp_high) && (!sharp_id || r.theorem_id == *sharp_id))
                    sharp.push_back(r);
            if (!sharp.empty()) {
                std::cout << "# sharp in " << item.label << " (n=" << item.graph.order()
                          << ", m=" << item.graph.edge_count() << ")\n";
                std::cout << write_report(sharp);
            }
        } else if (format == "records") {
            std::cout << "# sweep " << item.label << " (n=" << item.graph.order()
                      << ", m=" << item.graph.edge_count() << ")\n";
            std::cout << write_report(reports);
        } else {
            std::cout << "sweep " << item.label << " (n=" << item.graph.order()
                      << ", m=" << item.graph.edge_count() << "): " << reports.size()
                      << " reports, " << item_held << " hold, sharp_low " << item_low
                      << ", sharp_high " << item_high << '\n';
        }
        if (item_held != reports.size()) return report_violation(item.graph, item.label);
    }
    std::cout << "sweep total: " << items.size() << " graph(s), " << total << " reports, " << held
              << " hold, sharp_low " << sharp_low << ", sharp_high " << sharp_high << '\n';
    return 0;
}

int run_oracle(const std::string& family, const std::string& random_text,
               std::optional<int> exhaustive, const SolveOptions& opt) {
    struct Item {
        std::string label;
        Graph graph;
    };
    std::vector<Item> items;
    int sources = (!family.empty() ? 1 : 0) + (!random_text.empty() ? 1 : 0) +
                  (exhaustive.has_value() ? 1 : 0);
    if (sources != 1)
        throw std::invalid_argument(
            "exactly one input required: --family, --random, or --exhaustive");
    if (!family.empty()) {
        items.push_back({family, generate(FamilySpec::parse(family))});
        if (items.back().graph.order() > kNaiveLimit)
            throw std::invalid_argument("oracle: order exceeds the naive cap of " +
                                        std::to_string(kNaiveLimit));
    } else if (!random_text.empty()) {
        RandomSpec r = parse_random_spec(random_text);
        if (r.n > 10) throw std::invalid_argument("oracle --random supports n <= 10");
        for (int i = 0; i < r.count; ++i) {
            std::uint64_t seed = r.seed + static_cast<std::uint64_t>(i);
            std::ostringstream label;
            label << "gnp(n=" << r.n << ", p=" << r.p << ", seed=" << seed << ")";
            items.push_back({label.str(), gnp(r.n, r.p, seed)});
        }
    } else {
        int n = *exhaustive;
        if (n < 1 || n > 6)
            throw std::invalid_argument("oracle --exhaustive supports 1 <= n <= 6");
        std::vector<Edge> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1) edges.push_back(pairs[i]);
            items.push_back({"edge-subset " + std::to_string(mask), Graph(n, edges)});
        }
    }

    for (const Item& item : items) {
        int fast = super_domination_number(item.graph, opt).value;
        int naive = super_domination_naive(item.graph);
        if (fast != naive) {
            std::cerr << "ORACLE MISMATCH (" << item.label << "): solver " << fast << ", naive "
                      << naive << "\ngraph for reproduction (edge-list format):\n"
                      << write_edge_list(item.graph);
            return kExitViolation;
        }
    }
    if (items.size() == 1) {
        int v = super_domination_number(items[0].graph, opt).value;
        std::cout << "oracle: 1 graph compared, solver and naive agree (gamma_sp = " << v << ")\n";
    } else {
        std::cout << "oracle: " << items.size() << " graphs compared, zero mismatches\n";
    }
    return 0;
}

int run_gap(int n, const SolveOptions& opt) {
    GapWitness w = gap_witness(n, opt);
    std::cout << "gap witness for n = " << w.n << '\n';
    std::cout << "graph = friendship:" << (w.n + 2) << " (order " << w.graph.order() << ", size "
              << w.graph.edge_count() << "), hub = " << w.hub << '\n';
    std::cout << "gamma_sp before = " << w.gamma_sp_before << '\n';
    std::cout << "gamma_sp after hub contraction = " << w.gamma_sp_after << '\n';
    std::cout << "gap = " << (w.gamma_sp_after - w.gamma_sp_before) << '\n';
    std::cout << (w.verified ? "verified by exact solver\n"
                             : "construction only (verification skipped above solver limit)\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superdom: exact super domination number toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // --limit/--workers/--format may follow the subcommand

    SolveOptions opt;
    app.add_option("--limit", opt.component_limit,
                   "per-component vertex cap for the exact solver; raising it grows the "
                   "search combinatorially (hard cap 64)")
        ->capture_default_str();
    app.add_option("--workers", opt.workers, "threads for subset enumeration")
        ->capture_default_str();

    std::string format = "table";
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"records", "table"}))
        ->capture_default_str();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "exact gamma_sp of one graph");
    std::string solve_file, solve_family;
    solve_cmd->add_option("file", solve_file, "graph file (edge list or DIMACS)");
    solve_cmd->add_option("--family", solve_family, "family spec, e.g. dutch:2,8");

    // family
    auto* family_cmd = app.add_subcommand("family", "evaluate a family instance");
    std::string family_spec;
    family_cmd->add_option("spec", family_spec, "family spec, e.g. friendship:4")->required();

    // modify
    auto* modify_cmd = app.add_subcommand("modify", "bound checks for one edge or vertex");
    std::string modify_file, modify_family, modify_edge;
    std::optional<int> modify_vertex;
    modify_cmd->add_option("file", modify_file, "graph file");
    modify_cmd->add_option("--family", modify_family, "family spec");
    modify_cmd->add_option("--edge", modify_edge, "edge operand u,v");
    modify_cmd->add_option("--vertex", modify_vertex, "vertex operand");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "all bound checks over all edges and vertices");
    std::vector<std::string> sweep_files;
    std::string sweep_family, sweep_random;
    sweep_cmd->add_option("files", sweep_files, "graph files");
    sweep_cmd->add_option("--family", sweep_family, "family spec");
    sweep_cmd->add_option("--random", sweep_random, "random corpus n,p,seed,count");
    std::string sweep_sharp;
    sweep_cmd->add_option("--sharp", sweep_sharp,
                          "sharpness search: emit only attaining reports, for one theorem id "
                          "or 'any'");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "optimized solver vs naive 2^n oracle");
    std::string oracle_family, oracle_random;
    std::optional<int> oracle_exhaustive;
    oracle_cmd->add_option("--family", oracle_family, "family spec");
    oracle_cmd->add_option("--random", oracle_random, "random corpus n,p,seed,count (n <= 10)");
    oracle_cmd->add_option("--exhaustive", oracle_exhaustive,
                           "all graphs on n vertices by edge subsets (n <= 6)");

    // gap
    auto* gap_cmd = app.add_subcommand("gap", "constructive gamma_sp(G/v)-gamma_sp(G)=n witness");
    int gap_n = 1;
    gap_cmd->add_option("n", gap_n, "target gap")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_file, solve_family, opt);
        if (family_cmd->parsed()) return run_family(family_spec, opt);
        if (modify_cmd->parsed())
            return run_modify(modify_file, modify_family, modify_edge, modify_vertex, format, opt);
        if (sweep_cmd->parsed())
            return run_sweep(sweep_files, sweep_family, sweep_random, sweep_sharp, format, opt);
        if (oracle_cmd->parsed())
            return run_oracle(oracle_family, oracle_random, oracle_exhaustive, opt);
        if (gap_cmd->parsed()) return run_gap(gap_n, opt);
    } catch (const SolverLimitExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --limit to accept the cost)\n";
        return kExitLimit;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
