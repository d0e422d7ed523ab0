#include "preisach/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "preisach/commands.hpp"
#include "preisach/io.hpp"

namespace preisach {

namespace {

struct Options {
    std::string perm;
    std::string vertex;
    std::string subseq;
    std::string out;
    std::string builder = "bfs";
    std::size_t max_vertices = kDefaultMaxVertices;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t samples = 1;
    unsigned threads = 1;
};

int emit(const Options& opt, const std::string& text, std::ostream& out, std::ostream& err) {
    if (opt.out.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file || !(file << text)) {
        err << "error: cannot write " << opt.out << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

PreisachGraph build(const Options& opt) {
    const auto rho = parse_permutation(opt.perm);
    return opt.builder == "forward" ? build_forward(rho, opt.max_vertices) : build_bfs(rho, opt.max_vertices);
}

int dispatch(const std::string& cmd, const Options& opt, std::ostream& out, std::ostream& err) {
    if (cmd == "build") {
        const auto g = build(opt);
        const Bijection phi(g);
        std::ostringstream os;
        os << "perm " << g.perm().to_string() << "\nvertices " << g.vertex_count() << "\nedges " << g.edge_count()
           << "\nnesting " << phi.max_nesting_degree() << "\n";
        for (const auto& v : g.vertices()) {
            os << v.to_string() << ' ' << phi.nesting_degree(v) << ' ' << phi.phi(v).to_string() << "\n";
        }
        return emit(opt, os.str(), out, err);
    }
    if (cmd == "export-dot") return emit(opt, export_dot(build(opt)), out, err);
    if (cmd == "export-json") return emit(opt, export_json(build(opt)) + "\n", out, err);
    if (cmd == "phi") {
        const auto g = build(opt);
        return emit(opt, phi(g, parse_config(opt.vertex, g.spin_count())).to_string() + "\n", out, err);
    }
    if (cmd == "phi-inverse") {
        const auto g = build(opt);
        const auto s = parse_subsequence(opt.subseq, g.perm());
        const auto table = phi_inverse(g, s);
        if (phi_inverse_constructive(g.perm(), s) != table) {
            err << "error: constructive and table inverses disagree\n";
            return kExitVerificationFailed;
        }
        return emit(opt, table.to_string() + "\n", out, err);
    }
    if (cmd == "nesting") {
        const auto g = build(opt);
        const std::size_t value = opt.vertex.empty() ? nesting_of_graph(g)
                                                     : nesting_degree(g, parse_config(opt.vertex, g.spin_count()));
        return emit(opt, std::to_string(value) + "\n", out, err);
    }
    if (cmd == "lis") return emit(opt, std::to_string(lis_patience(parse_permutation(opt.perm))) + "\n", out, err);
    if (cmd == "verify") {
        const auto report = cmd_verify(parse_permutation(opt.perm), opt.max_vertices);
        const int status = emit(opt, to_json(report) + "\n", out, err);
        if (status != kExitOk) return status;
        if (report.budget_exceeded) return kExitBudget;
        return report.passed() ? kExitOk : kExitVerificationFailed;
    }
    if (cmd == "verify-all") {
        const auto summary = cmd_verify_all(opt.n, opt.threads);
        const int status = emit(opt, to_json(summary) + "\n", out, err);
        if (status != kExitOk) return status;
        return summary.failures.empty() ? kExitOk : kExitVerificationFailed;
    }
    if (cmd == "stats") {
        const auto report = cmd_stats(opt.n, opt.samples, opt.seed, opt.max_vertices, opt.threads);
        const int status = emit(opt, to_json(report) + "\n", out, err);
        if (status != kExitOk) return status;
        return report.nesting_failed == 0 ? kExitOk : kExitVerificationFailed;
    }
    err << "error: no subcommand given (see --help)\n";
    return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Preisach graphs of permutations and increasing subsequences", "preisach"};
    app.require_subcommand(1);

    auto add_perm = [&](CLI::App* sub) { sub->add_option("--perm", opt.perm, "permutation, e.g. 2,3,1")->required(); };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--max-vertices", opt.max_vertices, "vertex budget")->check(CLI::PositiveNumber);
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "output file (default stdout)"); };
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
    };
    auto graph_command = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        add_perm(sub);
        add_budget(sub);
        add_out(sub);
        sub->add_option("--builder", opt.builder, "bfs or forward")->check(CLI::IsMember({"bfs", "forward"}));
        return sub;
    };

    graph_command("build", "build the graph and list vertices with nesting degree and image");
    graph_command("export-dot", "write the graph as Graphviz DOT");
    graph_command("export-json", "write the graph as canonical JSON");
    graph_command("phi", "increasing subsequence of a vertex")->add_option("--vertex", opt.vertex)->required();
    graph_command("phi-inverse", "vertex of an increasing subsequence")
        ->add_option("--subseq", opt.subseq, "e.g. 2,4,5; empty for the empty subsequence")
        ->required();
    graph_command("nesting", "nesting degree of a vertex, or of the graph without --vertex")
        ->add_option("--vertex", opt.vertex);
    auto* lis = app.add_subcommand("lis", "longest increasing subsequence length");
    add_perm(lis);
    add_out(lis);
    auto* verify = app.add_subcommand("verify", "check all structural identities on one permutation");
    add_perm(verify);
    add_budget(verify);
    add_out(verify);
    auto* verify_all = app.add_subcommand("verify-all", "verify every permutation of size n (n <= 8)");
    verify_all->add_option("--n", opt.n)->required();
    add_threads(verify_all);
    add_out(verify_all);
    auto* stats = app.add_subcommand("stats", "LIS statistics of random permutations");
    stats->add_option("--n", opt.n)->required()->check(CLI::PositiveNumber);
    stats->add_option("--samples", opt.samples)->check(CLI::PositiveNumber);
    stats->add_option("--seed", opt.seed);
    add_budget(stats);
    add_threads(stats);
    add_out(stats);

    std::vector<std::string> argv_store{"preisach"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt, out, err);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InvariantViolation& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace preisach
