// Command line front end: graph generation, construction, verification,
// bounds, exact solving and conformance sweeps.
//
// Exit codes: 0 success, 1 parameter error, 2 infeasible, 3 budget expired
// with the answer unresolved.  Data goes to stdout (or --out), diagnostics
// to stderr.

#include <algorithm>
#include <chrono>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ktdom/conformance.hpp"
#include "ktdom/constructions.hpp"
#include "ktdom/domination.hpp"
#include "ktdom/errors.hpp"
#include "ktdom/harary.hpp"
#include "ktdom/io.hpp"
#include "ktdom/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParameter = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUnresolved = 3;

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        ktdom::write_text_file(out_path, payload);
    }
}

ktdom::SolveMethod parse_method(const std::string& name) {
    if (name == "brute") return ktdom::SolveMethod::Brute;
    if (name == "bnb") return ktdom::SolveMethod::BranchAndBound;
    throw ktdom::ParameterError("unknown method: " + name + " (expected brute|bnb)");
}

int run(int argc, char** argv) {
    CLI::App app{"k-tuple total domination toolkit for Harary graphs"};
    app.require_subcommand(1);

    int d = 0;
    int n = 0;
    int k = 2;
    std::string out_path;
    std::string method_name = "bnb";
    long long budget_ms = -1;

    auto* gen = app.add_subcommand("gen", "Write a graph as an edge list");
    gen->add_option("d", d, "degree parameter")->required();
    gen->add_option("n", n, "order")->required();
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* construct =
        app.add_subcommand("construct", "Emit the closed-form sets for an instance");
    construct->add_option("d", d, "degree parameter")->required();
    construct->add_option("n", n, "order")->required();
    construct->add_option("--out", out_path, "output file (default stdout)");

    std::string graph_path;
    std::string sets_path;
    auto* verify = app.add_subcommand("verify", "Check candidate sets against a graph");
    verify->add_option("graph", graph_path, "edge-list file")->required();
    verify->add_option("sets", sets_path, "set file, one candidate per line")->required();
    verify->add_option("--k", k, "coverage multiplicity (default 2)");

    auto* bounds = app.add_subcommand("bounds", "Print lower and upper bounds");
    bounds->add_option("d", d, "degree parameter")->required();
    bounds->add_option("n", n, "order")->required();
    bounds->add_option("--k", k, "coverage multiplicity (default 2)");

    auto* solve = app.add_subcommand("solve", "Compute the exact optimum");
    solve->add_option("d", d, "degree parameter")->required();
    solve->add_option("n", n, "order")->required();
    solve->add_option("--k", k, "coverage multiplicity (default 2)");
    solve->add_option("--method", method_name, "brute|bnb (default bnb)");
    solve->add_option("--budget", budget_ms,
                      "time budget in ms; negative means unlimited (default)");

    ktdom::SweepOptions sweep_opts;
    long long sweep_budget_ms = 60000;
    std::string format = "json";
    bool no_timing = false;
    auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter range");
    sweep->add_option("--d-min", sweep_opts.d_min, "smallest degree parameter")->required();
    sweep->add_option("--d-max", sweep_opts.d_max, "largest degree parameter")->required();
    sweep->add_option("--n-min", sweep_opts.n_min, "smallest order")->required();
    sweep->add_option("--n-max", sweep_opts.n_max, "largest order")->required();
    sweep->add_option("--k", sweep_opts.k, "coverage multiplicity (default 2)");
    sweep->add_option("--budget", sweep_budget_ms,
                      "per-instance budget in ms; negative means unlimited (default 60000)");
    sweep->add_option("--method", method_name, "brute|bnb (default bnb)");
    sweep->add_option("--out", out_path, "output file (default stdout)");
    sweep->add_option("--format", format, "json|csv (default json)");
    sweep->add_option("--cache", sweep_opts.cache_path,
                      "append-only result cache keyed by (d, n, k)");
    sweep->add_option("--workers", sweep_opts.workers,
                      "worker threads (default: KTDOM_WORKERS or hardware)");
    sweep->add_flag("--no-timing", no_timing, "zero timing fields for diffable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParameter;
    }

    if (gen->parsed()) {
        emit(ktdom::format_edge_list(ktdom::build_harary({d, n})), out_path);
        return kExitOk;
    }

    if (construct->parsed()) {
        std::string payload;
        for (const auto& c : ktdom::construct_2tds({d, n})) {
            payload += ktdom::format_set_line(
                c.set.labels(), std::string(ktdom::to_string(c.id)) +
                                    " validated=" + (c.validated ? "true" : "false"));
            payload += '\n';
        }
        emit(payload, out_path);
        return kExitOk;
    }

    if (verify->parsed()) {
        const auto g = ktdom::parse_edge_list_text(ktdom::read_text_file(graph_path));
        const auto entries =
            ktdom::parse_set_file_text(ktdom::read_text_file(sets_path));
        int index = 0;
        for (const auto& entry : entries) {
            ++index;
            const auto s = ktdom::VertexSet::from_labels(entry.labels, g.order());
            const auto cov = ktdom::coverage(g, s);
            int worst = g.order() > 0 ? 0 : -1;
            for (int v = 1; v < g.order(); ++v) {
                if (cov[v] < cov[worst]) worst = v;
            }
            std::cout << "set " << index << ": ";
            if (worst >= 0 && cov[worst] >= k) {
                std::cout << "valid " << k << "TDS (size " << s.size() << ")\n";
            } else {
                std::cout << "not a " << k << "TDS (vertex " << worst + 1
                          << " has coverage " << cov[worst] << " < " << k << ")\n";
            }
        }
        return kExitOk;
    }

    if (bounds->parsed()) {
        const auto g = ktdom::build_harary({d, n});
        const auto b = ktdom::lower_bounds(g, k);
        std::cout << "lb_trivial=" << b.lb_trivial << '\n'
                  << "lb_degree=" << b.lb_degree << '\n'
                  << "lb_degree_sum=" << b.lb_degree_sum << '\n'
                  << "ub_trivial=" << b.ub_trivial << '\n';
        return kExitOk;
    }

    if (solve->parsed()) {
        const auto g = ktdom::build_harary({d, n});
        const auto res = ktdom::solve_exact(g, k, parse_method(method_name),
                                            std::chrono::milliseconds(budget_ms));
        std::cerr << "method=" << ktdom::to_string(res.method)
                  << " nodes=" << res.stats.nodes << " ms=" << res.stats.ms << '\n';
        if (!res.resolved) {
            std::cout << "unresolved lo=" << res.lo << " hi=" << res.hi << '\n';
            return kExitUnresolved;
        }
        std::cout << "gamma=" << res.gamma << '\n';
        std::cout << "witness=" << ktdom::format_set_line(res.witness.labels()) << '\n';
        return kExitOk;
    }

    // sweep
    sweep_opts.method = parse_method(method_name);
    sweep_opts.budget = std::chrono::milliseconds(sweep_budget_ms);
    if (format != "json" && format != "csv") {
        throw ktdom::ParameterError("unknown format: " + format + " (expected json|csv)");
    }
    const auto result = ktdom::sweep(sweep_opts);
    for (const auto& skip : result.skipped) {
        std::cerr << "skip d=" << skip.d << " n=" << skip.n << " k=" << skip.k << ": "
                  << skip.reason << '\n';
    }
    emit(format == "json" ? ktdom::sweep_to_json(result, !no_timing)
                          : ktdom::sweep_to_csv(result, !no_timing),
         out_path);
    const bool unresolved = std::any_of(
        result.reports.begin(), result.reports.end(), [](const auto& rep) {
            return rep.verdict == ktdom::Verdict::Unresolved;
        });
    return unresolved ? kExitUnresolved : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ktdom::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const ktdom::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParameter;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParameter;
    }
}
