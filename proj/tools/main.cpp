// msearch: build, evaluate, and audit multimodal line-search strategies.
//
// Exit codes: 0 success, 1 validation failure, 2 audit violation,
// 3 I/O or parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "msearch/analysis.hpp"
#include "msearch/io.hpp"
#include "msearch/solver.hpp"
#include "msearch/strategies.hpp"

namespace {

using namespace msearch;

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path);
}

int cmd_table(int p_max, const std::string& out) {
    write_text(out, table_to_csv(p_max));
    return 0;
}

int cmd_params(int p, std::optional<double> eps) {
    std::cout << params_to_json(p, eps);
    return 0;
}

int cmd_cells(int p, double eps, std::optional<double> c, double x_init, double delta) {
    const double target = c ? *c : optimal_cr(p);
    const CompliantPlan plan = compliant_plan(x_init, delta, p, target, eps);
    std::cout << "{\n  \"p\": " << p << ",\n  \"c\": " << target << ",\n  \"eps\": " << eps
              << ",\n  \"x_init\": " << x_init << ",\n  \"delta\": " << delta
              << ",\n  \"p_prime\": " << plan.p_prime << ",\n  \"first_width\": "
              << plan.first_width << ",\n  \"ratio\": " << plan.ratio << ",\n  \"n\": " << plan.n
              << "\n}\n";
    return 0;
}

int cmd_simulate(int p, const std::string& variant_name, std::optional<double> eps, int rounds,
                 std::optional<double> a_override, std::optional<double> r_override,
                 const std::string& out) {
    const Variant variant = variant_from_string(variant_name);
    StrategyParams params = make_params(p, variant, eps);
    if (a_override) {
        if (params.practical())
            throw std::invalid_argument("practical variants always use the optimal parameters");
        params.a = *a_override;
    }
    if (r_override) {
        if (variant != Variant::even_optimal)
            throw std::invalid_argument("--r applies only to the even_optimal variant");
        params.r = *r_override;
    }
    const Trajectory traj = build_strategy(params, rounds);
    write_text(out, trace_to_jsonl(TraceHeader::from_params(params, rounds), traj));
    return 0;
}

int cmd_evaluate(const std::string& trace_path, std::optional<int> rounds_opt, double eta,
                 int grid_per_round, const std::string& out) {
    const TraceFile trace = load_trace(trace_path);
    const StrategyParams params = trace.header.to_params();
    const int rounds = rounds_opt.value_or(trace.header.rounds);
    if (rounds < 2 || rounds > trace.header.rounds)
        throw std::invalid_argument("rounds must lie in [2, header rounds]");
    auto targets = worst_case_targets(params, rounds, eta);
    if (rounds > 2 && grid_per_round > 0) {
        const auto grid = grid_targets(params, rounds - 2, grid_per_round);
        targets.insert(targets.end(), grid.begin(), grid.end());
    }
    CrReport report = empirical_cr(trace.trajectory, params, std::move(targets));
    report.rounds_used = rounds;
    write_text(out, report_to_json(report));
    std::cerr << "evaluated " << report.targets.size() << " targets: empirical sup "
              << report.empirical_sup << ", analytic limit " << report.analytic_limit << "\n";
    return 0;
}

int cmd_audit(const std::string& trace_path, std::optional<double> claimed_cr) {
    const TraceFile trace = load_trace(trace_path);
    const StrategyParams params = trace.header.to_params();
    const double claimed = claimed_cr.value_or(analytic_cr_limit(params));
    const WitnessSequences w =
        extract_witness(trace.trajectory, trace.trajectory.duration());
    const bool odd = trace.header.p % 2 == 1;
    AuditReport odd_rep;
    if (odd) odd_rep = audit_odd_lower_bound(w, trace.header.p);
    const AuditReport growth_rep = audit_min_growth(w, claimed);
    std::cout << audit_to_json(w, odd_rep, growth_rep, odd, claimed);
    const bool pass = (!odd || odd_rep.pass) && growth_rep.pass;
    return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multimodal line-search strategies: tables, traces, evaluation, audits"};
    app.require_subcommand(1);

    int table_pmax = 16;
    std::string table_out = "-";
    auto* table = app.add_subcommand("table", "optimal competitive ratios as CSV");
    table->add_option("p_max", table_pmax, "largest mode count")->check(CLI::PositiveNumber);
    table->add_option("-o,--out", table_out, "output path (default stdout)");

    int params_p = 1;
    std::optional<double> params_eps;
    auto* params = app.add_subcommand("params", "optimal strategy parameters as JSON");
    params->add_option("-p,--modes", params_p, "mode count")->required()->check(
        CLI::PositiveNumber);
    params->add_option("--eps", params_eps, "approximation margin to report");

    int cells_p = 1;
    double cells_eps = 0.1, cells_x = 1.0, cells_delta = 1.0;
    std::optional<double> cells_c;
    auto* cells = app.add_subcommand("cells", "compliant cell schedule for one call");
    cells->add_option("-p,--modes", cells_p, "mode count")->required()->check(CLI::PositiveNumber);
    cells->add_option("--eps", cells_eps, "approximation margin")->required();
    cells->add_option("--c", cells_c, "target ratio (default: optimal for p)");
    cells->add_option("--x-init", cells_x, "start coordinate (default 1)");
    cells->add_option("--delta", cells_delta, "interval length")->required();

    int sim_p = 1, sim_rounds = 8;
    std::string sim_variant, sim_out;
    std::optional<double> sim_eps, sim_a, sim_r;
    auto* simulate = app.add_subcommand("simulate", "build a strategy trace file");
    simulate->add_option("-p,--modes", sim_p, "mode count")->required()->check(
        CLI::PositiveNumber);
    simulate->add_option("--variant", sim_variant,
                         "odd_optimal | even_optimal | practical_odd | practical_even")
        ->required();
    simulate->add_option("--eps", sim_eps, "approximation margin (practical variants)");
    simulate->add_option("--rounds", sim_rounds, "rounds to generate")->required()->check(
        CLI::PositiveNumber);
    simulate->add_option("--a", sim_a, "override the growth factor");
    simulate->add_option("--r", sim_r, "override the split coefficient (even_optimal)");
    simulate->add_option("-o,--out", sim_out, "trace path")->required();

    std::string eval_trace, eval_out = "-";
    std::optional<int> eval_rounds;
    double eval_eta = 1e-9;
    int eval_grid = 1000;
    auto* evaluate = app.add_subcommand("evaluate", "replay a trace and report ratios");
    evaluate->add_option("trace", eval_trace, "trace file")->required();
    evaluate->add_option("--rounds", eval_rounds, "rounds of targets (default: header rounds)");
    evaluate->add_option("--eta", eval_eta, "relative offset of the critical targets");
    evaluate->add_option("--grid", eval_grid, "grid targets per round (0 disables)");
    evaluate->add_option("-o,--out", eval_out, "report path (default stdout)");

    std::string audit_trace;
    std::optional<double> audit_cr;
    auto* audit = app.add_subcommand("audit", "check lower-bound necessary conditions");
    audit->add_option("trace", audit_trace, "trace file")->required();
    audit->add_option("--claimed-cr", audit_cr,
                      "ratio to audit against (default: analytic limit of the header)");

    try {
        app.parse(argc, argv);
        if (table->parsed()) return cmd_table(table_pmax, table_out);
        if (params->parsed()) return cmd_params(params_p, params_eps);
        if (cells->parsed()) return cmd_cells(cells_p, cells_eps, cells_c, cells_x, cells_delta);
        if (simulate->parsed())
            return cmd_simulate(sim_p, sim_variant, sim_eps, sim_rounds, sim_a, sim_r, sim_out);
        if (evaluate->parsed())
            return cmd_evaluate(eval_trace, eval_rounds, eval_eta, eval_grid, eval_out);
        if (audit->parsed()) return cmd_audit(audit_trace, audit_cr);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const msearch::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 1;
    } catch (const msearch::invalid_trace& e) {
        std::cerr << "invalid trace: " << e.what() << "\n";
        return 1;
    } catch (const msearch::insufficient_horizon& e) {
        std::cerr << "insufficient horizon: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
