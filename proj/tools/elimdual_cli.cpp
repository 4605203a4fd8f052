// elimdual: command-line front end.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "elimdual/cone.hpp"
#include "elimdual/dual.hpp"
#include "elimdual/fourier.hpp"
#include "elimdual/harness.hpp"
#include "elimdual/implicit.hpp"
#include "elimdual/io.hpp"
#include "elimdual/pipeline.hpp"
#include "elimdual/report.hpp"

using namespace elimdual;

namespace {

struct Common {
    bool json = false;
    bool quiet = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string point_text(const Point& p, const System& s) {
    std::string out;
    for (const auto& [v, value] : p.values()) {
        if (!out.empty()) out += ", ";
        out += s.variable_name(v) + " = " + value.str();
    }
    return out.empty() ? "(no variables)" : out;
}

std::string weights_text(const MultiplierVector& lambda, const System& s) {
    std::string out;
    for (const auto& [id, w] : lambda.entries()) {
        const Constraint& c = s.at(id);
        out += "  " + w.str() + " * [" + std::to_string(id_value(id)) + "] " + format_constraint(c, s) + "\n";
    }
    return out;
}

// ----------------------------------------------------------------- commands

int cmd_check(const std::string& file, const Common& common) {
    const System system = parse_system(read_input(file));
    const FeasibilityVerdict verdict = feasibility(system);
    const System expanded = expand_equalities(system);
    if (common.json) {
        emit(check_report(expanded, verdict));
    } else if (!common.quiet) {
        if (const auto* f = std::get_if<Feasible>(&verdict)) {
            std::cout << "feasible\nwitness: " << point_text(f->witness, system) << '\n';
        } else {
            const auto& inf = std::get<Infeasible>(verdict);
            std::cout << "infeasible\ncertificate:\n"
                      << weights_text(inf.certificate, expanded)
                      << "combination: " << format_constraint(combine(expanded, inf.certificate), expanded) << '\n';
        }
    }
    return is_feasible(verdict) ? 0 : 1;
}

int cmd_fourier(const std::string& file, const std::vector<std::string>& names, const Common& common) {
    const System system = parse_system(read_input(file));
    const EliminationResult result = eliminate_vars(expand_equalities(system), resolve_variables(system, names));
    if (common.json) {
        emit(fourier_report(names, result.system));
    } else if (!common.quiet) {
        std::cout << print_system(result.system);
    }
    return 0;
}

int cmd_dual(const std::string& file, bool strong, const std::string& objective_text,
             const std::string& sigma_text, const Common& common) {
    const System primal = parse_system(read_input(file));
    const ElementaryDual dual = build_dual(primal, strong, objective_text, sigma_text);
    if (common.json) {
        emit(dual_report(primal, dual));
    } else if (!common.quiet) {
        for (std::size_t i = 0; i < dual.primal_rows.size(); ++i) {
            std::cout << "# " << dual.system.variable_name(i) << " <- [" << id_value(dual.primal_rows[i]) << "] "
                      << format_constraint(primal.at(dual.primal_rows[i]), primal) << '\n';
        }
        std::cout << print_system(dual.system, {.ge_orientation = true});
    }
    return 0;
}

int cmd_implicit(const std::string& file, const Common& common) {
    const System system = parse_system(read_input(file));
    const ImplicitReport report = implicit_set(system);
    const System expanded = expand_equalities(system);
    if (common.json) {
        emit(implicit_report(expanded, report));
    } else if (!common.quiet) {
        if (!report.feasible) {
            std::cout << "system is infeasible\n";
            return 0;
        }
        if (report.implicit_ids.empty()) std::cout << "no implicit equalities\n";
        for (ConstraintId id : report.implicit_ids) {
            std::cout << "implicit: [" << id_value(id) << "] " << format_constraint(expanded.at(id), expanded) << '\n';
        }
        if (!report.certificate.is_trivial()) {
            std::cout << "certificate:\n" << weights_text(report.certificate, expanded);
        }
    }
    return 0;
}

int cmd_cone(const std::string& file, bool analyze, const Common& common) {
    const System primal = parse_system(read_input(file));
    const System cone = cone_of(primal);
    std::optional<ConeAnalysis> flags;
    if (analyze) flags = analyze_cone(primal, cone);
    if (common.json) {
        emit(cone_report(cone, flags));
    } else if (!common.quiet) {
        std::cout << print_system(cone);
        if (flags) {
            const auto yes = [](bool b) { return b ? "yes" : "no"; };
            std::cout << "# bounded: " << yes(flags->bounded) << "\n# full_dimensional: " << yes(flags->full_dimensional)
                      << "\n# reduced_to_origin: " << yes(flags->reduced_to_origin) << '\n';
        }
    }
    return 0;
}

int cmd_solve9(const std::string& file, const std::string& rule_text, const std::string& sigma_text,
               bool do_explore, bool with_trace, const Common& common) {
    const System primal = parse_system(read_input(file));
    PipelineOptions options;
    if (!sigma_text.empty()) options.bound = Rational::parse(sigma_text);
    const PivotRule rule = PivotRule::parse(rule_text);
    WorkingSystem ws = build_working_system(primal, options);
    std::optional<ExploreReport> tree;
    if (do_explore) tree = explore(ws, 20000);
    const PipelineTrace trace = run(std::move(ws), rule);

    if (common.json) {
        emit(solve9_report(rule_text, options.bound, trace, tree, with_trace));
    } else if (!common.quiet) {
        std::cout << "working system:\n" << print_system(trace.seed.working, {.ge_orientation = true});
        for (const auto& s : trace.steps) {
            std::cout << "step " << s.variable_name << " @ " << s.pivot_label << " (" << to_string(s.kind) << ")\n";
            if (with_trace) std::cout << print_system(s.result, {.ge_orientation = true});
        }
        std::cout << "terminal:\n" << print_system(trace.terminal, {.ge_orientation = true});
        std::cout << "interval: " << trace.interval.str() << "\nverdict: " << to_string(trace.verdict) << '\n';
        if (tree) {
            std::cout << "explore: " << tree->outcomes.size() << " distinct interval(s) over " << tree->states
                      << " states\n";
            for (const auto& o : tree->outcomes) {
                std::cout << "  " << o.interval.str() << " " << to_string(o.verdict) << " via "
                          << format_sequence(o.sequence) << '\n';
            }
            if (tree->pivot_sensitive) std::cout << "pivot-sensitive: verdicts differ across sequences\n";
        }
    }
    if (tree && tree->pivot_sensitive) return 3;
    return trace.verdict == Verdict::kSolvable ? 0 : 1;
}

int cmd_difftest(const GenParams& params, std::size_t trials, unsigned threads, bool timing,
                 const std::string& out_path, const Common& common) {
    const AggregateReport report = run_difftest(params, trials, threads);
    const std::string text = to_json(report, timing).dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + out_path + "'");
        out << text;
    }
    if (common.json) {
        std::cout << text;
    } else if (!common.quiet) {
        std::cout << "trials: " << report.trials << "\nagreements: " << report.agreements
                  << "\ndisagreements: " << report.disagreements() << "\nerrors: " << report.errors
                  << "\nexplored: " << report.explored << "\npivot-sensitive: " << report.pivot_sensitive << '\n';
        for (const auto& r : report.reports) {
            if (r.witness) {
                std::cout << "disagreement at trial " << r.index << ": oracle "
                          << (*r.oracle_feasible ? "feasible" : "infeasible") << ", pipeline "
                          << to_string(*r.pipeline) << " " << r.interval->str() << " via " << r.sequence << '\n';
            }
        }
    }
    if (!common.quiet) std::cerr << "wall clock: " << report.wall_clock_seconds << " s\n";
    return 0;
}

void add_common(CLI::App* sub, Common& common) {
    sub->add_flag("--json", common.json, "Machine-readable JSON output");
    sub->add_flag("-q,--quiet", common.quiet, "Suppress normal output (exit code only)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Fourier elimination, elementary duals and certificates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "elimdual 0.1.0");

    Common common;
    std::string file;

    auto* check = app.add_subcommand("check", "Feasibility with witness or Farkas certificate");
    check->add_option("FILE", file, "System file ('-' for stdin)")->required();
    add_common(check, common);

    std::vector<std::string> eliminate;
    auto* fourier = app.add_subcommand("fourier", "Project out variables by Fourier elimination");
    fourier->add_option("FILE", file)->required();
    fourier->add_option("--eliminate", eliminate, "Variables to eliminate, in order")->delimiter(',')->required();
    add_common(fourier, common);

    bool strong = false;
    std::string objective;
    std::string sigma;
    auto* dual = app.add_subcommand("dual", "Elementary dual (or strong dual)");
    dual->add_option("FILE", file)->required();
    dual->add_flag("--strong", strong, "Strong dual tied to an objective");
    dual->add_option("--objective", objective, "Objective expression, e.g. \"x + y\"");
    dual->add_option("--sigma", sigma, "Extension bound; symbolic when omitted");
    add_common(dual, common);

    auto* implicit = app.add_subcommand("implicit", "Implicit equalities with a certificate");
    implicit->add_option("FILE", file)->required();
    add_common(implicit, common);

    bool analyze = false;
    auto* cone = app.add_subcommand("cone", "Primal cone (homogenization)");
    cone->add_option("FILE", file)->required();
    cone->add_flag("--analyze", analyze, "Report bounded / reduced-to-origin / full-dimensional");
    add_common(cone, common);

    std::string rule = "main-first";
    bool do_explore = false;
    bool with_trace = false;
    auto* solve9 = app.add_subcommand("solve9", "Bounded-solvability pipeline on the lambda system");
    solve9->add_option("FILE", file)->required();
    solve9->add_option("--rule", rule, "main-first | paper-seq:l3@row-x,... | order:l3,l2");
    solve9->add_option("--sigma", sigma, "Bound of the added sum(x) <= sigma row (default 2)");
    solve9->add_flag("--explore", do_explore, "Enumerate every pivot sequence");
    solve9->add_flag("--trace", with_trace, "Include intermediate systems");
    add_common(solve9, common);

    GenParams params;
    std::size_t trials = 100;
    std::string mode = "box";
    unsigned threads = 1;
    bool timing = false;
    std::string out_path;
    auto* difftest = app.add_subcommand("difftest", "Seeded differential test of solve9 against the oracle");
    difftest->add_option("--seed", params.seed, "64-bit seed")->required();
    difftest->add_option("--trials", trials, "Number of trials")->required();
    difftest->add_option("--max-vars", params.max_vars, "Maximum variables per system");
    difftest->add_option("--max-cons", params.max_cons, "Maximum main rows per system");
    difftest->add_option("--mode", mode, "Boundedness mode: box | filter");
    difftest->add_option("--threads", threads, "Worker threads (output is independent of this)");
    difftest->add_flag("--timing", timing, "Add wall_clock_seconds to the JSON");
    difftest->add_option("--out", out_path, "Also write the JSON report to this file");
    add_common(difftest, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(file, common);
        if (*fourier) return cmd_fourier(file, eliminate, common);
        if (*dual) return cmd_dual(file, strong, objective, sigma, common);
        if (*implicit) return cmd_implicit(file, common);
        if (*cone) return cmd_cone(file, analyze, common);
        if (*solve9) return cmd_solve9(file, rule, sigma, do_explore, with_trace, common);
        if (*difftest) {
            params.mode = parse_bound_mode(mode);
            return cmd_difftest(params, trials, threads, timing, out_path, common);
        }
    } catch (const Error& e) {
        if (common.json) emit(error_report(e));
        std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return 2;
    }
    return 2;
}
