#include "elimdual/harness.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "elimdual/cone.hpp"
#include "elimdual/fourier.hpp"

namespace elimdual {

const char* to_string(BoundMode mode) { return mode == BoundMode::kBox ? "box" : "filter"; }

BoundMode parse_bound_mode(std::string_view text) {
    if (text == "box") return BoundMode::kBox;
    if (text == "filter") return BoundMode::kFilter;
    throw Error(ErrorCode::kInvalidArgument, "mode must be box or filter, got '" + std::string(text) + "'");
}

void GenParams::validate() const {
    if (max_vars == 0) throw Error(ErrorCode::kInvalidArgument, "max_vars must be at least 1");
    if (max_cons == 0) throw Error(ErrorCode::kInvalidArgument, "max_cons must be at least 1");
    if (coeff_min > coeff_max) throw Error(ErrorCode::kInvalidArgument, "empty coefficient range");
    if (coeff_min == 0 && coeff_max == 0) throw Error(ErrorCode::kInvalidArgument, "coefficient range is {0}");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : engine_(splitmix64(splitmix64(seed) ^ trial)) {}

long TrialRng::uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw = next();
    while (draw >= limit) draw = next();
    return lo + static_cast<long>(draw % span);
}

namespace {

System fresh_system(TrialRng& rng, const GenParams& params) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(params.max_vars)));
    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j) names.push_back("x" + std::to_string(j + 1));
    return System(std::move(names));
}

LinearExpr random_row(TrialRng& rng, const GenParams& params, std::size_t n) {
    for (;;) {
        LinearExpr row;
        for (VarIndex j = 0; j < n; ++j) row.add_term(j, Rational(rng.uniform(params.coeff_min, params.coeff_max)));
        if (!row.is_zero()) return row;
    }
}

void add_main_rows(TrialRng& rng, const GenParams& params, System& system) {
    const long m = rng.uniform(1, static_cast<long>(params.max_cons));
    for (long i = 0; i < m; ++i) {
        LinearExpr row = random_row(rng, params, system.num_variables());
        system.add(std::move(row), Relation::kLe, Rational(rng.uniform(params.coeff_min, params.coeff_max)));
    }
}

void add_signs(System& system) {
    for (VarIndex j = 0; j < system.num_variables(); ++j) system.add_sign(j);
}

}  // namespace

System generate_standard(TrialRng& rng, const GenParams& params) {
    params.validate();
    System system = fresh_system(rng, params);
    add_main_rows(rng, params, system);
    add_signs(system);
    return system;
}

System generate_bounded(TrialRng& rng, const GenParams& params) {
    params.validate();
    if (params.mode == BoundMode::kBox) {
        System system = fresh_system(rng, params);
        add_main_rows(rng, params, system);
        for (VarIndex j = 0; j < system.num_variables(); ++j) {
            system.add(LinearExpr::variable(j), Relation::kLe, Rational(rng.uniform(1, 5)));
        }
        add_signs(system);
        return system;
    }
    for (int attempt = 0; attempt < 1000; ++attempt) {
        System system = generate_standard(rng, params);
        if (is_bounded(system)) return system;
    }
    throw Error(ErrorCode::kGeneratorExhausted, "no bounded system after 1000 draws");
}

System generate_system(TrialRng& rng, const GenParams& params) {
    params.validate();
    System system = fresh_system(rng, params);
    const long m = rng.uniform(1, static_cast<long>(params.max_cons));
    for (long i = 0; i < m; ++i) {
        LinearExpr row = random_row(rng, params, system.num_variables());
        const long r = rng.uniform(0, 9);
        const Relation rel = r == 0 ? Relation::kEq : (r == 1 ? Relation::kLt : Relation::kLe);
        system.add(std::move(row), rel, Rational(rng.uniform(params.coeff_min, params.coeff_max)));
    }
    return system;
}

// ------------------------------------------------------------------- trials

System oracle_input(const System& system) { return system.is_cone() ? nonzero_point_probe(system) : system; }

TrialReport evaluate_trial(const System& system, std::size_t index, const TrialOptions& options) {
    TrialReport report;
    report.index = index;
    report.system = print_system(system);
    try {
        const System checked = oracle_input(system);
        const System expanded = expand_equalities(checked);
        const FeasibilityVerdict verdict = feasibility(checked);
        report.oracle_feasible = is_feasible(verdict);
        if (const auto* f = std::get_if<Feasible>(&verdict)) {
            report.oracle_certified = satisfies_all(checked, f->witness);
        } else {
            report.oracle_certified = check_farkas_certificate(expanded, std::get<Infeasible>(verdict).certificate);
        }

        WorkingSystem ws = build_working_system(system, {.bound = options.bound});
        report.lambdas = ws.dual.primal_rows.size();
        std::optional<ExploreReport> tree;
        if (report.lambdas <= options.explore_max_lambdas) {
            try {
                tree = explore(ws, options.explore_max_states);
                report.explored = true;
                report.pivot_sensitive = tree->pivot_sensitive;
                report.distinct_intervals = tree->outcomes.size();
            } catch (const Error& e) {
                if (e.code() != ErrorCode::kBoundExceeded) throw;
            }
        }
        const PipelineTrace trace = run(std::move(ws), options.rule);
        report.pipeline = trace.verdict;
        report.interval = trace.interval;
        std::vector<ExploreMove> moves;
        for (const auto& s : trace.steps) moves.push_back({s.variable_name, s.pivot_label});
        report.sequence = format_sequence(moves);
        report.agreement = *report.oracle_feasible == (trace.verdict == Verdict::kSolvable);

        if (!report.agreement) {
            Json w{{"oracle", to_json(verdict, expanded)}, {"trace", to_json(trace, false)}};
            if (tree) w["explore"] = to_json(*tree);
            report.witness = std::move(w);
        }
    } catch (const Error& e) {
        report.error = std::string(to_string(e.code())) + ": " + e.what();
        report.agreement = false;
    }
    return report;
}

TrialReport run_trial(const GenParams& params, std::size_t index) {
    TrialRng rng(params.seed, index);
    try {
        // Evaluate the re-parsed text so the recorded file replays exactly.
        const System system = parse_system(print_system(generate_bounded(rng, params)));
        return evaluate_trial(system, index, {.bound = params.bound});
    } catch (const Error& e) {
        TrialReport report;
        report.index = index;
        report.error = std::string(to_string(e.code())) + ": " + e.what();
        return report;
    }
}

AggregateReport run_difftest(const GenParams& params, std::size_t trials, unsigned threads) {
    params.validate();
    const auto start = std::chrono::steady_clock::now();
    AggregateReport agg;
    agg.params = params;
    agg.trials = trials;
    agg.reports.resize(trials);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < trials; i = next++) agg.reports[i] = run_trial(params, i);
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const auto& r : agg.reports) {
        if (!r.error.empty()) {
            ++agg.errors;
            continue;
        }
        if (r.agreement) ++agg.agreements;
        if (r.explored) ++agg.explored;
        if (r.pivot_sensitive) ++agg.pivot_sensitive;
    }
    agg.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return agg;
}

bool replay_disagreement(const TrialReport& report, const Rational& bound) {
    if (!report.error.empty() || !report.oracle_feasible || !report.pipeline) return false;
    const System system = parse_system(report.system);
    const bool feasible = is_feasible(feasibility(oracle_input(system)));
    const PivotRule rule =
        report.sequence.empty() ? PivotRule::main_rows_first() : PivotRule::parse("paper-seq:" + report.sequence);
    const PipelineTrace trace = run(system, rule, {.bound = bound});
    return feasible == *report.oracle_feasible && trace.verdict == *report.pipeline &&
           trace.interval == *report.interval;
}

// --------------------------------------------------------------------- JSON

Json to_json(const GenParams& params) {
    return Json{{"max_vars", params.max_vars},   {"max_cons", params.max_cons}, {"coeff_min", params.coeff_min},
                {"coeff_max", params.coeff_max}, {"mode", to_string(params.mode)}, {"seed", params.seed},
                {"bound", params.bound.str()}};
}

Json to_json(const TrialReport& r) {
    Json out{{"index", r.index}, {"system", r.system}};
    if (!r.error.empty()) {
        out["error"] = r.error;
        return out;
    }
    out["oracle"] = *r.oracle_feasible ? "feasible" : "infeasible";
    out["oracle_certified"] = r.oracle_certified;
    out["pipeline"] = to_string(*r.pipeline);
    out["interval"] = r.interval->str();
    out["sequence"] = r.sequence;
    out["lambdas"] = r.lambdas;
    out["explored"] = r.explored;
    if (r.explored) {
        out["pivot_sensitive"] = r.pivot_sensitive;
        out["distinct_intervals"] = r.distinct_intervals;
    }
    out["agreement"] = r.agreement;
    return out;
}

Json to_json(const AggregateReport& report, bool include_timing) {
    Json out{{"schema_version", kSchemaVersion},
             {"kind", "difftest"},
             {"params", to_json(report.params)},
             {"trials", report.trials},
             {"agreements", report.agreements},
             {"disagreements", report.disagreements()},
             {"errors", report.errors}};
    if (report.trials > 0) out["agreement_rate"] = Rational(static_cast<long>(report.agreements), static_cast<long>(report.trials)).str();
    out["explored"] = report.explored;
    out["pivot_sensitive"] = report.pivot_sensitive;
    Json witnesses = Json::array();
    Json trials = Json::array();
    for (const auto& r : report.reports) {
        trials.push_back(to_json(r));
        if (r.witness) {
            Json w = to_json(r);
            w["witness"] = *r.witness;
            witnesses.push_back(std::move(w));
        }
    }
    out["disagreement_witnesses"] = std::move(witnesses);
    out["trial_reports"] = std::move(trials);
    if (include_timing) out["wall_clock_seconds"] = report.wall_clock_seconds;
    return out;
}

}  // namespace elimdual
