#include "elimdual/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "elimdual/cone.hpp"
#include "elimdual/gauss.hpp"

namespace elimdual {

namespace {

constexpr GaussOptions kPipelineGauss{.allow_affine = true, .allow_zero_remainder = true};

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(sep, start), text.size());
        std::string part(text.substr(start, end - start));
        if (!part.empty()) out.push_back(std::move(part));
        start = end + 1;
    }
    return out;
}

PivotKind kind_of(const Constraint& row) {
    return starts_with(row.label, "sign-") ? PivotKind::kConvertedSign : PivotKind::kOriginalMain;
}

// Variables other than lambda_1 still present in the system.
std::vector<VarIndex> remaining_lambdas(const System& system, VarIndex lambda1) {
    std::set<VarIndex> vars;
    for (const auto& c : system.constraints()) {
        for (const auto& [v, coeff] : c.expr.terms()) {
            if (v != lambda1) vars.insert(v);
        }
    }
    return {vars.begin(), vars.end()};
}

std::optional<ConstraintId> preferred_pivot(const System& system, VarIndex var) {
    const std::vector<ConstraintId> rows = eligible_pivots(system, var);
    std::optional<ConstraintId> best;
    for (ConstraintId id : rows) {
        if (!best) {
            best = id;
            continue;
        }
        const bool cand_main = kind_of(system.at(id)) == PivotKind::kOriginalMain;
        const bool best_main = kind_of(system.at(*best)) == PivotKind::kOriginalMain;
        if (cand_main && !best_main) best = id;
        // rows are scanned in id order, so ties keep the smaller id
    }
    return best;
}

PipelineStep make_step(const System& current, VarIndex var, std::optional<ConstraintId> pivot) {
    PipelineStep step;
    step.variable = var;
    step.variable_name = current.variable_name(var);
    if (pivot) {
        const Constraint& row = current.at(*pivot);
        step.pivot = pivot;
        step.pivot_label = row.label;
        step.kind = kind_of(row);
        step.result = substitute_eliminate(current, var, *pivot, kPipelineGauss).after;
    } else {
        step.kind = PivotKind::kFallbackZero;
        step.pivot_label = "zero";
        step.result = fallback_zero(current, var);
    }
    return step;
}

std::string canonical_key(const System& system) {
    std::vector<std::string> rows;
    for (const auto& c : system.constraints()) {
        std::ostringstream os;
        os << (c.provenance.kind == ProvenanceKind::kExtension ? 'E'
               : c.provenance.kind == ProvenanceKind::kSign    ? 'S'
                                                               : 'R')
           << c.label;
        for (const auto& [v, coeff] : c.expr.terms()) os << ' ' << v << ':' << coeff;
        os << ' ' << to_string(c.rel) << ' ' << c.rhs;
        rows.push_back(os.str());
    }
    std::sort(rows.begin(), rows.end());
    std::string key;
    for (const auto& r : rows) key += r + ";";
    return key;
}

}  // namespace

// ------------------------------------------------------------------ PivotRule

PivotRule PivotRule::paper_sequence(std::vector<std::pair<std::string, std::string>> steps) {
    PivotRule rule;
    rule.kind = Kind::kPaperSequence;
    rule.sequence = std::move(steps);
    return rule;
}

PivotRule PivotRule::explicit_order(std::vector<std::string> names) {
    PivotRule rule;
    rule.kind = Kind::kExplicitOrder;
    rule.order = std::move(names);
    return rule;
}

PivotRule PivotRule::parse(std::string_view text) {
    if (text == "main-first") return main_rows_first();
    if (starts_with(text, "paper-seq:")) {
        std::vector<std::pair<std::string, std::string>> steps;
        for (const auto& item : split(text.substr(10), ',')) {
            const auto at = item.find('@');
            if (at == std::string::npos || at == 0 || at + 1 == item.size()) {
                throw Error(ErrorCode::kBadPivotRule, "expected VAR@ROW in pivot sequence, got '" + item + "'");
            }
            steps.emplace_back(item.substr(0, at), item.substr(at + 1));
        }
        if (steps.empty()) throw Error(ErrorCode::kBadPivotRule, "empty pivot sequence");
        return paper_sequence(std::move(steps));
    }
    if (starts_with(text, "order:")) return explicit_order(split(text.substr(6), ','));
    throw Error(ErrorCode::kBadPivotRule, "unknown pivot rule '" + std::string(text) + "'");
}

// ------------------------------------------------------------ working system

WorkingSystem build_working_system(const System& primal, const PipelineOptions& options) {
    WorkingSystem ws;
    ws.input = primal;
    ws.input_was_cone = primal.is_cone();
    if (primal.num_variables() == 0 && primal.empty()) {
        // Nothing to homogenize: the cone over the empty point has no z.
        ws.cone = primal;
    } else if (ws.input_was_cone) {
        if (!primal.is_homogeneous()) {
            throw Error(ErrorCode::kNotHomogeneous, "input flagged as a cone has a nonzero right-hand side");
        }
        standard_shape(primal);
        ws.cone = primal;
    } else {
        standard_shape(primal);
        if (!is_bounded(primal)) {
            throw Error(ErrorCode::kUnbounded, "the pipeline needs a bounded system (it has a solution at infinity)");
        }
        ws.cone = primal_cone(primal).system;
    }

    ws.augmented = System(ws.cone.variables());
    LinearExpr sum;
    for (VarIndex v = 0; v < ws.cone.num_variables(); ++v) sum.add_term(v, Rational(1));
    ws.augmented.add(sum, Relation::kLe, options.bound, Provenance::main(), "sum");
    for (const auto& c : ws.cone.constraints()) {
        ws.augmented.add(c.expr, c.rel, c.rhs, c.provenance.kind == ProvenanceKind::kSign ? Provenance::sign()
                                                                                          : Provenance::main(),
                         c.label);
    }
    ws.dual = strong_elementary_dual(ws.augmented, sum, options.bound);
    ws.working = ws.dual.system;
    ws.lambda1 = 0;
    return ws;
}

// ---------------------------------------------------------------- operations

const char* to_string(PivotKind kind) {
    switch (kind) {
        case PivotKind::kOriginalMain: return "original-main";
        case PivotKind::kConvertedSign: return "converted-sign";
        case PivotKind::kFallbackZero: return "fallback-zero";
    }
    return "?";
}

const char* to_string(Verdict verdict) {
    return verdict == Verdict::kSolvable ? "Solvable" : "Unsolvable";
}

bool Interval::is_point(const Rational& value) const {
    return !empty && lo && hi && *lo == value && *hi == value && !lo_open && !hi_open;
}

std::string Interval::str() const {
    if (empty) return "empty";
    std::string out = lo ? (lo_open ? "(" : "[") + lo->str() : "(-inf";
    out += ", ";
    out += hi ? hi->str() + (hi_open ? ")" : "]") : "+inf)";
    return out;
}

Interval terminal_interval(const System& system, VarIndex var) {
    Interval iv;
    auto tighten_hi = [&](const Rational& v, bool open) {
        if (!iv.hi || v < *iv.hi) {
            iv.hi = v;
            iv.hi_open = open;
        } else if (v == *iv.hi) {
            iv.hi_open = iv.hi_open || open;
        }
    };
    auto tighten_lo = [&](const Rational& v, bool open) {
        if (!iv.lo || v > *iv.lo) {
            iv.lo = v;
            iv.lo_open = open;
        } else if (v == *iv.lo) {
            iv.lo_open = iv.lo_open || open;
        }
    };
    for (const auto& c : system.constraints()) {
        if (!c.expr.without(var).is_zero()) {
            throw Error(ErrorCode::kInvalidArgument, "terminal system mentions variables besides " +
                                                         system.variable_name(var));
        }
        const Rational a = c.expr.coeff(var);
        if (a.is_zero()) {
            if (classify_zero_row(c) == ZeroRowKind::kContradiction) iv.empty = true;
            continue;
        }
        const Rational bound = c.rhs / a;
        const bool open = c.rel == Relation::kLt;
        if (c.rel == Relation::kEq) {
            tighten_lo(bound, false);
            tighten_hi(bound, false);
        } else if (a.sign() > 0) {
            tighten_hi(bound, open);
        } else {
            tighten_lo(bound, open);
        }
    }
    if (iv.lo && iv.hi && (*iv.lo > *iv.hi || (*iv.lo == *iv.hi && (iv.lo_open || iv.hi_open)))) {
        iv.empty = true;
    }
    if (iv.empty) {
        iv = Interval{};
        iv.empty = true;
    }
    return iv;
}

System fallback_zero(const System& system, VarIndex var) {
    const auto sign = system.sign_row(var);
    System out = system.empty_like();
    for (const auto& c : system.constraints()) {
        if (c.id == sign) continue;
        if (!c.expr.mentions(var)) {
            out.insert(c);
            continue;
        }
        out.add(c.expr.without(var), c.rel, c.rhs, Provenance::derived({c.id}), c.label);
    }
    return out;
}

std::vector<ConstraintId> eligible_pivots(const System& system, VarIndex var) {
    std::vector<ConstraintId> rows;
    for (const auto& c : system.constraints()) {
        if (c.provenance.kind == ProvenanceKind::kExtension || c.provenance.kind == ProvenanceKind::kSign) continue;
        if (c.expr.mentions(var)) rows.push_back(c.id);
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

PipelineTrace run(const System& primal, const PivotRule& rule, const PipelineOptions& options) {
    return run(build_working_system(primal, options), rule);
}

PipelineTrace run(WorkingSystem seed, const PivotRule& rule) {
    PipelineTrace trace;
    trace.seed = std::move(seed);
    const VarIndex lambda1 = trace.seed.lambda1;
    System current = trace.seed.working;

    auto lookup_var = [&](const std::string& name) {
        const auto v = current.find_variable(name);
        if (!v || *v == lambda1) {
            throw Error(ErrorCode::kBadPivotRule, "'" + name + "' is not an eliminable lambda");
        }
        const auto left = remaining_lambdas(current, lambda1);
        if (std::find(left.begin(), left.end(), *v) == left.end()) {
            throw Error(ErrorCode::kBadPivotRule, "'" + name + "' was already eliminated");
        }
        return *v;
    };
    auto advance = [&](VarIndex var, std::optional<ConstraintId> pivot) {
        trace.steps.push_back(make_step(current, var, pivot));
        current = trace.steps.back().result;
    };

    if (rule.kind == PivotRule::Kind::kPaperSequence) {
        for (const auto& [name, label] : rule.sequence) {
            const VarIndex var = lookup_var(name);
            const std::vector<ConstraintId> rows = eligible_pivots(current, var);
            if (label == "zero") {
                if (!rows.empty()) {
                    throw Error(ErrorCode::kBadPivotRule, "fallback for " + name + " while eligible rows exist");
                }
                advance(var, std::nullopt);
                continue;
            }
            std::optional<ConstraintId> pivot;
            for (ConstraintId id : rows) {
                if (current.at(id).label == label) {
                    pivot = id;
                    break;
                }
            }
            if (!pivot) {
                throw Error(ErrorCode::kBadPivotRule,
                            "no eligible row '" + label + "' mentions " + name + " at this step");
            }
            advance(var, pivot);
        }
    } else if (rule.kind == PivotRule::Kind::kExplicitOrder) {
        for (const auto& name : rule.order) {
            const VarIndex var = lookup_var(name);
            advance(var, preferred_pivot(current, var));
        }
    }
    for (;;) {
        const auto left = remaining_lambdas(current, lambda1);
        if (left.empty()) break;
        advance(left.front(), preferred_pivot(current, left.front()));
    }

    trace.terminal = current;
    trace.interval = terminal_interval(current, lambda1);
    trace.verdict = trace.interval.is_point(Rational(1)) ? Verdict::kSolvable : Verdict::kUnsolvable;
    return trace;
}

bool replay_trace(const PipelineTrace& trace) {
    const System* prev = &trace.seed.working;
    for (const auto& step : trace.steps) {
        const System again = step.pivot ? substitute_eliminate(*prev, step.variable, *step.pivot, kPipelineGauss).after
                                        : fallback_zero(*prev, step.variable);
        if (again.constraints() != step.result.constraints()) return false;
        prev = &step.result;
    }
    return prev->constraints() == trace.terminal.constraints();
}

// ------------------------------------------------------------------- explore

ExploreReport explore(const System& primal, std::size_t max_states, const PipelineOptions& options) {
    return explore(build_working_system(primal, options), max_states);
}

ExploreReport explore(const WorkingSystem& seed, std::size_t max_states) {
    using Outcomes = std::map<std::string, ExploreOutcome>;
    std::map<std::string, Outcomes> memo;
    const VarIndex lambda1 = seed.lambda1;
    std::size_t states = 0;

    std::function<const Outcomes&(const System&)> visit = [&](const System& system) -> const Outcomes& {
        const std::string key = canonical_key(system);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (++states > max_states) {
            throw Error(ErrorCode::kBoundExceeded,
                        "pivot tree exceeds " + std::to_string(max_states) + " distinct states");
        }
        Outcomes result;
        const auto left = remaining_lambdas(system, lambda1);
        if (left.empty()) {
            ExploreOutcome leaf;
            leaf.interval = terminal_interval(system, lambda1);
            leaf.verdict = leaf.interval.is_point(Rational(1)) ? Verdict::kSolvable : Verdict::kUnsolvable;
            result.emplace(leaf.interval.str(), std::move(leaf));
        }
        for (VarIndex var : left) {
            std::vector<std::optional<ConstraintId>> choices;
            for (ConstraintId id : eligible_pivots(system, var)) choices.emplace_back(id);
            if (choices.empty()) choices.emplace_back(std::nullopt);
            for (const auto& pivot : choices) {
                const PipelineStep step = make_step(system, var, pivot);
                const Outcomes& sub = visit(step.result);
                for (const auto& [iv, outcome] : sub) {
                    if (result.contains(iv)) continue;
                    ExploreOutcome o = outcome;
                    o.sequence.insert(o.sequence.begin(), ExploreMove{step.variable_name, step.pivot_label});
                    result.emplace(iv, std::move(o));
                }
            }
        }
        return memo.emplace(key, std::move(result)).first->second;
    };

    const Outcomes& all = visit(seed.working);
    ExploreReport report;
    report.states = states;
    std::set<Verdict> verdicts;
    for (const auto& [iv, outcome] : all) {
        report.outcomes.push_back(outcome);
        verdicts.insert(outcome.verdict);
    }
    report.pivot_sensitive = verdicts.size() > 1;
    return report;
}

std::string format_sequence(const std::vector<ExploreMove>& moves) {
    std::string out;
    for (const auto& m : moves) {
        if (!out.empty()) out += ",";
        out += m.variable + "@" + m.row;
    }
    return out;
}

}  // namespace elimdual
