#include "elimdual/implicit.hpp"

#include <algorithm>

#include "elimdual/fourier.hpp"

namespace elimdual {

System with_strict_rows(const System& system, const std::vector<ConstraintId>& ids) {
    System out = system.empty_like();
    for (Constraint c : system.constraints()) {
        if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) {
            if (c.rel != Relation::kLe) {
                throw Error(ErrorCode::kBadRelation,
                            "only <= rows can be made strict (constraint " + std::to_string(id_value(c.id)) + ")");
            }
            c.rel = Relation::kLt;
        }
        out.insert(std::move(c));
    }
    return out;
}

System all_strict(const System& system) {
    System out = system.empty_like();
    for (Constraint c : system.constraints()) {
        if (c.rel == Relation::kLe && !(c.expr.is_zero() && c.rhs.is_zero())) c.rel = Relation::kLt;
        out.insert(std::move(c));
    }
    return out;
}

ImplicitProbe is_implicit_equality(const System& input, ConstraintId id) {
    const System system = expand_equalities(input);
    if (system.at(id).rel != Relation::kLe) {
        throw Error(ErrorCode::kBadRelation, "implicit-equality test needs a <= row");
    }
    if (!is_feasible(feasibility(system))) {
        throw Error(ErrorCode::kInfeasibleSystem, "implicit equalities are undefined on an infeasible system");
    }
    const FeasibilityVerdict strict = feasibility(with_strict_rows(system, {id}));
    ImplicitProbe probe;
    if (const auto* f = std::get_if<Feasible>(&strict)) {
        probe.strict_witness = f->witness;
        return probe;
    }
    // The input is feasible, so the strict row must carry weight and the
    // combination is [0] < 0: a certificate of the original rows.
    probe.implicit = true;
    probe.certificate = std::get<Infeasible>(strict).certificate;
    return probe;
}

ImplicitReport implicit_set(const System& input) {
    const System system = expand_equalities(input);
    ImplicitReport report;
    report.feasible = is_feasible(feasibility(system));
    if (!report.feasible) return report;
    for (const auto& c : system.constraints()) {
        if (c.rel != Relation::kLe) continue;
        ImplicitProbe probe = is_implicit_equality(system, c.id);
        if (!probe.implicit) continue;
        report.implicit_ids.push_back(c.id);
        report.certificate += probe.certificate;
    }
    return report;
}

std::optional<MultiplierVector> nonzero_multiplier_exists(const System& system) {
    // mu (A | -r) = 0 has a nonzero solution mu >= 0 iff A x - r t < 0 has
    // no solution (Gordan); the Farkas certificate of that strict system is mu.
    System strict(system.variables());
    std::string t_name = "t";
    while (system.find_variable(t_name)) t_name += "_";
    const VarIndex t = strict.add_variable(t_name);
    for (const auto& c : system.constraints()) {
        if (c.rel != Relation::kLe) {
            throw Error(ErrorCode::kBadRelation, "multiplier existence is defined for <= rows only");
        }
        if (c.expr.is_zero() && c.rhs.is_zero()) return MultiplierVector{{c.id, Rational(1)}};
        LinearExpr e = c.expr;
        e.add_term(t, -c.rhs);
        Constraint row = c;
        row.expr = std::move(e);
        row.rhs = Rational(0);
        row.rel = Relation::kLt;
        strict.insert(std::move(row));
    }
    const FeasibilityVerdict verdict = feasibility(strict);
    if (is_feasible(verdict)) return std::nullopt;
    return std::get<Infeasible>(verdict).certificate;
}

}  // namespace elimdual
