#include "elimdual/cone.hpp"

#include "elimdual/dual.hpp"
#include "elimdual/fourier.hpp"
#include "elimdual/implicit.hpp"

namespace elimdual {

PrimalCone primal_cone(const System& primal) {
    const StandardShape shape = standard_shape(primal);
    PrimalCone cone;
    cone.system = System(primal.variables());
    std::string z_name = "z";
    while (primal.find_variable(z_name)) z_name += "_";
    cone.z = cone.system.add_variable(z_name);
    for (ConstraintId id : shape.main_rows) {
        const Constraint& row = primal.at(id);
        LinearExpr expr = row.expr;
        expr.add_term(cone.z, -row.rhs);
        cone.primal_rows.push_back(id);
        cone.cone_rows.push_back(
            cone.system.add(std::move(expr), Relation::kLe, Rational(0), Provenance::main(), row.label));
    }
    for (VarIndex v = 0; v < cone.system.num_variables(); ++v) cone.system.add_sign(v);
    return cone;
}

System recession_system(const System& system) {
    System out = system.empty_like();
    for (Constraint c : system.constraints()) {
        c.rhs = Rational(0);
        if (c.rel == Relation::kLt) c.rel = Relation::kLe;
        out.insert(std::move(c));
    }
    return out;
}

std::optional<Point> has_solution_at_infinity(const System& system) {
    const System recession = recession_system(system);
    for (VarIndex v = 0; v < system.num_variables(); ++v) {
        System up = recession;
        up.add(LinearExpr::variable(v, Rational(-1)), Relation::kLe, Rational(-1));
        const FeasibilityVerdict rising = feasibility(up);
        if (const auto* f = std::get_if<Feasible>(&rising)) return f->witness;
        if (system.sign_row(v)) continue;
        System down = recession;
        down.add(LinearExpr::variable(v), Relation::kLe, Rational(-1));
        const FeasibilityVerdict verdict = feasibility(down);
        if (const auto* f = std::get_if<Feasible>(&verdict)) return f->witness;
    }
    return std::nullopt;
}

bool is_bounded(const System& system) { return !has_solution_at_infinity(system).has_value(); }

System nonzero_point_probe(const System& cone) {
    if (!cone.is_homogeneous()) {
        throw Error(ErrorCode::kNotHomogeneous, "reduced-to-origin test needs a homogeneous system");
    }
    LinearExpr sum;
    for (VarIndex v = 0; v < cone.num_variables(); ++v) {
        if (!cone.sign_row(v)) {
            throw Error(ErrorCode::kUnsignedVariable,
                        "variable " + cone.variable_name(v) + " has no sign constraint");
        }
        sum.add_term(v, Rational(-1));
    }
    System probe = cone;
    probe.add(std::move(sum), Relation::kLe, Rational(-1), Provenance::main(), "nonzero");
    return probe;
}

bool is_reduced_to_origin(const System& cone) { return !is_feasible(feasibility(nonzero_point_probe(cone))); }

bool is_full_dimensional(const System& system) {
    return is_feasible(feasibility(all_strict(expand_equalities(system))));
}

}  // namespace elimdual
