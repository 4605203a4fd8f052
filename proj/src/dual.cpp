#include "elimdual/dual.hpp"

#include <algorithm>

#include "elimdual/fourier.hpp"
#include "elimdual/implicit.hpp"

namespace elimdual {

StandardShape standard_shape(const System& primal) {
    StandardShape shape;
    std::string missing;
    for (VarIndex v = 0; v < primal.num_variables(); ++v) {
        const auto row = primal.sign_row(v);
        if (!row) {
            missing += (missing.empty() ? "" : ", ") + primal.variable_name(v);
            continue;
        }
        shape.sign_rows.push_back(*row);
    }
    if (!missing.empty()) {
        throw Error(ErrorCode::kNotStandardShape, "missing sign constraint for: " + missing);
    }
    for (const auto& c : primal.constraints()) {
        if (c.rel != Relation::kLe) {
            throw Error(ErrorCode::kNotStandardShape,
                        std::string("standard shape needs <= rows; constraint ") +
                            std::to_string(id_value(c.id)) + " is " + to_string(c.rel));
        }
        if (std::find(shape.sign_rows.begin(), shape.sign_rows.end(), c.id) == shape.sign_rows.end()) {
            shape.main_rows.push_back(c.id);
        }
    }
    return shape;
}

namespace {

ElementaryDual build_dual(const System& primal, const LinearExpr& objective, std::optional<Rational> sigma,
                          bool strong) {
    const StandardShape shape = standard_shape(primal);
    const std::size_t m = shape.main_rows.size();
    const std::size_t n = primal.num_variables();

    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("l" + std::to_string(i + 1));
    const bool symbolic = strong && !sigma;

    ElementaryDual dual;
    dual.system = System(names);
    dual.strong = strong;
    dual.sigma = sigma;
    dual.primal_rows = shape.main_rows;
    if (symbolic) {
        for (VarIndex j = 0; j < n; ++j) {
            dual.primal_variable_columns.push_back(dual.system.add_variable(primal.variable_name(j)));
        }
    }

    for (VarIndex j = 0; j < n; ++j) {
        LinearExpr row;
        for (std::size_t i = 0; i < m; ++i) row.add_term(i, -primal.at(shape.main_rows[i]).expr.coeff(j));
        dual.variable_rows.push_back(dual.system.add(std::move(row), Relation::kLe, -objective.coeff(j),
                                                     Provenance::main(), "row-" + primal.variable_name(j)));
    }

    LinearExpr ext;
    for (std::size_t i = 0; i < m; ++i) ext.add_term(i, primal.at(shape.main_rows[i]).rhs);
    if (symbolic) {
        for (VarIndex j = 0; j < n; ++j) ext.add_term(dual.primal_variable_columns[j], -objective.coeff(j));
    }
    dual.extension = dual.system.add(std::move(ext), Relation::kLe, sigma.value_or(Rational(0)),
                                     Provenance::extension(), "ext");

    for (std::size_t i = 0; i < m; ++i) {
        dual.lambda_sign_rows.push_back(dual.system.add_sign(i, "sign-" + names[i]));
    }
    return dual;
}

void require_concrete(const ElementaryDual& dual) {
    if (!dual.primal_variable_columns.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "multiplier map needs a dual without primal columns");
    }
}

MultiplierVector primal_map(const System& primal, const ElementaryDual& dual, const Point& x,
                            const Rational& extension_weight, bool homogeneous) {
    require_concrete(dual);
    MultiplierVector lambda;
    for (VarIndex j = 0; j < dual.variable_rows.size(); ++j) lambda.set(dual.variable_rows[j], x.get(j));
    for (std::size_t i = 0; i < dual.primal_rows.size(); ++i) {
        const Constraint& row = primal.at(dual.primal_rows[i]);
        const Rational rhs = homogeneous ? Rational(0) : row.rhs;
        lambda.set(dual.lambda_sign_rows[i], rhs - x.dot(row.expr));
    }
    lambda.set(dual.extension, extension_weight);
    return lambda;
}

}  // namespace

ElementaryDual elementary_dual(const System& primal) {
    return build_dual(primal, LinearExpr{}, Rational(0), false);
}

ElementaryDual strong_elementary_dual(const System& primal, const LinearExpr& objective,
                                      std::optional<Rational> sigma) {
    return build_dual(primal, objective, std::move(sigma), true);
}

ExtensionStatus extension_status(const ElementaryDual& dual) {
    ImplicitProbe probe = is_implicit_equality(dual.system, dual.extension);
    if (probe.implicit) return ImplicitEquality{std::move(probe.certificate)};
    return NotImplicit{std::move(*probe.strict_witness)};
}

MultiplierVector multipliers_from_primal_solution(const System& primal, const ElementaryDual& dual,
                                                  const Point& x) {
    if (!satisfies_all(primal, x)) {
        throw Error(ErrorCode::kInvalidArgument, "point does not satisfy the primal");
    }
    return primal_map(primal, dual, x, Rational(1), false);
}

MultiplierVector multipliers_from_primal_ray(const System& primal, const ElementaryDual& dual,
                                             const Point& ray) {
    bool nonzero = false;
    for (const auto& c : primal.constraints()) {
        if (ray.dot(c.expr).sign() > 0) {
            throw Error(ErrorCode::kInvalidArgument, "point is not a ray of the recession cone");
        }
    }
    for (const auto& [v, value] : ray.values()) nonzero = nonzero || !value.is_zero();
    if (!nonzero) throw Error(ErrorCode::kInvalidArgument, "the origin is not a ray");
    return primal_map(primal, dual, ray, Rational(0), true);
}

bool dual_has_nonzero_solution(const ElementaryDual& dual) {
    System probe = dual.system;
    LinearExpr sum;
    for (VarIndex i = 0; i < dual.primal_rows.size(); ++i) sum.add_term(i, Rational(-1));
    probe.add(std::move(sum), Relation::kLe, Rational(-1));
    return is_feasible(feasibility(probe));
}

}  // namespace elimdual
