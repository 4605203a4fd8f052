#include "elimdual/report.hpp"

#include "elimdual/cone.hpp"

namespace elimdual {

Json envelope(const char* kind) { return Json{{"schema_version", kSchemaVersion}, {"kind", kind}}; }

std::vector<VarIndex> resolve_variables(const System& system, const std::vector<std::string>& names) {
    std::vector<VarIndex> out;
    for (const auto& name : names) {
        const auto v = system.find_variable(name);
        if (!v) throw Error(ErrorCode::kUnknownVariable, "unknown variable '" + name + "'");
        out.push_back(*v);
    }
    return out;
}

ElementaryDual build_dual(const System& primal, bool strong, const std::string& objective_text,
                          const std::string& sigma_text) {
    if (!strong) {
        if (!objective_text.empty() || !sigma_text.empty()) {
            throw Error(ErrorCode::kInvalidArgument, "objective and sigma need the strong dual");
        }
        return elementary_dual(primal);
    }
    LinearExpr objective;
    if (!objective_text.empty()) {
        objective = parse_expr(objective_text, primal);
    } else if (primal.objective()) {
        objective = *primal.objective();
    } else {
        throw Error(ErrorCode::kInvalidArgument, "strong dual needs an objective or a maximize: line");
    }
    std::optional<Rational> sigma;
    if (!sigma_text.empty()) sigma = Rational::parse(sigma_text);
    return strong_elementary_dual(primal, objective, sigma);
}

System cone_of(const System& primal) { return primal.is_cone() ? primal : primal_cone(primal).system; }

ConeAnalysis analyze_cone(const System& primal, const System& cone) {
    return {is_bounded(primal), is_reduced_to_origin(cone), is_full_dimensional(cone)};
}

Json check_report(const System& expanded, const FeasibilityVerdict& verdict) {
    Json j = envelope("check");
    j["system"] = to_json(expanded);
    j["verdict"] = to_json(verdict, expanded);
    return j;
}

Json fourier_report(const std::vector<std::string>& eliminated, const System& result) {
    Json j = envelope("fourier");
    j["eliminated"] = eliminated;
    j["text"] = print_system(result);
    j["system"] = to_json(result);
    return j;
}

Json dual_report(const System& primal, const ElementaryDual& dual) {
    Json j = envelope("dual");
    j["strong"] = dual.strong;
    j["sigma"] = dual.sigma ? Json(dual.sigma->str()) : Json(nullptr);
    Json origin = Json::array();
    for (std::size_t i = 0; i < dual.primal_rows.size(); ++i) {
        origin.push_back(Json{{"lambda", dual.system.variable_name(i)},
                              {"primal_row", id_value(dual.primal_rows[i])},
                              {"constraint", format_constraint(primal.at(dual.primal_rows[i]), primal)}});
    }
    j["origin"] = std::move(origin);
    j["text"] = print_system(dual.system, {.ge_orientation = true});
    j["system"] = to_json(dual.system);
    return j;
}

Json implicit_report(const System& expanded, const ImplicitReport& report) {
    Json j = envelope("implicit");
    j["feasible"] = report.feasible;
    Json ids = Json::array();
    for (ConstraintId id : report.implicit_ids) ids.push_back(id_value(id));
    j["implicit"] = std::move(ids);
    j["certificate"] = to_json(report.certificate, expanded);
    return j;
}

Json cone_report(const System& cone, const std::optional<ConeAnalysis>& analysis) {
    Json j = envelope("cone");
    j["text"] = print_system(cone);
    j["system"] = to_json(cone);
    if (analysis) {
        j["analysis"] = Json{{"bounded", analysis->bounded},
                             {"reduced_to_origin", analysis->reduced_to_origin},
                             {"full_dimensional", analysis->full_dimensional}};
    }
    return j;
}

Json solve9_report(const std::string& rule, const Rational& bound, const PipelineTrace& trace,
                   const std::optional<ExploreReport>& tree, bool include_systems) {
    Json j = envelope("solve9");
    j["rule"] = rule;
    j["bound"] = bound.str();
    j["trace"] = to_json(trace, include_systems);
    if (tree) j["explore"] = to_json(*tree);
    return j;
}

Json error_report(const Error& error) {
    Json j = envelope("error");
    j["code"] = to_string(error.code());
    j["message"] = error.what();
    return j;
}

}  // namespace elimdual
