#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "elimdual/dual.hpp"
#include "elimdual/fourier.hpp"
#include "elimdual/implicit.hpp"
#include "elimdual/pipeline.hpp"
#include "elimdual/system.hpp"

namespace elimdual {

/// Parses the line-oriented system format:
///
///   # comment
///   vars: x y            (required, first directive)
///   maximize: x + y      (optional)
///   cone                 (optional; input is already homogeneous)
///   -x + 1/2*y <= 2      (relations <=, >=, =, <, >)
///   nonneg: all          (or a list of names)
///
/// Errors carry "line L, column C".
System parse_system(std::string_view text);

/// Parses an expression such as "x - 3/2*y" over the system's variables.
LinearExpr parse_expr(std::string_view text, const System& system);

struct PrintOptions {
    /// Print rows as -L >= -r (dual systems read naturally that way).
    bool ge_orientation = false;
};

std::string format_expr(const LinearExpr& expr, const System& system);
std::string format_constraint(const Constraint& c, const System& system, PrintOptions options = {});

/// Canonical text: header, rows in order, sign rows folded into "nonneg:".
std::string print_system(const System& system, PrintOptions options = {});

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rational& q);
Json to_json(const Constraint& c, const System& system);
Json to_json(const System& system);
Json to_json(const MultiplierVector& lambda, const System& system);
Json to_json(const Point& point, const System& system);
Json to_json(const Interval& interval);
Json to_json(const FeasibilityVerdict& verdict, const System& system);
Json to_json(const PipelineTrace& trace, bool include_systems);
Json to_json(const ExploreReport& report);

}  // namespace elimdual
