#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "elimdual/system.hpp"

namespace elimdual {

/// Primal AX <= b, x >= 0 split into main rows and one sign row per variable.
struct StandardShape {
    std::vector<ConstraintId> main_rows;
    std::vector<ConstraintId> sign_rows;  // indexed by variable
};

/// Validates the shape and reports every variable lacking a sign row.
StandardShape standard_shape(const System& primal);

/// Dual system over lambda_1..lambda_m (variables "l1".."lm"), stored with
/// <= rows:
///   row-<x_j>:  -sum_i A_ij l_i <= -c_j      (A^T L >= c)
///   ext:         sum_i r_i l_i  <= sigma      (-sum r_i l_i >= -sigma)
///   sign-l<i>:  -l_i <= 0
/// The elementary dual has c = 0 and sigma = 0. When the strong dual is
/// built without sigma, the primal variables are appended to the table and
/// the extension reads sum r_i l_i - sum c_j x_j <= 0.
struct ElementaryDual {
    System system;
    ConstraintId extension;
    std::vector<ConstraintId> primal_rows;          // l_i -> primal main row
    std::vector<ConstraintId> variable_rows;        // primal x_j -> dual row-x_j
    std::vector<ConstraintId> lambda_sign_rows;     // l_i -> sign row
    std::vector<VarIndex> primal_variable_columns;  // symbolic strong dual only
    bool strong = false;
    std::optional<Rational> sigma;
};

ElementaryDual elementary_dual(const System& primal);

ElementaryDual strong_elementary_dual(const System& primal, const LinearExpr& objective,
                                      std::optional<Rational> sigma);

struct ImplicitEquality {
    MultiplierVector certificate;  // positive on the extension
};

struct NotImplicit {
    Point witness;  // dual-feasible, extension strictly slack
};

using ExtensionStatus = std::variant<ImplicitEquality, NotImplicit>;

/// Whether the extension is an implicit equality of the dual system. For
/// the elementary dual this coincides with primal solvability.
ExtensionStatus extension_status(const ElementaryDual& dual);

/// Primal-to-dual map for a solution: weight x_j on row-x_j, slack
/// r_i - L_i.x on sign-l_i, and 1 on the extension. On a strong dual with
/// sigma the result is a certificate exactly when c.x = sigma.
MultiplierVector multipliers_from_primal_solution(const System& primal, const ElementaryDual& dual,
                                                  const Point& x);

/// Same map for a ray of AX <= 0, x >= 0: slacks are -L_i.x and the
/// extension weight is 0.
MultiplierVector multipliers_from_primal_ray(const System& primal, const ElementaryDual& dual,
                                             const Point& ray);

/// The dual has a feasible point other than the origin.
bool dual_has_nonzero_solution(const ElementaryDual& dual);

}  // namespace elimdual
