#pragma once

#include <optional>
#include <vector>

#include "elimdual/system.hpp"

namespace elimdual {

/// Homogenization of a standard-shape primal: every main row L_i <= r_i
/// becomes L_i - r_i z <= 0, and z >= 0 joins the sign rows.
struct PrimalCone {
    System system;
    VarIndex z;
    std::vector<ConstraintId> primal_rows;  // cone main row i -> primal row
    std::vector<ConstraintId> cone_rows;
};

PrimalCone primal_cone(const System& primal);

/// {AX <= 0} with the original sign rows (strict rows relaxed, EQ kept).
System recession_system(const System& system);

/// Nonzero ray of the recession system, if any. Probes x_j >= 1 for each
/// variable and x_j <= -1 for variables without a sign row.
std::optional<Point> has_solution_at_infinity(const System& system);

bool is_bounded(const System& system);

/// The cone plus -sum(x) <= -1: feasible iff the cone has a nonzero point.
/// Needs a homogeneous, fully sign-constrained input.
System nonzero_point_probe(const System& cone);

/// Homogeneous, fully sign-constrained input; true iff the cone is {0}.
bool is_reduced_to_origin(const System& cone);

/// The all-strict form is feasible.
bool is_full_dimensional(const System& system);

}  // namespace elimdual
