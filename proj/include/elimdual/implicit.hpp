#pragma once

#include <optional>
#include <vector>

#include "elimdual/system.hpp"

namespace elimdual {

struct ImplicitProbe {
    bool implicit = false;
    /// When implicit: valid certificate with positive weight on the target.
    MultiplierVector certificate;
    /// When not implicit: a point satisfying the target strictly.
    std::optional<Point> strict_witness;
};

/// A row is an implicit equality iff the system with that row made strict
/// is infeasible. The strict system's Farkas certificate is the multiplier
/// certificate. Throws Error(kInfeasibleSystem) on an infeasible system and
/// Error(kBadRelation) when the target is not a <= row.
ImplicitProbe is_implicit_equality(const System& system, ConstraintId id);

struct ImplicitReport {
    std::vector<ConstraintId> implicit_ids;
    MultiplierVector certificate;  // sum of the per-row certificates
    bool feasible = false;
};

/// Probes every <= row. Infeasible input yields feasible = false and an
/// empty set.
ImplicitReport implicit_set(const System& system);

/// Nonzero lambda >= 0 with sum(lambda_i L_i) = [0] and sum(lambda_i r_i) = 0.
/// Decided on the homogenized strict system L_i - r_i t < 0 over the primal
/// variables plus t: it is infeasible exactly when such a lambda exists, and
/// its Farkas certificate is one. Requires <= rows only.
std::optional<MultiplierVector> nonzero_multiplier_exists(const System& system);

/// Copy of the system with the given rows made strict.
System with_strict_rows(const System& system, const std::vector<ConstraintId>& ids);

/// Copy with every <= row made strict except tautologies [0] <= 0.
System all_strict(const System& system);

}  // namespace elimdual
