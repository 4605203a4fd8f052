#pragma once

#include <set>
#include <variant>
#include <vector>

#include "elimdual/system.hpp"

namespace elimdual {

/// One derived row: id and the positive combination of parents producing it.
struct DerivationRecord {
    ConstraintId id;
    std::vector<std::pair<ConstraintId, Rational>> parents;  // coefficients > 0
};

struct EliminationStep {
    VarIndex variable;
    std::vector<DerivationRecord> records;
};

/// Replayable record of Fourier-Motzkin steps. Rows without a record are
/// input rows (or rows copied through unchanged).
struct EliminationTrace {
    std::vector<EliminationStep> steps;

    void append(const EliminationTrace& other);
    [[nodiscard]] const DerivationRecord* find(ConstraintId id) const;
};

struct Feasible {
    Point witness;
};

struct Infeasible {
    MultiplierVector certificate;  // over input constraint ids
    ConstraintId contradiction;    // the derived [0] <= r (r < 0) row
};

using FeasibilityVerdict = std::variant<Feasible, Infeasible>;

inline bool is_feasible(const FeasibilityVerdict& v) { return std::holds_alternative<Feasible>(v); }

struct EliminationResult {
    System system;
    EliminationTrace trace;
};

/// Eliminates one variable. Rows not mentioning it are copied through with
/// their id; every pair (positive, negative coefficient) yields a derived row
/// scaled to primitive integer coefficients. Tautological zero rows are
/// dropped and exact duplicates merged.
EliminationResult eliminate_var(const System& system, VarIndex var);

/// Eliminates variables in the given order, stopping early at the first
/// contradiction row.
EliminationResult eliminate_vars(const System& system, const std::vector<VarIndex>& order);

/// Decides feasibility by eliminating variables in ascending index order (or
/// the given order). EQ rows are expanded first; certificates then refer to
/// the expanded ids.
FeasibilityVerdict feasibility(const System& system);
FeasibilityVerdict feasibility(const System& system, const std::vector<VarIndex>& order);

/// Projection onto the kept variables (EQ rows expanded first); the
/// variable table is unchanged.
System project(const System& system, const std::set<VarIndex>& keep);

/// Expands a derived row back into nonnegative weights over rows without a
/// derivation record.
MultiplierVector farkas_from_trace(const EliminationTrace& trace, ConstraintId contradiction);

}  // namespace elimdual
