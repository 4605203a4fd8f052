#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "elimdual/system.hpp"

namespace elimdual {

struct GaussOptions {
    /// Accept rows with nonzero rhs (the constant is treated as one more
    /// column of L).
    bool allow_affine = false;
    /// Accept a pivot whose remainder L_0 (and rhs) is zero; the substitution
    /// then fixes the variable to 0.
    bool allow_zero_remainder = false;
};

/// Grouping of rows around a pivot a_0 x_0 + L_0 <= 0. `same_sign` rows have
/// an x_0 coefficient of the pivot's sign, `opposite` rows the other sign.
/// Scales are the absolute x_0 coefficients, so dividing a row by its scale
/// brings the x_0 coefficient to +1 or -1.
struct PivotClassification {
    VarIndex variable = 0;
    ConstraintId pivot{};
    Rational pivot_coefficient;  // signed a_0 as stored
    std::vector<ConstraintId> same_sign;
    std::vector<ConstraintId> opposite;
    std::vector<ConstraintId> free_rows;
    std::optional<ConstraintId> variable_sign_row;  // -x_0 <= 0, promoted on substitution
    std::vector<ConstraintId> other_sign_rows;
    std::map<ConstraintId, Rational> scale;
};

PivotClassification classify(const System& system, VarIndex var, ConstraintId pivot,
                             GaussOptions options = {});

/// Result of substituting x_0 = (r_0 - L_0) / a_0 into every other row.
/// Rows are stored as obtained by direct substitution (each equals its
/// +/-1-normalized form times the row's scale); unchanged rows keep their
/// id, every rewritten row gets a fresh id with derived provenance and
/// keeps its label.
struct SubstitutionRecord {
    PivotClassification classification;
    LinearExpr substitution;  // x_0 = substitution + substitution_constant
    Rational substitution_constant;
    std::map<ConstraintId, ConstraintId> new_to_old;
    std::optional<ConstraintId> promoted_row;  // image of the x_0 sign row
    System before;
    System after;
};

SubstitutionRecord substitute_eliminate(const System& system, VarIndex var, ConstraintId pivot,
                                        GaussOptions options = {});

/// Re-applies the recorded substitution to `before`.
System replay(const SubstitutionRecord& record);

/// Carries a certificate of the old system to the new one: each rewritten
/// row inherits its source's weight and the promoted row inherits s_0.
/// Throws Error(kInvalidCertificate) if mu is not a certificate of `before`.
MultiplierVector transfer_multipliers(const SubstitutionRecord& record, const MultiplierVector& mu);

/// Weights relative to the +/-1-normalized rows: a_i mu_i on same-sign
/// rows, a_j mu_j on opposite rows, unchanged elsewhere.
MultiplierVector normalized_row_weights(const SubstitutionRecord& record, const MultiplierVector& mu_new);

struct Legitimate {
    MultiplierVector multipliers;  // over `before`
    Rational pivot_multiplier;
};

struct Parasite {
    Rational pivot_multiplier;  // the negative candidate
};

using Reversal = std::variant<Legitimate, Parasite>;

/// Recovers the pivot multiplier from a_0 mu_0 = -sum a_i mu_i + sum a_j mu_j + s_0
/// and lifts mu_new back to the old system.
Reversal reverse_multipliers(const SubstitutionRecord& record, const MultiplierVector& mu_new);

/// For a parasite certificate, the pivot row as a nonnegative combination
/// of the other old rows. Throws Error(kNotParasite) on legitimate input.
std::optional<MultiplierVector> redundancy_witness(const SubstitutionRecord& record,
                                                   const MultiplierVector& mu_new);

}  // namespace elimdual
