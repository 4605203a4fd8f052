#include "elimdual/gauss.hpp"

namespace elimdual {

namespace {

void require_certificate(const System& system, const MultiplierVector& mu, const char* which) {
    if (!check_multiplier_certificate(system, mu)) {
        throw Error(ErrorCode::kInvalidCertificate, std::string("multipliers are not a certificate of the ") +
                                                        which + " system");
    }
}

// Signed x_0 coefficient of the old row behind a new row.
Rational source_coefficient(const SubstitutionRecord& rec, ConstraintId new_id) {
    return rec.before.at(rec.new_to_old.at(new_id)).expr.coeff(rec.classification.variable);
}

}  // namespace

PivotClassification classify(const System& system, VarIndex var, ConstraintId pivot, GaussOptions options) {
    if (var >= system.num_variables()) {
        throw Error(ErrorCode::kUnknownVariable, "unknown variable index " + std::to_string(var));
    }
    const Constraint& p = system.at(pivot);
    PivotClassification cls;
    cls.variable = var;
    cls.pivot = pivot;
    cls.pivot_coefficient = p.expr.coeff(var);
    if (cls.pivot_coefficient.is_zero()) {
        throw Error(ErrorCode::kZeroPivotCoefficient,
                    "pivot " + std::to_string(id_value(pivot)) + " does not mention " + system.variable_name(var));
    }
    if (!options.allow_zero_remainder && p.expr.without(var).is_zero() && p.rhs.is_zero()) {
        throw Error(ErrorCode::kZeroPivotRemainder,
                    "pivot " + std::to_string(id_value(pivot)) + " has nothing besides " + system.variable_name(var));
    }
    cls.variable_sign_row = system.sign_row(var);
    const int pivot_sign = cls.pivot_coefficient.sign();
    cls.scale[pivot] = cls.pivot_coefficient.abs();

    for (const auto& c : system.constraints()) {
        if (c.rel != Relation::kLe) {
            throw Error(ErrorCode::kBadRelation, "substitution works on <= rows only");
        }
        if (!options.allow_affine && !c.rhs.is_zero()) {
            throw Error(ErrorCode::kNotHomogeneous,
                        "constraint " + std::to_string(id_value(c.id)) + " has a nonzero right-hand side");
        }
        if (c.id == pivot || c.id == cls.variable_sign_row) continue;
        const Rational a = c.expr.coeff(var);
        if (a.is_zero()) {
            (c.sign_shape_var() ? cls.other_sign_rows : cls.free_rows).push_back(c.id);
            continue;
        }
        (a.sign() == pivot_sign ? cls.same_sign : cls.opposite).push_back(c.id);
        cls.scale[c.id] = a.abs();
    }
    return cls;
}

SubstitutionRecord substitute_eliminate(const System& system, VarIndex var, ConstraintId pivot,
                                        GaussOptions options) {
    SubstitutionRecord rec;
    rec.classification = classify(system, var, pivot, options);
    rec.before = system;
    const Constraint& p = system.at(pivot);
    const Rational& a0 = rec.classification.pivot_coefficient;
    rec.substitution = p.expr.without(var) * (Rational(-1) / a0);
    rec.substitution_constant = p.rhs / a0;
    rec.after = replay(rec);

    // Fresh ids are handed out in row order, skipping the pivot.
    auto next = rec.after.constraints().begin();
    for (const auto& c : system.constraints()) {
        if (c.id == pivot) continue;
        rec.new_to_old.emplace(next->id, c.id);
        if (c.id == rec.classification.variable_sign_row) rec.promoted_row = next->id;
        ++next;
    }
    return rec;
}

System replay(const SubstitutionRecord& record) {
    const PivotClassification& cls = record.classification;
    const System& before = record.before;
    const Constraint& p = before.at(cls.pivot);
    System out = before.empty_like();
    for (const auto& c : before.constraints()) {
        if (c.id == cls.pivot) continue;
        const Rational a = c.expr.coeff(cls.variable);
        if (a.is_zero()) {
            out.insert(c);
            continue;
        }
        // c - (a / a_0) * pivot eliminates x_0 exactly.
        const Rational k = a / cls.pivot_coefficient;
        LinearExpr expr = c.expr - p.expr * k;
        expr.set(cls.variable, Rational(0));
        out.add(std::move(expr), Relation::kLe, c.rhs - p.rhs * k, Provenance::derived({c.id, cls.pivot}),
                c.label);
    }
    return out;
}

MultiplierVector transfer_multipliers(const SubstitutionRecord& record, const MultiplierVector& mu) {
    require_certificate(record.before, mu, "old");
    MultiplierVector out;
    for (const auto& [new_id, old_id] : record.new_to_old) out.set(new_id, mu.get(old_id));
    return out;
}

MultiplierVector normalized_row_weights(const SubstitutionRecord& record, const MultiplierVector& mu_new) {
    MultiplierVector out;
    for (const auto& [new_id, old_id] : record.new_to_old) {
        Rational w = mu_new.get(new_id);
        if (new_id != record.promoted_row) {
            if (auto it = record.classification.scale.find(old_id); it != record.classification.scale.end()) {
                w *= it->second;
            }
        }
        out.set(new_id, w);
    }
    return out;
}

Reversal reverse_multipliers(const SubstitutionRecord& record, const MultiplierVector& mu_new) {
    require_certificate(record.after, mu_new, "new");
    // x_0 column of the old combination must vanish:
    //   a_0 mu_0 + sum_r mu_r c_r = 0, with c_r the signed x_0 coefficients
    // (the promoted sign row has c = -1, which supplies the s_0 term).
    Rational column;
    for (const auto& [new_id, weight] : mu_new.entries()) column += weight * source_coefficient(record, new_id);
    const Rational mu0 = -column / record.classification.pivot_coefficient;
    if (mu0.sign() < 0) return Parasite{mu0};

    MultiplierVector old;
    for (const auto& [new_id, weight] : mu_new.entries()) old.set(record.new_to_old.at(new_id), weight);
    old.set(record.classification.pivot, mu0);
    if (!check_multiplier_certificate(record.before, old)) return Parasite{mu0};
    return Legitimate{std::move(old), mu0};
}

std::optional<MultiplierVector> redundancy_witness(const SubstitutionRecord& record,
                                                   const MultiplierVector& mu_new) {
    const Reversal reversal = reverse_multipliers(record, mu_new);
    if (std::holds_alternative<Legitimate>(reversal)) {
        throw Error(ErrorCode::kNotParasite, "multipliers reverse legitimately; the pivot is not shown redundant");
    }
    const Rational mu0 = std::get<Parasite>(reversal).pivot_multiplier;
    if (mu0.sign() >= 0) return std::nullopt;
    // sum_r mu_r * row_r = -mu0 * pivot, so the pivot is their combination
    // scaled by 1 / |mu0|.
    MultiplierVector witness;
    for (const auto& [new_id, weight] : mu_new.entries()) {
        witness.set(record.new_to_old.at(new_id), weight / -mu0);
    }
    const Constraint combo = combine(record.before, witness);
    const Constraint& pivot = record.before.at(record.classification.pivot);
    if (combo.expr != pivot.expr || combo.rhs != pivot.rhs) return std::nullopt;
    return witness;
}

}  // namespace elimdual
