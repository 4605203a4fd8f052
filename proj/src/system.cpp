#include "elimdual/system.hpp"

#include <algorithm>

namespace elimdual {

// ---------------------------------------------------------------- LinearExpr

LinearExpr::LinearExpr(std::initializer_list<std::pair<const VarIndex, Rational>> terms) {
    for (const auto& [v, c] : terms) add_term(v, c);
}

LinearExpr LinearExpr::variable(VarIndex v, Rational coeff) {
    LinearExpr e;
    e.set(v, coeff);
    return e;
}

Rational LinearExpr::coeff(VarIndex v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LinearExpr::set(VarIndex v, const Rational& c) {
    if (c.is_zero()) {
        terms_.erase(v);
    } else {
        terms_[v] = c;
    }
}

void LinearExpr::add_term(VarIndex v, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(v, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LinearExpr LinearExpr::without(VarIndex v) const {
    LinearExpr e = *this;
    e.terms_.erase(v);
    return e;
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& o) {
    for (const auto& [v, c] : o.terms_) add_term(v, c);
    return *this;
}

LinearExpr& LinearExpr::operator-=(const LinearExpr& o) {
    for (const auto& [v, c] : o.terms_) add_term(v, -c);
    return *this;
}

LinearExpr& LinearExpr::operator*=(const Rational& k) {
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [v, c] : terms_) c *= k;
    return *this;
}

const char* to_string(Relation rel) {
    switch (rel) {
        case Relation::kLe: return "<=";
        case Relation::kLt: return "<";
        case Relation::kEq: return "=";
    }
    return "?";
}

const char* to_string(ProvenanceKind kind) {
    switch (kind) {
        case ProvenanceKind::kMain: return "main";
        case ProvenanceKind::kSign: return "sign";
        case ProvenanceKind::kExtension: return "extension";
        case ProvenanceKind::kDerived: return "derived";
    }
    return "?";
}

std::optional<VarIndex> Constraint::sign_shape_var() const {
    if (rel != Relation::kLe || !rhs.is_zero() || expr.terms().size() != 1) return std::nullopt;
    const auto& [v, c] = *expr.terms().begin();
    if (c != Rational(-1)) return std::nullopt;
    return v;
}

// -------------------------------------------------------------------- System

System::System(std::vector<std::string> variables) : variables_(std::move(variables)) {}

System System::empty_like() const {
    System s(variables_);
    s.objective_ = objective_;
    s.cone_ = cone_;
    s.next_id_ = next_id_;
    return s;
}

VarIndex System::add_variable(std::string name) {
    variables_.push_back(std::move(name));
    return variables_.size() - 1;
}

const std::string& System::variable_name(VarIndex v) const {
    if (v >= variables_.size()) {
        throw Error(ErrorCode::kUnknownVariable, "variable index " + std::to_string(v) + " out of range");
    }
    return variables_[v];
}

std::optional<VarIndex> System::find_variable(std::string_view name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) return std::nullopt;
    return static_cast<VarIndex>(it - variables_.begin());
}

void System::check_expr(const LinearExpr& expr) const {
    if (!expr.is_zero() && expr.terms().rbegin()->first >= variables_.size()) {
        throw Error(ErrorCode::kUnknownVariable,
                    "constraint references variable index " +
                        std::to_string(expr.terms().rbegin()->first) + " outside the table");
    }
}

ConstraintId System::add(LinearExpr expr, Relation rel, Rational rhs, Provenance provenance,
                         std::string label) {
    check_expr(expr);
    Constraint c;
    c.id = ConstraintId{next_id_};
    c.expr = std::move(expr);
    c.rel = rel;
    c.rhs = std::move(rhs);
    c.provenance = std::move(provenance);
    c.label = std::move(label);
    const ConstraintId id = c.id;
    insert(std::move(c));
    return id;
}

ConstraintId System::add_sign(VarIndex v, std::string label) {
    return add(LinearExpr::variable(v, Rational(-1)), Relation::kLe, Rational(0), Provenance::sign(),
               std::move(label));
}

void System::insert(Constraint c) {
    check_expr(c.expr);
    if (c.id == kDetachedId) throw Error(ErrorCode::kInvalidArgument, "cannot insert a detached constraint");
    if (index_.contains(c.id)) {
        throw Error(ErrorCode::kDuplicateConstraint, "duplicate constraint id " + std::to_string(id_value(c.id)));
    }
    next_id_ = std::max(next_id_, id_value(c.id) + 1);
    index_.emplace(c.id, constraints_.size());
    constraints_.push_back(std::move(c));
}

const Constraint* System::find(ConstraintId id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &constraints_[it->second];
}

const Constraint& System::at(ConstraintId id) const {
    const Constraint* c = find(id);
    if (c == nullptr) {
        throw Error(ErrorCode::kUnknownConstraint, "unknown constraint id " + std::to_string(id_value(id)));
    }
    return *c;
}

void System::set_objective(LinearExpr objective) {
    check_expr(objective);
    objective_ = std::move(objective);
}

bool System::is_homogeneous() const {
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [](const Constraint& c) { return c.is_homogeneous(); });
}

std::optional<ConstraintId> System::sign_row(VarIndex v) const {
    std::optional<ConstraintId> structural;
    for (const auto& c : constraints_) {
        if (c.sign_shape_var() != v) continue;
        if (c.provenance.kind == ProvenanceKind::kSign) return c.id;
        if (!structural) structural = c.id;
    }
    return structural;
}

// ---------------------------------------------------------- MultiplierVector

MultiplierVector::MultiplierVector(std::initializer_list<std::pair<const ConstraintId, Rational>> entries) {
    for (const auto& [id, v] : entries) set(id, v);
}

void MultiplierVector::set(ConstraintId id, const Rational& value) {
    if (value.sign() < 0) {
        throw Error(ErrorCode::kNegativeMultiplier,
                    "negative multiplier " + value.str() + " on constraint " + std::to_string(id_value(id)));
    }
    if (value.is_zero()) {
        entries_.erase(id);
    } else {
        entries_[id] = value;
    }
}

void MultiplierVector::add(ConstraintId id, const Rational& value) { set(id, get(id) + value); }

Rational MultiplierVector::get(ConstraintId id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? Rational(0) : it->second;
}

MultiplierVector MultiplierVector::scaled(const Rational& alpha) const {
    MultiplierVector out;
    for (const auto& [id, v] : entries_) out.set(id, v * alpha);
    return out;
}

MultiplierVector& MultiplierVector::operator+=(const MultiplierVector& o) {
    for (const auto& [id, v] : o.entries_) add(id, v);
    return *this;
}

// --------------------------------------------------------------------- Point

const Rational& Point::get(VarIndex v) const {
    auto it = values_.find(v);
    if (it == values_.end()) {
        throw Error(ErrorCode::kMissingValue, "no value for variable index " + std::to_string(v));
    }
    return it->second;
}

Rational Point::dot(const LinearExpr& expr) const {
    Rational sum;
    for (const auto& [v, c] : expr.terms()) sum += c * get(v);
    return sum;
}

// ---------------------------------------------------------------- operations

Constraint combine(const System& system, const MultiplierVector& lambda) {
    Constraint out;
    out.rel = Relation::kLe;
    std::vector<ConstraintId> parents;
    for (const auto& [id, weight] : lambda.entries()) {
        const Constraint& c = system.at(id);
        if (c.rel == Relation::kEq) {
            throw Error(ErrorCode::kBadRelation,
                        "combine requires <= or < rows; constraint " + std::to_string(id_value(id)) + " is =");
        }
        out.expr += c.expr * weight;
        out.rhs += c.rhs * weight;
        if (c.rel == Relation::kLt) out.rel = Relation::kLt;
        parents.push_back(id);
    }
    out.provenance = Provenance::derived(std::move(parents));
    return out;
}

bool evaluate(const Constraint& constraint, const Point& point) {
    const Rational lhs = point.dot(constraint.expr);
    switch (constraint.rel) {
        case Relation::kLe: return lhs <= constraint.rhs;
        case Relation::kLt: return lhs < constraint.rhs;
        case Relation::kEq: return lhs == constraint.rhs;
    }
    return false;
}

bool satisfies_all(const System& system, const Point& point) {
    return std::all_of(system.constraints().begin(), system.constraints().end(),
                       [&](const Constraint& c) { return evaluate(c, point); });
}

ZeroRowKind classify_zero_row(const Constraint& constraint) {
    if (!constraint.expr.is_zero()) return ZeroRowKind::kInformative;
    const int s = constraint.rhs.sign();
    bool holds = false;
    switch (constraint.rel) {
        case Relation::kLe: holds = s >= 0; break;
        case Relation::kLt: holds = s > 0; break;
        case Relation::kEq: holds = s == 0; break;
    }
    return holds ? ZeroRowKind::kTautology : ZeroRowKind::kContradiction;
}

bool check_multiplier_certificate(const System& system, const MultiplierVector& lambda) {
    const Constraint c = combine(system, lambda);
    return c.expr.is_zero() && c.rhs.is_zero();
}

bool check_farkas_certificate(const System& system, const MultiplierVector& lambda) {
    if (lambda.is_trivial()) return false;
    return classify_zero_row(combine(system, lambda)) == ZeroRowKind::kContradiction;
}

bool is_positive_on(const MultiplierVector& lambda, const std::vector<ConstraintId>& ids) {
    return std::all_of(ids.begin(), ids.end(), [&](ConstraintId id) { return lambda.get(id).sign() > 0; });
}

System expand_equalities(const System& system) {
    System out = system.empty_like();
    for (const auto& c : system.constraints()) {
        if (c.rel != Relation::kEq) {
            out.insert(c);
            continue;
        }
        out.add(c.expr, Relation::kLe, c.rhs, Provenance::derived({c.id}), c.label);
        out.add(-c.expr, Relation::kLe, -c.rhs, Provenance::derived({c.id}), c.label);
    }
    return out;
}

}  // namespace elimdual
