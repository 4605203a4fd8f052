#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elimdual/error.hpp"
#include "elimdual/rational.hpp"

namespace elimdual {

using VarIndex = std::size_t;

/// Stable identifier of a constraint. Assigned by insertion order and never
/// reused by a System or by any system derived from it.
enum class ConstraintId : std::uint32_t {};

constexpr std::uint32_t id_value(ConstraintId id) { return static_cast<std::uint32_t>(id); }

/// Placeholder id of constraints that do not belong to a system (e.g. the
/// result of `combine`).
inline constexpr ConstraintId kDetachedId{0xFFFFFFFFu};

/// Sparse linear form sum(c_v * x_v). Zero coefficients are never stored.
class LinearExpr {
public:
    LinearExpr() = default;
    LinearExpr(std::initializer_list<std::pair<const VarIndex, Rational>> terms);

    static LinearExpr variable(VarIndex v, Rational coeff = Rational(1));

    [[nodiscard]] Rational coeff(VarIndex v) const;
    void set(VarIndex v, const Rational& c);
    void add_term(VarIndex v, const Rational& c);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<VarIndex, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool mentions(VarIndex v) const { return terms_.contains(v); }

    /// Copy with the term in v removed.
    [[nodiscard]] LinearExpr without(VarIndex v) const;

    LinearExpr& operator+=(const LinearExpr& o);
    LinearExpr& operator-=(const LinearExpr& o);
    LinearExpr& operator*=(const Rational& k);

    friend LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
    friend LinearExpr operator-(LinearExpr a, const LinearExpr& b) { return a -= b; }
    friend LinearExpr operator*(LinearExpr a, const Rational& k) { return a *= k; }
    friend LinearExpr operator*(const Rational& k, LinearExpr a) { return a *= k; }
    friend LinearExpr operator-(LinearExpr a) { return a *= Rational(-1); }
    friend bool operator==(const LinearExpr&, const LinearExpr&) = default;

private:
    std::map<VarIndex, Rational> terms_;
};

enum class Relation { kLe, kLt, kEq };

const char* to_string(Relation rel);

enum class ProvenanceKind { kMain, kSign, kExtension, kDerived };

const char* to_string(ProvenanceKind kind);

struct Provenance {
    ProvenanceKind kind = ProvenanceKind::kMain;
    std::vector<ConstraintId> parents;  // only for kDerived

    static Provenance main() { return {}; }
    static Provenance sign() { return {ProvenanceKind::kSign, {}}; }
    static Provenance extension() { return {ProvenanceKind::kExtension, {}}; }
    static Provenance derived(std::vector<ConstraintId> parents) {
        return {ProvenanceKind::kDerived, std::move(parents)};
    }
    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// expr REL rhs. The label is a human-readable name that survives
/// substitutions (e.g. "row-x", "sign-l3"); it is not required to be unique.
struct Constraint {
    ConstraintId id = kDetachedId;
    LinearExpr expr;
    Relation rel = Relation::kLe;
    Rational rhs;
    Provenance provenance;
    std::string label;

    /// The variable v when this row has the shape -v <= 0.
    [[nodiscard]] std::optional<VarIndex> sign_shape_var() const;
    [[nodiscard]] bool is_homogeneous() const { return rhs.is_zero(); }
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Ordered constraint collection over a named variable table.
class System {
public:
    System() = default;
    explicit System(std::vector<std::string> variables);

    /// Same variables, objective, cone flag and id counter; no constraints.
    [[nodiscard]] System empty_like() const;

    VarIndex add_variable(std::string name);
    [[nodiscard]] std::size_t num_variables() const { return variables_.size(); }
    [[nodiscard]] const std::vector<std::string>& variables() const { return variables_; }
    [[nodiscard]] const std::string& variable_name(VarIndex v) const;
    [[nodiscard]] std::optional<VarIndex> find_variable(std::string_view name) const;

    ConstraintId add(LinearExpr expr, Relation rel, Rational rhs,
                     Provenance provenance = Provenance::main(), std::string label = {});
    /// -v <= 0 with sign provenance.
    ConstraintId add_sign(VarIndex v, std::string label = {});

    /// Inserts a constraint keeping its id. Used by derived systems that
    /// pass rows through unchanged.
    void insert(Constraint c);

    [[nodiscard]] const std::vector<Constraint>& constraints() const { return constraints_; }
    [[nodiscard]] std::size_t size() const { return constraints_.size(); }
    [[nodiscard]] bool empty() const { return constraints_.empty(); }
    [[nodiscard]] const Constraint* find(ConstraintId id) const;
    [[nodiscard]] const Constraint& at(ConstraintId id) const;
    [[nodiscard]] bool contains(ConstraintId id) const { return find(id) != nullptr; }

    [[nodiscard]] const std::optional<LinearExpr>& objective() const { return objective_; }
    void set_objective(LinearExpr objective);

    [[nodiscard]] bool is_cone() const { return cone_; }
    void set_cone(bool cone) { cone_ = cone; }

    [[nodiscard]] ConstraintId peek_next_id() const { return ConstraintId{next_id_}; }

    /// All rhs are zero.
    [[nodiscard]] bool is_homogeneous() const;

    /// Row id of the sign constraint of v, if any. Rows with sign provenance
    /// win; otherwise the first row of shape -v <= 0.
    [[nodiscard]] std::optional<ConstraintId> sign_row(VarIndex v) const;

private:
    void check_expr(const LinearExpr& expr) const;

    std::vector<std::string> variables_;
    std::vector<Constraint> constraints_;
    std::map<ConstraintId, std::size_t> index_;
    std::optional<LinearExpr> objective_;
    bool cone_ = false;
    std::uint32_t next_id_ = 0;
};

/// Nonnegative weights keyed by constraint id; absent ids are zero.
class MultiplierVector {
public:
    MultiplierVector() = default;
    MultiplierVector(std::initializer_list<std::pair<const ConstraintId, Rational>> entries);

    void set(ConstraintId id, const Rational& value);
    void add(ConstraintId id, const Rational& value);
    [[nodiscard]] Rational get(ConstraintId id) const;
    [[nodiscard]] const std::map<ConstraintId, Rational>& entries() const { return entries_; }

    /// All weights zero.
    [[nodiscard]] bool is_trivial() const { return entries_.empty(); }
    [[nodiscard]] MultiplierVector scaled(const Rational& alpha) const;

    MultiplierVector& operator+=(const MultiplierVector& o);
    friend MultiplierVector operator+(MultiplierVector a, const MultiplierVector& b) { return a += b; }
    friend bool operator==(const MultiplierVector&, const MultiplierVector&) = default;

private:
    std::map<ConstraintId, Rational> entries_;
};

/// Assignment of rational values to variables.
class Point {
public:
    Point() = default;
    Point(std::initializer_list<std::pair<const VarIndex, Rational>> values) : values_(values) {}

    void set(VarIndex v, Rational value) { values_[v] = std::move(value); }
    [[nodiscard]] bool has(VarIndex v) const { return values_.contains(v); }
    /// Throws Error(kMissingValue) when v is unassigned.
    [[nodiscard]] const Rational& get(VarIndex v) const;
    [[nodiscard]] const std::map<VarIndex, Rational>& values() const { return values_; }

    [[nodiscard]] Rational dot(const LinearExpr& expr) const;

private:
    std::map<VarIndex, Rational> values_;
};

enum class ZeroRowKind { kTautology, kContradiction, kInformative };

/// The constraint sum(lambda_i * L_i) REL sum(lambda_i * r_i); REL is strict
/// when any strictly weighted row is strict.
Constraint combine(const System& system, const MultiplierVector& lambda);

/// Exact satisfaction test. EQ rows are supported.
bool evaluate(const Constraint& constraint, const Point& point);

/// True when point satisfies every row of the system.
bool satisfies_all(const System& system, const Point& point);

ZeroRowKind classify_zero_row(const Constraint& constraint);

/// sum(lambda_i * L_i) = [0] and sum(lambda_i * r_i) = 0.
bool check_multiplier_certificate(const System& system, const MultiplierVector& lambda);

/// Nonzero lambda whose combination is a contradiction row.
bool check_farkas_certificate(const System& system, const MultiplierVector& lambda);

/// Every listed id carries a strictly positive weight.
bool is_positive_on(const MultiplierVector& lambda, const std::vector<ConstraintId>& ids);

/// Replaces every EQ row by the pair {L <= r, -L <= -r} with derived
/// provenance pointing at the original row.
System expand_equalities(const System& system);

}  // namespace elimdual
