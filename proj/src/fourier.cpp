#include "elimdual/fourier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace elimdual {

namespace {

// Positive factor turning the row into primitive integer form.
Rational primitive_scale(const LinearExpr& expr, const Rational& rhs) {
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    auto absorb = [&](const Rational& q) {
        if (q.is_zero()) return;
        mpz_class n = abs(q.numerator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_class d = q.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    };
    for (const auto& [v, c] : expr.terms()) absorb(c);
    absorb(rhs);
    if (num_gcd == 0) return Rational(1);
    return Rational(mpq_class(den_lcm, num_gcd));
}

using RowKey = std::tuple<std::vector<std::pair<VarIndex, std::string>>, Relation, std::string>;

RowKey normalized_key(const Constraint& c) {
    const Rational k = primitive_scale(c.expr, c.rhs);
    RowKey key;
    for (const auto& [v, coeff] : c.expr.terms()) std::get<0>(key).emplace_back(v, (coeff * k).str());
    std::get<1>(key) = c.rel;
    std::get<2>(key) = (c.rhs * k).str();
    return key;
}

void require_inequalities(const System& system) {
    for (const auto& c : system.constraints()) {
        if (c.rel == Relation::kEq) {
            throw Error(ErrorCode::kBadRelation, "elimination requires <= or < rows; expand equalities first");
        }
    }
}

bool has_contradiction(const System& system, ConstraintId* which) {
    for (const auto& c : system.constraints()) {
        if (classify_zero_row(c) == ZeroRowKind::kContradiction) {
            if (which != nullptr) *which = c.id;
            return true;
        }
    }
    return false;
}

struct Bound {
    Rational value;
    bool strict = false;
};

Rational pick_value(const std::optional<Bound>& lo, const std::optional<Bound>& hi) {
    if (lo && hi) {
        if (lo->value == hi->value) return lo->value;
        return (lo->value + hi->value) / Rational(2);
    }
    if (lo) return lo->value + Rational(1);
    if (hi) return hi->value - Rational(1);
    return Rational(0);
}

// Chooses a value for var satisfying every row of `system` that mentions it,
// given values for all its other variables.
Rational back_substitute(const System& system, VarIndex var, const Point& partial) {
    std::optional<Bound> lo;
    std::optional<Bound> hi;
    for (const auto& c : system.constraints()) {
        const Rational a = c.expr.coeff(var);
        if (a.is_zero()) continue;
        const Rational rest = partial.dot(c.expr.without(var));
        const Bound b{(c.rhs - rest) / a, c.rel == Relation::kLt};
        if (a.sign() > 0) {
            if (!hi || b.value < hi->value || (b.value == hi->value && b.strict)) hi = b;
        } else {
            if (!lo || b.value > lo->value || (b.value == lo->value && b.strict)) lo = b;
        }
    }
    return pick_value(lo, hi);
}

}  // namespace

void EliminationTrace::append(const EliminationTrace& other) {
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

const DerivationRecord* EliminationTrace::find(ConstraintId id) const {
    for (const auto& step : steps) {
        for (const auto& rec : step.records) {
            if (rec.id == id) return &rec;
        }
    }
    return nullptr;
}

namespace {

// Input rows behind each row. A merged duplicate keeps every minimal
// alternative, since later unions may favour either.
using Origins = std::vector<std::set<ConstraintId>>;
using Ancestors = std::map<ConstraintId, Origins>;

void add_origin(Origins& origins, std::set<ConstraintId> candidate) {
    for (const auto& o : origins) {
        if (std::includes(candidate.begin(), candidate.end(), o.begin(), o.end())) return;
    }
    std::erase_if(origins, [&](const auto& o) { return std::includes(o.begin(), o.end(), candidate.begin(), candidate.end()); });
    origins.push_back(std::move(candidate));
}

// One elimination step. With `ancestors` set, rows are tagged with the input
// rows they combine, and a derived row drawing on more than `eliminated + 1`
// of them is dropped (Chernikov's rule: such rows are always implied by the
// rest, strictness included).
EliminationResult eliminate_step(const System& system, VarIndex var, Ancestors* ancestors, std::size_t eliminated) {
    if (var >= system.num_variables()) {
        throw Error(ErrorCode::kUnknownVariable, "cannot eliminate unknown variable index " + std::to_string(var));
    }
    require_inequalities(system);

    EliminationResult result{system.empty_like(), {}};
    result.trace.steps.push_back({var, {}});
    auto& records = result.trace.steps.back().records;

    std::vector<const Constraint*> pos;
    std::vector<const Constraint*> neg;
    std::map<RowKey, ConstraintId> seen;
    for (const auto& c : system.constraints()) {
        const int s = c.expr.coeff(var).sign();
        if (s > 0) {
            pos.push_back(&c);
        } else if (s < 0) {
            neg.push_back(&c);
        } else {
            result.system.insert(c);
            seen.emplace(normalized_key(c), c.id);
        }
    }

    std::map<ConstraintId, std::size_t> record_of;
    for (const Constraint* p : pos) {
        for (const Constraint* n : neg) {
            const Rational a = p->expr.coeff(var);
            const Rational b = -n->expr.coeff(var);
            LinearExpr expr = p->expr * b + n->expr * a;
            expr.set(var, Rational(0));
            Rational rhs = p->rhs * b + n->rhs * a;
            const Rational k = primitive_scale(expr, rhs);
            expr *= k;
            rhs *= k;
            const Relation rel =
                (p->rel == Relation::kLt || n->rel == Relation::kLt) ? Relation::kLt : Relation::kLe;

            Constraint probe;
            probe.expr = expr;
            probe.rel = rel;
            probe.rhs = rhs;
            if (classify_zero_row(probe) == ZeroRowKind::kTautology) continue;

            Origins origins;
            if (ancestors != nullptr) {
                for (const auto& a : ancestors->at(p->id)) {
                    for (const auto& b : ancestors->at(n->id)) {
                        std::set<ConstraintId> u = a;
                        u.insert(b.begin(), b.end());
                        if (u.size() <= eliminated + 1) add_origin(origins, std::move(u));
                    }
                }
                if (origins.empty()) continue;
            }

            std::vector<std::pair<ConstraintId, Rational>> parents{{p->id, b * k}, {n->id, a * k}};
            const RowKey key = normalized_key(probe);
            if (auto it = seen.find(key); it != seen.end()) {
                auto rec = record_of.find(it->second);
                if (rec == record_of.end()) continue;  // duplicates a copied-through row
                if (ancestors != nullptr) {
                    for (auto& o : origins) add_origin(ancestors->at(it->second), std::move(o));
                }
                // Average of both derivations: still an exact derivation of the row.
                auto& merged = records[rec->second].parents;
                std::map<ConstraintId, Rational> sum;
                for (const auto& [id, w] : merged) sum[id] += w / Rational(2);
                for (const auto& [id, w] : parents) sum[id] += w / Rational(2);
                merged.assign(sum.begin(), sum.end());
                continue;
            }
            const ConstraintId id = result.system.add(std::move(expr), rel, std::move(rhs),
                                                      Provenance::derived({p->id, n->id}));
            seen.emplace(key, id);
            if (ancestors != nullptr) ancestors->emplace(id, std::move(origins));
            record_of.emplace(id, records.size());
            records.push_back({id, std::move(parents)});
        }
    }
    return result;
}

Ancestors input_ancestors(const System& system) {
    Ancestors out;
    for (const auto& c : system.constraints()) out.emplace(c.id, Origins{{c.id}});
    return out;
}

}  // namespace

EliminationResult eliminate_var(const System& system, VarIndex var) {
    return eliminate_step(system, var, nullptr, 0);
}

EliminationResult eliminate_vars(const System& system, const std::vector<VarIndex>& order) {
    EliminationResult acc{system, {}};
    Ancestors ancestors = input_ancestors(system);
    std::size_t eliminated = 0;
    for (VarIndex v : order) {
        if (has_contradiction(acc.system, nullptr)) break;
        EliminationResult step = eliminate_step(acc.system, v, &ancestors, ++eliminated);
        acc.system = std::move(step.system);
        acc.trace.append(step.trace);
    }
    return acc;
}

FeasibilityVerdict feasibility(const System& system) {
    std::vector<VarIndex> order(system.num_variables());
    std::iota(order.begin(), order.end(), VarIndex{0});
    return feasibility(system, order);
}

FeasibilityVerdict feasibility(const System& input, const std::vector<VarIndex>& requested) {
    const System system = expand_equalities(input);

    // Every variable must be eliminated; unlisted ones follow in index order.
    std::vector<VarIndex> order;
    std::vector<bool> listed(system.num_variables(), false);
    for (VarIndex v : requested) {
        if (v >= system.num_variables()) {
            throw Error(ErrorCode::kUnknownVariable, "unknown variable index " + std::to_string(v));
        }
        if (!listed[v]) order.push_back(v);
        listed[v] = true;
    }
    for (VarIndex v = 0; v < system.num_variables(); ++v) {
        if (!listed[v]) order.push_back(v);
    }

    std::vector<System> stages{system};
    EliminationTrace trace;
    Ancestors ancestors = input_ancestors(system);
    std::size_t eliminated = 0;
    ConstraintId bad{};
    for (VarIndex v : order) {
        if (has_contradiction(stages.back(), &bad)) break;
        EliminationResult step = eliminate_step(stages.back(), v, &ancestors, ++eliminated);
        trace.append(step.trace);
        stages.push_back(std::move(step.system));
    }
    if (has_contradiction(stages.back(), &bad)) {
        MultiplierVector cert;
        if (trace.find(bad) != nullptr) {
            cert = farkas_from_trace(trace, bad);
        } else {
            cert.set(bad, Rational(1));
        }
        return Infeasible{std::move(cert), bad};
    }

    Point witness;
    for (std::size_t k = order.size(); k-- > 0;) {
        witness.set(order[k], back_substitute(stages[k], order[k], witness));
    }
    return Feasible{std::move(witness)};
}

System project(const System& system, const std::set<VarIndex>& keep) {
    std::vector<VarIndex> order;
    for (VarIndex v = 0; v < system.num_variables(); ++v) {
        if (!keep.contains(v)) order.push_back(v);
    }
    if (order.empty()) return system;
    return eliminate_vars(expand_equalities(system), order).system;
}

MultiplierVector farkas_from_trace(const EliminationTrace& trace, ConstraintId contradiction) {
    if (trace.find(contradiction) == nullptr) {
        throw Error(ErrorCode::kUnknownConstraint,
                    "constraint " + std::to_string(id_value(contradiction)) + " is not derived in the trace");
    }
    // Derived ids exceed their parents' ids, so expanding the largest id first
    // visits each derived row once.
    std::map<ConstraintId, Rational> weights{{contradiction, Rational(1)}};
    MultiplierVector out;
    while (!weights.empty()) {
        auto it = std::prev(weights.end());
        const auto [id, w] = *it;
        weights.erase(it);
        if (const DerivationRecord* rec = trace.find(id)) {
            for (const auto& [parent, coeff] : rec->parents) weights[parent] += w * coeff;
        } else {
            out.add(id, w);
        }
    }
    return out;
}

}  // namespace elimdual
