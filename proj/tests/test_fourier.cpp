#include <gtest/gtest.h>

#include "elimdual/fourier.hpp"
#include "elimdual/harness.hpp"
#include "elimdual/io.hpp"
#include "oracle.hpp"

using namespace elimdual;

namespace {

ConstraintId id(std::uint32_t v) { return ConstraintId{v}; }

// Row divided by its largest |coefficient| (or |rhs|), for scale-free compares.
std::string normalized(const Constraint& c, const System& s) {
    Rational m;
    for (const auto& [v, k] : c.expr.terms()) m = std::max(m, k.abs());
    if (m.is_zero()) m = c.rhs.abs().is_zero() ? Rational(1) : c.rhs.abs();
    Constraint n = c;
    n.expr *= Rational(1) / m;
    n.rhs = n.rhs / m;
    return format_constraint(n, s);
}

}  // namespace

TEST(Fourier, ParasiteExampleProjectsToOneRow) {
    const System s = parse_system("vars: x y\nx + y <= 0\n2*x - y <= 0\n-x + 2*y <= 0\n");
    const EliminationResult r = eliminate_var(s, 0);
    // 3y <= 0 from rows 0 and 2, 3y <= 0 from rows 1 and 2: merged duplicates.
    ASSERT_EQ(r.system.size(), 1u);
    EXPECT_EQ(format_constraint(r.system.constraints()[0], r.system), "y <= 0");
    ASSERT_EQ(r.trace.steps.size(), 1u);
    const DerivationRecord& rec = r.trace.steps[0].records.at(0);
    // Averaged record still combines to the stored row.
    MultiplierVector mu;
    for (const auto& [pid, w] : rec.parents) mu.add(pid, w);
    const Constraint c = combine(s, mu);
    EXPECT_EQ(normalized(c, s), "y <= 0");
}

TEST(Fourier, RowsWithoutVariableKeepTheirIds) {
    const System s = parse_system("vars: x y\nx <= 1\ny <= 2\n-x <= 0\n");
    const EliminationResult r = eliminate_var(s, 0);
    // x <= 1 with -x <= 0 gives the tautology 0 <= 1, which is dropped.
    ASSERT_EQ(r.system.size(), 1u);
    EXPECT_TRUE(r.system.contains(id(1)));
    EXPECT_EQ(r.system.at(id(1)), s.at(id(1)));
}

TEST(Fourier, FarkasCertificateForSecondExample) {
    const System s = parse_system("vars: x y\n-x + y <= -2\nx - y <= 1\nnonneg: all\n");
    const FeasibilityVerdict v = feasibility(s);
    ASSERT_FALSE(is_feasible(v));
    const auto& inf = std::get<Infeasible>(v);
    EXPECT_TRUE(check_farkas_certificate(s, inf.certificate));
    EXPECT_EQ(inf.certificate.get(id(0)), inf.certificate.get(id(1)));
}

TEST(Fourier, StrictnessPropagates) {
    EXPECT_FALSE(is_feasible(feasibility(parse_system("vars: x\nx < 1\n-x <= -1\n"))));
    const FeasibilityVerdict v = feasibility(parse_system("vars: x\nx < 1\n-x < 0\n"));
    ASSERT_TRUE(is_feasible(v));
    EXPECT_EQ(std::get<Feasible>(v).witness.get(0), Rational(1, 2));
    EXPECT_TRUE(is_feasible(feasibility(parse_system("vars: x\nx <= 1\n-x <= -1\n"))));
}

TEST(Fourier, BackSubstitutionChoices) {
    auto witness = [](const char* text) {
        const FeasibilityVerdict v = feasibility(parse_system(text));
        return std::get<Feasible>(v).witness.get(0);
    };
    EXPECT_EQ(witness("vars: x\nx <= 3\n-x <= -1\n"), Rational(2));
    EXPECT_EQ(witness("vars: x\n-x <= -1\n"), Rational(2));
    EXPECT_EQ(witness("vars: x\nx <= 3\n"), Rational(2));
    EXPECT_EQ(witness("vars: x\n"), Rational(0));
    EXPECT_EQ(witness("vars: x\nx = 5/3\n"), Rational(5, 3));
}

TEST(Fourier, InputContradictionRow) {
    System s(std::vector<std::string>{"x"});
    s.add(LinearExpr{}, Relation::kLe, Rational(-1));
    const FeasibilityVerdict v = feasibility(s);
    ASSERT_FALSE(is_feasible(v));
    EXPECT_EQ(std::get<Infeasible>(v).certificate, (MultiplierVector{{id(0), Rational(1)}}));
}

TEST(Fourier, EqualitiesUseExpandedIds) {
    const System s = parse_system("vars: x y\nx + y = 1\nx - y = 3\n-x <= -5\n");
    const FeasibilityVerdict v = feasibility(s);
    ASSERT_FALSE(is_feasible(v));
    EXPECT_TRUE(check_farkas_certificate(expand_equalities(s), std::get<Infeasible>(v).certificate));
}

TEST(Fourier, ProjectExamples) {
    const System s = parse_system("vars: x y\nx + y <= 1\nnonneg: all\n");
    const System p = project(s, {1});
    std::set<std::string> rows;
    for (const auto& c : p.constraints()) rows.insert(normalized(c, p));
    EXPECT_EQ(rows, (std::set<std::string>{"y <= 1", "-y <= 0"}));
    const System eq = parse_system("vars: x y\nx + y = 1\n");
    EXPECT_EQ(project(eq, {0, 1}).constraints(), eq.constraints());
}

TEST(Fourier, FarkasFromTraceRejectsInputIds) {
    const System s = parse_system("vars: x\nx <= 1\n-x <= -2\n");
    const EliminationResult r = eliminate_var(s, 0);
    EXPECT_THROW(farkas_from_trace(r.trace, id(0)), Error);
}

// Random systems: verdict and certificates agree with an independent simplex.
TEST(FourierProperty, AgreesWithSimplexOracle) {
    GenParams params;
    params.max_vars = 4;
    params.max_cons = 6;
    int feasible = 0;
    for (std::size_t t = 0; t < 300; ++t) {
        TrialRng rng(7, t);
        const System s = generate_system(rng, params);
        const FeasibilityVerdict v = feasibility(s);
        ASSERT_EQ(is_feasible(v), oracle::feasible(s)) << print_system(s);
        if (const auto* f = std::get_if<Feasible>(&v)) {
            ++feasible;
            EXPECT_TRUE(satisfies_all(s, f->witness)) << print_system(s);
        } else {
            EXPECT_TRUE(check_farkas_certificate(expand_equalities(s), std::get<Infeasible>(v).certificate))
                << print_system(s);
        }
    }
    EXPECT_GT(feasible, 30);
    EXPECT_LT(feasible, 290);
}

// Larger instances, where pruned rows matter: verdicts, witnesses and
// one-variable projections against the simplex oracle.
TEST(FourierProperty, PrunedEliminationStaysExact) {
    GenParams params;
    params.max_vars = 6;
    params.max_cons = 12;
    params.coeff_min = -3;
    params.coeff_max = 3;
    int feasible = 0;
    for (std::size_t t = 0; t < 150; ++t) {
        TrialRng rng(101, t);
        const System s = generate_system(rng, params);
        const FeasibilityVerdict v = feasibility(s);
        ASSERT_EQ(is_feasible(v), oracle::feasible(s)) << print_system(s);
        if (const auto* f = std::get_if<Feasible>(&v)) {
            ++feasible;
            EXPECT_TRUE(satisfies_all(s, f->witness)) << print_system(s);
            const System line = project(s, {0});
            for (int sign : {1, -1}) {
                oracle::Vec obj(s.num_variables(), 0);
                obj[0] = sign;
                const auto full = oracle::sup(oracle::rows_of(s), s.num_variables(), obj);
                const auto proj = oracle::sup(oracle::rows_of(line), line.num_variables(), obj);
                ASSERT_EQ(full.status, proj.status) << print_system(s);
                if (full.status == oracle::LpStatus::kOptimal) EXPECT_EQ(full.value, proj.value) << print_system(s);
            }
        } else {
            EXPECT_TRUE(check_farkas_certificate(expand_equalities(s), std::get<Infeasible>(v).certificate))
                << print_system(s);
        }
    }
    EXPECT_GT(feasible, 20);
}

// Every derived row of a trace equals the combination its record replays to.
TEST(FourierProperty, TraceReplaysDerivedRows) {
    GenParams params;
    for (std::size_t t = 0; t < 100; ++t) {
        TrialRng rng(11, t);
        const System s = expand_equalities(generate_system(rng, params));
        std::vector<VarIndex> order;
        for (VarIndex v = 0; v < s.num_variables(); ++v) order.push_back(v);
        const EliminationResult r = eliminate_vars(s, order);
        for (const auto& c : r.system.constraints()) {
            if (c.provenance.kind != ProvenanceKind::kDerived) continue;
            const MultiplierVector mu = farkas_from_trace(r.trace, c.id);
            const Constraint back = combine(s, mu);
            EXPECT_EQ(normalized(back, s), normalized(c, r.system)) << print_system(s);
        }
    }
}

// y lies in the projection iff the original system with y fixed is feasible.
TEST(FourierProperty, ProjectionMatchesFixedSliceOracle) {
    GenParams params;
    params.max_vars = 3;
    params.max_cons = 5;
    for (std::size_t t = 0; t < 60; ++t) {
        TrialRng rng(13, t);
        const System s = generate_system(rng, params);
        if (s.num_variables() < 2) continue;
        const System p = project(s, {0});
        for (long num = -12; num <= 12; ++num) {
            const Rational y(num, 2);
            Point pt{{0, y}};
            bool inside = true;
            for (const auto& c : p.constraints()) {
                if (c.expr.without(0).is_zero()) inside = inside && evaluate(c, pt);
            }
            System slice = s;
            slice.add(LinearExpr::variable(0), Relation::kEq, y);
            EXPECT_EQ(inside, oracle::feasible(slice)) << print_system(s) << " y=" << y;
        }
    }
}
