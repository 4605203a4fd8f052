#include <gtest/gtest.h>

#include <iostream>

#include "elimdual/cone.hpp"
#include "elimdual/dual.hpp"
#include "elimdual/fourier.hpp"
#include "elimdual/harness.hpp"
#include "elimdual/implicit.hpp"
#include "elimdual/io.hpp"
#include "oracle.hpp"

using namespace elimdual;

TEST(Cone, Homogenization) {
    const System p = parse_system("vars: x\nx <= 1\nnonneg: all\n");
    const PrimalCone c = primal_cone(p);
    EXPECT_EQ(print_system(c.system), "vars: x z\nx - z <= 0\nnonneg: all\n");
    EXPECT_EQ(c.z, 1u);
    EXPECT_TRUE(c.system.is_homogeneous());
    EXPECT_EQ(c.primal_rows.size(), 1u);
}

TEST(Cone, NameClashGetsUnderscore) {
    const System p = parse_system("vars: z\nz <= 1\nnonneg: all\n");
    EXPECT_EQ(primal_cone(p).system.variable_name(1), "z_");
}

TEST(Cone, ZeroRhsGivesFreeColumn) {
    const PrimalCone c = primal_cone(parse_system("vars: x y\nx - y <= 0\nnonneg: all\n"));
    EXPECT_FALSE(c.system.constraints()[0].expr.mentions(c.z));
    EXPECT_TRUE(c.system.sign_row(c.z).has_value());
}

TEST(Cone, SolutionsAtInfinity) {
    const auto ray = has_solution_at_infinity(parse_system("vars: x y\n-x + y <= 2\nx - y <= -1\nnonneg: all\n"));
    ASSERT_TRUE(ray.has_value());
    EXPECT_EQ(ray->get(0), ray->get(1));
    EXPECT_TRUE(is_bounded(parse_system("vars: x\nx <= 1\nnonneg: all\n")));
    const System s = parse_system("vars: x y\nx - y <= 0\nnonneg: all\n");
    EXPECT_FALSE(is_bounded(s));
    EXPECT_TRUE(satisfies_all(recession_system(s), *has_solution_at_infinity(s)));
    // A free variable can run to -infinity.
    EXPECT_FALSE(is_bounded(parse_system("vars: x\nx <= 1\n")));
}

TEST(Cone, ReducedToOrigin) {
    EXPECT_TRUE(is_reduced_to_origin(parse_system("vars: x y\nx + y <= 0\n-x - y <= 0\nnonneg: all\n")));
    EXPECT_FALSE(is_reduced_to_origin(parse_system("vars: x y\nx - y <= 0\nnonneg: all\n")));
    EXPECT_FALSE(is_reduced_to_origin(parse_system("vars: x\nnonneg: all\n")));
    try {
        (void)is_reduced_to_origin(parse_system("vars: x\nx <= 1\nnonneg: all\n"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kNotHomogeneous);
    }
    try {
        (void)is_reduced_to_origin(parse_system("vars: x y\nx <= 0\nnonneg: x\n"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kUnsignedVariable);
    }
}

TEST(Cone, FullDimensional) {
    const System p = parse_system("vars: x\nx <= 1\nnonneg: all\n");
    EXPECT_TRUE(is_full_dimensional(p));
    EXPECT_TRUE(is_full_dimensional(primal_cone(p).system));
    EXPECT_FALSE(is_full_dimensional(parse_system("vars: x\nx <= 0\n-x <= 0\n")));
}

TEST(ConeProperty, DichotomyDehomogenizationTrichotomy) {
    GenParams params;
    int solvable = 0;
    int with_implicit = 0;
    int unsolvable = 0;
    int unsolvable_dual_full = 0;
    for (std::size_t t = 0; t < 200; ++t) {
        TrialRng rng(31, t);
        System p = generate_bounded(rng, params);
        // Every fourth draw gets a planted equality pair to exercise the
        // "solvable with implicit equalities" branch.
        if (t % 4 == 0) {
            const Constraint& c = p.constraints().front();
            p.add(-c.expr, Relation::kLe, -c.rhs);
        }
        ASSERT_TRUE(is_bounded(p));
        ASSERT_FALSE(oracle::has_ray(p));
        const PrimalCone cone = primal_cone(p);
        const bool feasible = is_feasible(feasibility(p));
        const bool reduced = is_reduced_to_origin(cone.system);
        EXPECT_EQ(feasible, !reduced) << print_system(p);

        // Any cone point with z > 0, divided by z, solves the primal.
        System probe = cone.system;
        probe.add(LinearExpr::variable(cone.z, Rational(-1)), Relation::kLe, Rational(-1));
        const FeasibilityVerdict v = feasibility(probe);
        EXPECT_EQ(is_feasible(v), feasible);
        if (const auto* f = std::get_if<Feasible>(&v)) {
            Point x;
            for (VarIndex j = 0; j < p.num_variables(); ++j) x.set(j, f->witness.get(j) / f->witness.get(cone.z));
            EXPECT_TRUE(satisfies_all(p, x));
        }

        const bool full = feasible && is_full_dimensional(p);
        const bool cone_full = is_full_dimensional(cone.system);
        const bool cone_multipliers = nonzero_multiplier_exists(cone.system).has_value();
        const int cases = int(full && cone_full) + int(feasible && !full && cone_multipliers && !reduced) +
                          int(!feasible && reduced);
        EXPECT_EQ(cases, 1) << print_system(p);
        if (feasible) ++solvable;
        if (feasible && !full) ++with_implicit;
        if (full) {
            // The elementary dual of a solvable full-dimensional primal is {0}.
            const ElementaryDual d = elementary_dual(p);
            EXPECT_FALSE(dual_has_nonzero_solution(d));
        }
        if (!feasible) {
            // Measured only: which dual is meant in this case is ambiguous.
            ++unsolvable;
            if (is_full_dimensional(elementary_dual(p).system)) ++unsolvable_dual_full;
        }
    }
    EXPECT_GT(solvable, 40);
    EXPECT_GT(with_implicit, 10);
    RecordProperty("unsolvable", unsolvable);
    RecordProperty("unsolvable_primal_dual_full_dimensional", unsolvable_dual_full);
    std::cout << "unsolvable " << unsolvable << ", elementary dual of the primal full-dimensional in "
              << unsolvable_dual_full << '\n';
}
