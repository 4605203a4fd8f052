#include <gtest/gtest.h>

#include "elimdual/io.hpp"
#include "elimdual/system.hpp"

using namespace elimdual;

namespace {

System dual_example() { return parse_system("vars: x y\n-x + y <= 2\nx - y <= -1\nnonneg: all\n"); }

ConstraintId id(std::uint32_t v) { return ConstraintId{v}; }

}  // namespace

TEST(LinearExpr, ZeroCoefficientsVanish) {
    LinearExpr e{{0, Rational(2)}, {1, Rational(-1)}};
    e.add_term(0, Rational(-2));
    EXPECT_FALSE(e.mentions(0));
    EXPECT_EQ(e.terms().size(), 1u);
    e *= Rational(0);
    EXPECT_TRUE(e.is_zero());
}

TEST(System, IdsAreStableAndUnique) {
    System s = dual_example();
    ASSERT_EQ(s.size(), 4u);
    for (std::uint32_t i = 0; i < 4; ++i) EXPECT_EQ(s.constraints()[i].id, id(i));
    EXPECT_EQ(s.at(id(2)).provenance.kind, ProvenanceKind::kSign);
    EXPECT_THROW((void)s.at(id(9)), Error);
    Constraint dup = s.at(id(0));
    EXPECT_THROW(s.insert(dup), Error);
    System copy = s.empty_like();
    EXPECT_EQ(copy.add(LinearExpr::variable(0), Relation::kLe, Rational(1)), id(4));
}

TEST(System, SignRowPrefersProvenance) {
    System s(std::vector<std::string>{"x"});
    const ConstraintId structural = s.add(LinearExpr::variable(0, Rational(-1)), Relation::kLe, Rational(0));
    EXPECT_EQ(s.sign_row(0), structural);
    const ConstraintId sign = s.add_sign(0);
    EXPECT_EQ(s.sign_row(0), sign);
}

TEST(MultiplierVector, RejectsNegativeWeights) {
    MultiplierVector mu;
    try {
        mu.set(id(0), Rational(-1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kNegativeMultiplier);
    }
    mu.set(id(1), Rational(0));
    EXPECT_TRUE(mu.is_trivial());
}

TEST(Combine, WeightedSumAndStrictness) {
    System s = dual_example();
    const Constraint c = combine(s, {{id(0), Rational(1)}, {id(1), Rational(1)}});
    EXPECT_TRUE(c.expr.is_zero());
    EXPECT_EQ(c.rhs, Rational(1));
    EXPECT_EQ(c.rel, Relation::kLe);
    EXPECT_EQ(classify_zero_row(c), ZeroRowKind::kTautology);

    System t = parse_system("vars: x\nx < 1\n-x <= -1\n");
    const Constraint strict = combine(t, {{id(0), Rational(1)}, {id(1), Rational(1)}});
    EXPECT_EQ(strict.rel, Relation::kLt);
    EXPECT_EQ(classify_zero_row(strict), ZeroRowKind::kContradiction);
    // A strict row with zero weight does not make the combination strict.
    EXPECT_EQ(combine(t, {{id(1), Rational(2)}}).rel, Relation::kLe);
}

TEST(ZeroRow, Classification) {
    auto row = [](Relation rel, long r) {
        Constraint c;
        c.rel = rel;
        c.rhs = Rational(r);
        return c;
    };
    EXPECT_EQ(classify_zero_row(row(Relation::kLe, 0)), ZeroRowKind::kTautology);
    EXPECT_EQ(classify_zero_row(row(Relation::kLe, -1)), ZeroRowKind::kContradiction);
    EXPECT_EQ(classify_zero_row(row(Relation::kLt, 0)), ZeroRowKind::kContradiction);
    EXPECT_EQ(classify_zero_row(row(Relation::kLt, 1)), ZeroRowKind::kTautology);
    EXPECT_EQ(classify_zero_row(row(Relation::kEq, 1)), ZeroRowKind::kContradiction);
    Constraint informative = row(Relation::kLe, 0);
    informative.expr.set(0, Rational(1));
    EXPECT_EQ(classify_zero_row(informative), ZeroRowKind::kInformative);
}

TEST(Certificates, MultiplierAndFarkasChecks) {
    System s = dual_example();
    // (0,1) solves the primal; the pair of main rows sums to 0 <= 1.
    EXPECT_FALSE(check_multiplier_certificate(s, {{id(0), Rational(1)}, {id(1), Rational(1)}}));
    System hom = parse_system("vars: x y\nx + y <= 0\n-x - y <= 0\n");
    EXPECT_TRUE(check_multiplier_certificate(hom, {{id(0), Rational(3)}, {id(1), Rational(3)}}));
    EXPECT_TRUE(check_multiplier_certificate(hom, {}));  // trivial but valid

    System bad = parse_system("vars: x y\n-x + y <= -2\nx - y <= 1\n");
    EXPECT_TRUE(check_farkas_certificate(bad, {{id(0), Rational(1)}, {id(1), Rational(1)}}));
    EXPECT_FALSE(check_farkas_certificate(bad, {{id(0), Rational(1)}}));
    EXPECT_FALSE(check_farkas_certificate(bad, {}));
}

TEST(Evaluate, AllRelations) {
    System s = parse_system("vars: x y\nx + y = 1\nx < 1\n-y <= 0\n");
    Point p{{0, Rational(1, 2)}, {1, Rational(1, 2)}};
    EXPECT_TRUE(satisfies_all(s, p));
    Point q{{0, Rational(1)}, {1, Rational(0)}};
    EXPECT_FALSE(satisfies_all(s, q));
    Point partial{{0, Rational(1)}};
    EXPECT_THROW(satisfies_all(s, partial), Error);
}

TEST(ExpandEqualities, SplitsIntoTwoRows) {
    System s = parse_system("vars: x y\nx + y = 1\nx <= 3\n");
    const System e = expand_equalities(s);
    ASSERT_EQ(e.size(), 3u);
    EXPECT_EQ(e.constraints()[0].id, id(2));
    EXPECT_EQ(e.constraints()[1].provenance.parents, std::vector<ConstraintId>{id(0)});
    EXPECT_EQ(e.constraints()[1].expr, -s.at(id(0)).expr);
    EXPECT_EQ(e.constraints()[1].rhs, Rational(-1));
    EXPECT_EQ(e.constraints()[2].id, id(1));
}
