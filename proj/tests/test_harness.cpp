#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "elimdual/cone.hpp"
#include "elimdual/harness.hpp"
#include "oracle.hpp"

using namespace elimdual;

namespace {

System data_file(const std::string& name) {
    std::ifstream in(std::string(ELIMDUAL_DATA_DIR) + "/" + name);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

}  // namespace

TEST(Harness, RngIsReproducible) {
    TrialRng a(42, 7);
    TrialRng b(42, 7);
    TrialRng c(42, 8);
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
    for (int i = 0; i < 1000; ++i) {
        const long v = a.uniform(-5, 5);
        EXPECT_GE(v, -5);
        EXPECT_LE(v, 5);
    }
}

TEST(Harness, BoxModeSingleVariable) {
    GenParams params;
    params.max_vars = 1;
    TrialRng rng(1, 0);
    const System s = generate_bounded(rng, params);
    EXPECT_EQ(s.num_variables(), 1u);
    bool has_box = false;
    for (const auto& c : s.constraints()) {
        if (c.expr == LinearExpr::variable(0) && c.rhs >= Rational(1) && c.rhs <= Rational(5)) has_box = true;
    }
    EXPECT_TRUE(has_box) << print_system(s);
    EXPECT_TRUE(is_bounded(s));
}

TEST(Harness, GeneratorsAreDeterministicAndBounded) {
    for (BoundMode mode : {BoundMode::kBox, BoundMode::kFilter}) {
        GenParams params;
        params.mode = mode;
        for (std::size_t t = 0; t < 40; ++t) {
            TrialRng a(77, t);
            TrialRng b(77, t);
            const System s = generate_bounded(a, params);
            EXPECT_EQ(print_system(s), print_system(generate_bounded(b, params)));
            EXPECT_FALSE(oracle::has_ray(s)) << print_system(s);
            EXPECT_LE(s.num_variables(), params.max_vars);
        }
    }
}

TEST(Harness, FilterModeGivesUp) {
    GenParams params;
    params.max_vars = 1;
    params.coeff_min = -1;
    params.coeff_max = -1;
    params.mode = BoundMode::kFilter;
    TrialRng rng(1, 0);
    try {
        (void)generate_bounded(rng, params);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kGeneratorExhausted);
    }
}

TEST(Harness, ParamsValidation) {
    GenParams p;
    p.max_vars = 0;
    EXPECT_THROW(p.validate(), Error);
    p = {};
    p.coeff_min = 3;
    p.coeff_max = 2;
    EXPECT_THROW(p.validate(), Error);
    EXPECT_EQ(parse_bound_mode("filter"), BoundMode::kFilter);
    EXPECT_THROW((void)parse_bound_mode("clip"), Error);
}

TEST(Harness, ZeroTrials) {
    const AggregateReport r = run_difftest(GenParams{}, 0);
    EXPECT_EQ(r.trials, 0u);
    EXPECT_EQ(r.agreements, 0u);
    const Json j = to_json(r);
    EXPECT_FALSE(j.contains("agreement_rate"));
    EXPECT_TRUE(j["trial_reports"].empty());
    EXPECT_FALSE(j.contains("wall_clock_seconds"));
}

TEST(Harness, InjectedMainExampleAgrees) {
    const System s = data_file("solve9-main.txt");
    const TrialReport r =
        evaluate_trial(s, 0, {.rule = PivotRule::parse("paper-seq:l3@row-x,l2@row-y,l4@sign-l3")});
    ASSERT_TRUE(r.error.empty()) << r.error;
    EXPECT_TRUE(*r.oracle_feasible);
    EXPECT_TRUE(r.oracle_certified);
    EXPECT_EQ(*r.pipeline, Verdict::kSolvable);
    EXPECT_TRUE(r.agreement);
}

TEST(Harness, InjectedFinalExampleAgreesUnderDocumentedSequence) {
    const System s = data_file("solve9-final.txt");
    const TrialReport r = evaluate_trial(s, 1, {.rule = PivotRule::parse("paper-seq:l3@row-x,l2@sign-l3")});
    ASSERT_TRUE(r.error.empty()) << r.error;
    EXPECT_FALSE(*r.oracle_feasible);
    EXPECT_TRUE(r.oracle_certified);
    EXPECT_EQ(*r.pipeline, Verdict::kUnsolvable);
    EXPECT_TRUE(r.agreement);
    EXPECT_TRUE(r.explored);
    EXPECT_TRUE(r.pivot_sensitive);
    EXPECT_GE(r.distinct_intervals, 2u);
}

TEST(Harness, TrialReportInvariants) {
    GenParams params;
    for (std::size_t t = 0; t < 40; ++t) {
        const TrialReport r = run_trial(params, t);
        ASSERT_TRUE(r.error.empty()) << r.error;
        EXPECT_TRUE(r.oracle_certified) << r.system;
        EXPECT_EQ(r.agreement, *r.oracle_feasible == (*r.pipeline == Verdict::kSolvable));
        EXPECT_EQ(r.witness.has_value(), !r.agreement);
        if (r.lambdas > 6) EXPECT_FALSE(r.explored);
        EXPECT_TRUE(replay_disagreement(r)) << r.system;
    }
}

TEST(Harness, DifftestIsByteDeterministicAndThreadIndependent) {
    GenParams params;
    const std::string a = to_json(run_difftest(params, 24)).dump();
    const std::string b = to_json(run_difftest(params, 24)).dump();
    const std::string c = to_json(run_difftest(params, 24, 4)).dump();
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
}

TEST(Harness, AggregateCountsMatchTrials) {
    const AggregateReport r = run_difftest(GenParams{}, 30, 2);
    std::size_t agree = 0;
    std::size_t explored = 0;
    std::size_t sensitive = 0;
    std::size_t errors = 0;
    for (const auto& t : r.reports) {
        if (!t.error.empty()) {
            ++errors;
            continue;
        }
        agree += t.agreement;
        explored += t.explored;
        sensitive += t.pivot_sensitive;
    }
    EXPECT_EQ(r.agreements, agree);
    EXPECT_EQ(r.explored, explored);
    EXPECT_EQ(r.pivot_sensitive, sensitive);
    EXPECT_EQ(r.errors, errors);
    EXPECT_EQ(r.agreements + r.disagreements() + r.errors, r.trials);
    const Json j = to_json(r);
    EXPECT_EQ(j["disagreement_witnesses"].size(), r.disagreements());
    EXPECT_TRUE(to_json(r, true).contains("wall_clock_seconds"));
}

// Disagreement witnesses replay: re-parsing the recorded system and
// replaying the recorded pivot sequence reproduces both verdicts.
TEST(Harness, DisagreementsReplay) {
    const AggregateReport r = run_difftest(GenParams{}, 60, 4);
    for (const auto& t : r.reports) {
        if (t.error.empty() && !t.agreement) EXPECT_TRUE(replay_disagreement(t)) << t.system;
    }
}
