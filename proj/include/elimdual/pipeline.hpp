#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elimdual/dual.hpp"
#include "elimdual/system.hpp"

namespace elimdual {

/// How the pipeline picks the next (lambda, pivot row) pair.
///
/// - kMainRowsFirst: lambdas in ascending index; pivots descended from dual
///   main rows first, then converted sign rows, then smallest id.
/// - kPaperSequence: explicit (variable name, row label) pairs, then
///   kMainRowsFirst for whatever is left.
/// - kExplicitOrder: lambdas in the listed order, pivots as kMainRowsFirst.
struct PivotRule {
    enum class Kind { kMainRowsFirst, kPaperSequence, kExplicitOrder };

    Kind kind = Kind::kMainRowsFirst;
    std::vector<std::pair<std::string, std::string>> sequence;
    std::vector<std::string> order;

    static PivotRule main_rows_first() { return {}; }
    static PivotRule paper_sequence(std::vector<std::pair<std::string, std::string>> steps);
    static PivotRule explicit_order(std::vector<std::string> names);

    /// "main-first", "paper-seq:l3@row-x,l2@row-y" or "order:l3,l2".
    static PivotRule parse(std::string_view text);
};

struct PipelineOptions {
    /// Right-hand side of the added sum(x) <= bound row, also used as sigma.
    Rational bound{2};
};

struct WorkingSystem {
    System input;
    bool input_was_cone = false;
    System cone;
    System augmented;  // sum row first, then the cone rows
    ElementaryDual dual;
    System working;    // == dual.system
    VarIndex lambda1 = 0;
};

/// Builds the lambda system: the strong elementary dual (objective = sum of
/// cone variables, sigma = bound) of the cone augmented with sum(x) <= bound.
/// Inputs flagged as cones skip homogenization; others must be bounded.
WorkingSystem build_working_system(const System& primal, const PipelineOptions& options = {});

enum class PivotKind { kOriginalMain, kConvertedSign, kFallbackZero };

const char* to_string(PivotKind kind);

struct PipelineStep {
    VarIndex variable = 0;
    std::string variable_name;
    std::optional<ConstraintId> pivot;  // absent for the fallback
    std::string pivot_label;
    PivotKind kind = PivotKind::kOriginalMain;
    System result;
};

/// Feasible set of a one-variable system.
struct Interval {
    bool empty = false;
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool lo_open = false;
    bool hi_open = false;

    [[nodiscard]] bool is_point(const Rational& value) const;
    [[nodiscard]] std::string str() const;
    friend bool operator==(const Interval&, const Interval&) = default;
};

enum class Verdict { kSolvable, kUnsolvable };

const char* to_string(Verdict verdict);

struct PipelineTrace {
    WorkingSystem seed;
    std::vector<PipelineStep> steps;
    System terminal;
    Interval interval;
    Verdict verdict = Verdict::kUnsolvable;
};

Interval terminal_interval(const System& system, VarIndex var);

/// Eliminates every lambda except lambda_1 by substitution through a pivot
/// row set to equality (falling back to lambda_i := 0 when no row qualifies)
/// and reads the verdict off lambda_1's interval: Solvable iff it is {1}.
PipelineTrace run(const System& primal, const PivotRule& rule = {}, const PipelineOptions& options = {});

/// Same loop on a prepared working system.
PipelineTrace run(WorkingSystem seed, const PivotRule& rule);

/// lambda_i := 0: drops the sign row of var and zeroes its coefficients.
System fallback_zero(const System& system, VarIndex var);

/// Rows eligible as pivots for var: not the extension, not an untouched
/// sign row, nonzero coefficient on var.
std::vector<ConstraintId> eligible_pivots(const System& system, VarIndex var);

/// Re-derives every step from its predecessor; true when all match exactly.
bool replay_trace(const PipelineTrace& trace);

struct ExploreMove {
    std::string variable;
    std::string row;  // label, or "zero" for the fallback
    friend bool operator==(const ExploreMove&, const ExploreMove&) = default;
};

struct ExploreOutcome {
    std::vector<ExploreMove> sequence;  // one representative
    Interval interval;
    Verdict verdict = Verdict::kUnsolvable;
};

struct ExploreReport {
    std::vector<ExploreOutcome> outcomes;  // distinct intervals, canonical order
    bool pivot_sensitive = false;          // verdicts differ
    std::size_t states = 0;
};

/// Enumerates every admissible pivot sequence (memoized on the reached
/// system). Throws Error(kBoundExceeded) past max_states distinct states.
ExploreReport explore(const System& primal, std::size_t max_states = 20000, const PipelineOptions& options = {});
ExploreReport explore(const WorkingSystem& seed, std::size_t max_states);

std::string format_sequence(const std::vector<ExploreMove>& moves);

}  // namespace elimdual
