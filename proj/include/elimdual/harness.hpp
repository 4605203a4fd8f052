#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "elimdual/io.hpp"
#include "elimdual/pipeline.hpp"
#include "elimdual/system.hpp"

namespace elimdual {

enum class BoundMode { kBox, kFilter };

const char* to_string(BoundMode mode);
BoundMode parse_bound_mode(std::string_view text);

struct GenParams {
    std::size_t max_vars = 4;
    std::size_t max_cons = 6;  // main rows, box rows not counted
    long coeff_min = -5;
    long coeff_max = 5;
    BoundMode mode = BoundMode::kBox;
    std::uint64_t seed = 42;
    Rational bound{2};  // pipeline sum(x) <= bound and sigma

    /// Throws Error(kInvalidArgument) on empty ranges or max_vars == 0.
    void validate() const;
};

/// Per-trial stream: splitmix64(seed, trial) seeds a 64-bit Mersenne
/// twister. Integer draws use rejection sampling so the stream is identical
/// across standard libraries.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next() { return engine_(); }
    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Standard-shape bounded system: random main rows plus x >= 0; box mode
/// adds x_j <= U_j (U_j in [1, 5]), filter mode redraws until bounded
/// (Error(kGeneratorExhausted) after 1000 rejections).
System generate_bounded(TrialRng& rng, const GenParams& params);

/// Standard-shape system without any boundedness guarantee.
System generate_standard(TrialRng& rng, const GenParams& params);

/// General system: free variables and a mix of <=, < and = rows.
System generate_system(TrialRng& rng, const GenParams& params);

/// What the oracle decides: the system itself, or for inputs flagged as
/// cones, whether the cone has a nonzero point.
System oracle_input(const System& system);

struct TrialReport {
    std::size_t index = 0;
    std::string system;  // canonical file text
    std::optional<bool> oracle_feasible;
    bool oracle_certified = false;  // witness / certificate re-checked
    std::optional<Verdict> pipeline;
    std::optional<Interval> interval;
    std::string sequence;  // pipeline moves, replayable via paper-seq
    std::size_t lambdas = 0;
    bool explored = false;
    bool pivot_sensitive = false;
    std::size_t distinct_intervals = 0;
    bool agreement = false;
    std::string error;  // empty when the trial ran to completion

    /// Filled for disagreements only.
    std::optional<Json> witness;
};

struct AggregateReport {
    GenParams params;
    std::size_t trials = 0;
    std::size_t agreements = 0;
    std::size_t errors = 0;
    std::size_t explored = 0;
    std::size_t pivot_sensitive = 0;
    std::vector<TrialReport> reports;
    double wall_clock_seconds = 0;

    [[nodiscard]] std::size_t disagreements() const { return trials - agreements - errors; }
};

struct TrialOptions {
    Rational bound{2};
    PivotRule rule = PivotRule::main_rows_first();
    std::size_t explore_max_lambdas = 6;
    std::size_t explore_max_states = 20000;
};

/// Oracle, pipeline (default rule unless overridden) and (for small working systems) explore on
/// one system. Errors are recorded, never thrown.
TrialReport evaluate_trial(const System& system, std::size_t index, const TrialOptions& options = {});

TrialReport run_trial(const GenParams& params, std::size_t index);

/// Trials run on `threads` workers; the report equals the sequential one.
AggregateReport run_difftest(const GenParams& params, std::size_t trials, unsigned threads = 1);

/// Re-parses a disagreement's system, replays the recorded sequence and the
/// oracle, and checks both verdicts are reproduced.
bool replay_disagreement(const TrialReport& report, const Rational& bound = Rational(2));

Json to_json(const GenParams& params);
Json to_json(const TrialReport& report);
Json to_json(const AggregateReport& report, bool include_timing = false);

}  // namespace elimdual
