#pragma once

// Versioned JSON documents shared by the CLI and the Python module.

#include <optional>
#include <string>
#include <vector>

#include "elimdual/dual.hpp"
#include "elimdual/fourier.hpp"
#include "elimdual/implicit.hpp"
#include "elimdual/io.hpp"
#include "elimdual/pipeline.hpp"

namespace elimdual {

Json envelope(const char* kind);

std::vector<VarIndex> resolve_variables(const System& system, const std::vector<std::string>& names);

// Objective and sigma given as text; empty objective falls back to the
// system's maximize line when strong is set.
ElementaryDual build_dual(const System& primal, bool strong, const std::string& objective_text,
                          const std::string& sigma_text);

struct ConeAnalysis {
    bool bounded = false;
    bool reduced_to_origin = false;
    bool full_dimensional = false;
};

// The cone of a primal: the input itself when cone-flagged.
System cone_of(const System& primal);
ConeAnalysis analyze_cone(const System& primal, const System& cone);

Json check_report(const System& expanded, const FeasibilityVerdict& verdict);
Json fourier_report(const std::vector<std::string>& eliminated, const System& result);
Json dual_report(const System& primal, const ElementaryDual& dual);
Json implicit_report(const System& expanded, const ImplicitReport& report);
Json cone_report(const System& cone, const std::optional<ConeAnalysis>& analysis);
Json solve9_report(const std::string& rule, const Rational& bound, const PipelineTrace& trace,
                   const std::optional<ExploreReport>& tree, bool include_systems);
Json error_report(const Error& error);

}  // namespace elimdual
