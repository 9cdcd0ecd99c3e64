#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdt/criterion.hpp"
#include "bdt/problem_file.hpp"

namespace bdt {

/// Everything the pipeline computed for one decision.
struct DecisionReport {
    std::string label;
    DiscreteDistribution outcome_dist = DiscreteDistribution::point_mass(0.0);
    DiscreteDistribution utility_dist = DiscreteDistribution::point_mass(0.0);
    BoundsResult bounds;
    double score = 0.0;

    bool operator==(const DecisionReport& other) const;
};

/// Result of a full analysis: per-decision distributions, bounds and
/// scores, the verdict, and an echo of the inputs it was computed from.
/// Round-trips losslessly through the machine format.
struct ReportDocument {
    ProblemFile input;
    std::vector<DecisionReport> decisions;
    Preference verdict;
    std::optional<std::string> warning;

    bool operator==(const ReportDocument& other) const;
};

/// Runs the three pipeline steps on a validated problem.
ReportDocument analyze(const ProblemFile& input, const AnalysisOverrides& overrides = {});

/// Machine format: deterministic JSON, full-precision numbers, no
/// timestamps; identical inputs serialize byte-identically.
std::string to_machine_format(const ReportDocument& report);
ReportDocument from_machine_format(const std::string& text);

/// Human format: aligned summary with six significant digits.
std::string to_human_format(const ReportDocument& report);

} // namespace bdt
