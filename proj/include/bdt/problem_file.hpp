#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bdt/criterion.hpp"
#include "bdt/distribution.hpp"
#include "bdt/errors.hpp"
#include "bdt/utility.hpp"

namespace bdt {

/// A problem file failed to parse or to validate against the schema. The
/// message names the offending field (JSON pointer style) or the parse
/// position.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& what) : Error(what) {}
};

/// A fully validated problem file: the decisions with their event priors,
/// outcome tables, and outcome values, plus the utility model and criterion
/// configuration.
///
/// Schema (JSON):
///   {
///     "decisions": [ { "label": str,
///                      "prior": [num...],            // over events
///                      "outcome_table": [[num...]],  // optional; rows = events,
///                                                    // identity when omitted
///                      "outcome_values": [num...] } ],
///     "utility":  { "kind": "bernoulli_income" | "bernoulli_debt" | "linear",
///                   "q": num | "calibration": {"reference": num, "jnd": num},
///                   "reference": num, "gamma": num },   // gamma optional
///     "criterion": { "k": num, "mode": str, "clip_to_support": bool,
///                    "caution": num, "opportunity": num }  // all optional
///   }
/// Probability rows must sum to one within 1e-6 and are renormalized
/// exactly on acceptance.
struct ProblemFile {
    DecisionProblem problem;
    UtilityModel model;
    BoundsConfig criterion;
};

/// Parses and validates a problem document. Looser row normalization
/// (1e-6) than the core tolerance, so hand-typed priors are accepted;
/// anything further off is rejected.
ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem_file(const std::string& path);

/// Pipeline overrides from the command line.
struct AnalysisOverrides {
    std::optional<double> k;
    std::optional<double> weber;
    std::optional<ScoreMode> mode;
};

ScoreMode parse_score_mode(const std::string& name);
std::string to_string(ScoreMode mode);

} // namespace bdt
