#pragma once

#include <string>
#include <vector>

#include "bdt/criterion.hpp"
#include "bdt/distribution.hpp"
#include "bdt/utility.hpp"

namespace bdt {

/// One checked quantity in a scenario: the computed value must match the
/// expected one within the stated tolerance. `source` records where the
/// expected number comes from (literature report, closed form, exact
/// arithmetic); no check is admitted without one.
struct ScenarioCheck {
    std::string label;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string source;

    bool passed() const;
};

struct ScenarioReport {
    std::string id;
    std::string description;
    std::vector<ScenarioCheck> checks;

    bool passed() const;
};

struct ScenarioInfo {
    std::string id;
    std::string description;
};

/// Stable catalog of the built-in worked examples.
std::vector<ScenarioInfo> list_scenarios();

/// Runs one scenario; the report is deterministic across runs. Unknown ids
/// raise ValidationError.
ScenarioReport run_scenario(const std::string& id);

/// Convenience: runs the whole catalog in order.
std::vector<ScenarioReport> run_all_scenarios();

/// How a windfall received before a choice is folded into the coded
/// problem.
enum class FramingMode {
    discount_into_wealth,   ///< reference wealth grows by the gift; outcomes stay as stated
    discount_into_outcomes, ///< every outcome grows by the gift; reference stays fixed
};

/// A decision problem after reference-point adaptation.
struct FramedProblem {
    std::vector<DiscreteDistribution> outcome_dists;
    UtilityModel model;
};

/// Applies the gift to either the model's reference or the outcomes. A
/// linear model has no reference, so discounting into wealth leaves it
/// unchanged (the infinite-wealth limit).
FramedProblem frame_problem(const std::vector<DiscreteDistribution>& outcome_dists,
                            const UtilityModel& model, double gift, FramingMode mode);

} // namespace bdt
