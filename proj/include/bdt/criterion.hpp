#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bdt/distribution.hpp"
#include "bdt/utility.hpp"

namespace bdt {

enum class ScoreMode {
    sum_of_bounds,    ///< lower + upper bound (the default criterion)
    lower_only,       ///< the regulator's view: maximize the worst case
    upper_only,       ///< the bonus-chaser's view: maximize the best case
    expectation_only, ///< 2 * mean, the classical expected-utility criterion
};

/// Configuration of the k-sigma bounds and the comparison rule. The caution
/// and opportunity multipliers default to k; setting them apart puts an
/// explicit premium on one side.
struct BoundsConfig {
    double k = 1.0;
    std::optional<double> caution;     // lower-bound sigma multiplier
    std::optional<double> opportunity; // upper-bound sigma multiplier
    ScoreMode mode = ScoreMode::sum_of_bounds;
    bool clip_to_support = true;
    double tie_tolerance = 1e-9; // relative, for declaring indifference

    double caution_multiplier() const { return caution.value_or(k); }
    double opportunity_multiplier() const { return opportunity.value_or(k); }

    static BoundsConfig k_sigma(double k) {
        BoundsConfig cfg;
        cfg.k = k;
        return cfg;
    }
};

/// k-sigma bounds of a utility distribution, before and after clipping to
/// the support extremes. Only a bound that overshoots its extreme is
/// replaced; the other bound keeps its raw value.
struct BoundsResult {
    double mean = 0.0;
    double stddev = 0.0;
    double lower_raw = 0.0;
    double upper_raw = 0.0;
    double lower = 0.0; // post-clip
    double upper = 0.0; // post-clip
    double support_min = 0.0;
    double support_max = 0.0;
    bool clipped_low = false;
    bool clipped_high = false;
};

BoundsResult bounds(const DiscreteDistribution& utility_dist, const BoundsConfig& cfg);

/// The scalar each decision is ranked by, per cfg.mode.
double criterion_score(const BoundsResult& b, const BoundsConfig& cfg);

/// Outcome of a comparison: the argmax set of decision indices (more than
/// one entry means indifference within the tie tolerance) and every
/// decision's score.
struct Preference {
    std::vector<std::size_t> best;
    std::vector<double> scores;

    bool indifferent() const { return best.size() != 1; }
    std::size_t preferred() const { return best.front(); }
    /// Winning score minus the best score among the other decisions; zero
    /// when indifferent or when there is no other decision.
    double margin() const;
};

/// Ranks utility distributions by criterion score.
Preference compare_scores(const std::vector<double>& scores, double tie_tolerance);

/// Full pipeline over explicit outcome distributions: pushforward through
/// the utility model, k-sigma bounds, scores, argmax.
Preference decide(const std::vector<DiscreteDistribution>& outcome_dists,
                  const UtilityModel& model, const BoundsConfig& cfg);

/// Full pipeline over a decision problem: joint construction and event
/// marginalization per decision, then as above.
Preference decide(const DecisionProblem& problem, const UtilityModel& model,
                  const BoundsConfig& cfg);

} // namespace bdt
