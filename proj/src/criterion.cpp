#include "bdt/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace bdt {

BoundsResult bounds(const DiscreteDistribution& utility_dist, const BoundsConfig& cfg) {
    if (cfg.caution_multiplier() < 0.0 || cfg.opportunity_multiplier() < 0.0 || cfg.k < 0.0) {
        throw ValidationError("sigma multipliers must be nonnegative");
    }
    BoundsResult result;
    result.mean = utility_dist.mean();
    result.stddev = utility_dist.stddev();
    result.support_min = utility_dist.min_value();
    result.support_max = utility_dist.max_value();
    result.lower_raw = result.mean - cfg.caution_multiplier() * result.stddev;
    result.upper_raw = result.mean + cfg.opportunity_multiplier() * result.stddev;
    result.lower = result.lower_raw;
    result.upper = result.upper_raw;
    if (cfg.clip_to_support) {
        // Each overshooting bound is replaced by its support extreme
        // independently; a bound exactly on the extreme is left alone.
        if (result.lower_raw < result.support_min) {
            result.lower = result.support_min;
            result.clipped_low = true;
        }
        if (result.upper_raw > result.support_max) {
            result.upper = result.support_max;
            result.clipped_high = true;
        }
    }
    return result;
}

double criterion_score(const BoundsResult& b, const BoundsConfig& cfg) {
    switch (cfg.mode) {
    case ScoreMode::sum_of_bounds:
        return b.lower + b.upper;
    case ScoreMode::lower_only:
        return b.lower;
    case ScoreMode::upper_only:
        return b.upper;
    case ScoreMode::expectation_only:
        return 2.0 * b.mean;
    }
    throw ValidationError("unknown score mode");
}

double Preference::margin() const {
    if (indifferent() || scores.size() < 2) {
        return 0.0;
    }
    const std::size_t winner = preferred();
    double runner_up = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (i != winner) {
            runner_up = std::max(runner_up, scores[i]);
        }
    }
    return scores[winner] - runner_up;
}

Preference compare_scores(const std::vector<double>& scores, double tie_tolerance) {
    if (scores.empty()) {
        throw ValidationError("no decisions to compare");
    }
    Preference pref;
    pref.scores = scores;
    const double top = *std::max_element(scores.begin(), scores.end());
    const double slack = tie_tolerance * std::max(1.0, std::abs(top));
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (top - scores[i] <= slack) {
            pref.best.push_back(i);
        }
    }
    return pref;
}

namespace {

Preference decide_on_utilities(const std::vector<DiscreteDistribution>& utility_dists,
                               const BoundsConfig& cfg) {
    std::vector<double> scores;
    scores.reserve(utility_dists.size());
    for (const auto& dist : utility_dists) {
        scores.push_back(criterion_score(bounds(dist, cfg), cfg));
    }
    return compare_scores(scores, cfg.tie_tolerance);
}

} // namespace

Preference decide(const std::vector<DiscreteDistribution>& outcome_dists,
                  const UtilityModel& model, const BoundsConfig& cfg) {
    if (outcome_dists.size() < 2) {
        throw ValidationError("a problem of choice needs at least two decisions");
    }
    std::vector<DiscreteDistribution> utility_dists;
    utility_dists.reserve(outcome_dists.size());
    for (std::size_t i = 0; i < outcome_dists.size(); ++i) {
        try {
            utility_dists.push_back(pushforward(outcome_dists[i], model));
        } catch (const DomainError& err) {
            std::ostringstream msg;
            msg << "decision " << i + 1 << ": " << err.what();
            throw DomainError(msg.str());
        }
    }
    return decide_on_utilities(utility_dists, cfg);
}

Preference decide(const DecisionProblem& problem, const UtilityModel& model,
                  const BoundsConfig& cfg) {
    if (problem.decisions.size() < 2) {
        throw ValidationError("a problem of choice needs at least two decisions");
    }
    std::vector<DiscreteDistribution> outcome_dists;
    outcome_dists.reserve(problem.decisions.size());
    for (const auto& decision : problem.decisions) {
        try {
            outcome_dists.push_back(outcome_distribution(decision));
        } catch (const ValidationError& err) {
            std::ostringstream msg;
            msg << "decision '" << decision.label << "': " << err.what();
            throw ValidationError(msg.str());
        }
    }
    return decide(outcome_dists, model, cfg);
}

} // namespace bdt
