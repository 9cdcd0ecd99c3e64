#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdt/criterion.hpp"
#include "bdt/distribution.hpp"
#include "bdt/utility.hpp"

namespace bdt {

/// A certainty bet: the uncertain branch pays `uncertain_outcome` with
/// probability p (otherwise zero); the certain branch pays
/// `certain_outcome` surely. Both outcomes share a sign and the certain one
/// is the smaller in magnitude.
struct CertaintyBet {
    double certain_outcome = 0.0;
    double uncertain_outcome = 0.0;
    double p = 0.0;

    CertaintyBet(double certain, double uncertain, double probability);

    /// Two-point distribution {0, uncertain_outcome} with masses {1-p, p}.
    DiscreteDistribution uncertain_distribution() const;
    /// Point mass at the certain outcome.
    DiscreteDistribution certain_distribution() const;
};

/// Which clipping regime held at a fairness root.
enum class ClipBranch { none, low, high, both };

std::string to_string(ClipBranch branch);

/// One root of the fairness equation, with the bet's clipped bound pair at
/// that probability (in utiles; under linear utility these are outcome
/// units).
struct FairnessRoot {
    double p = 0.0;
    ClipBranch branch = ClipBranch::none;
    double interval_low = 0.0;
    double interval_high = 0.0;
};

struct FairnessResult {
    std::vector<FairnessRoot> roots; // ordered by p

    const FairnessRoot& single() const;
};

/// Solves for every probability in (0, 1] at which the uncertain bet's sum
/// of bounds equals the certain bet's (2 u(O_c)): a sign-change scan over a
/// dense uniform grid followed by bisection. Raises SolveError when no root
/// exists.
FairnessResult fair_probability(double certain_outcome, double uncertain_outcome,
                                const UtilityModel& model, const BoundsConfig& cfg);

/// Fair probability with no symmetry breaking (pure expectation matching):
/// p = O_c / O_u.
double expectation_fair_probability(double certain_outcome, double uncertain_outcome);

/// Closed-form fair probability under linear utility with 1-sigma bounds,
/// as a function of the ratio O_c/O_u in (0, 1]. Used to seed root
/// selection on fairness curves.
double linear_fair_probability(double ratio);

/// One point of a fairness curve; `p_fair` is empty where the solver found
/// no root.
struct CurvePoint {
    double ratio = 0.0;
    std::optional<double> p_fair;
};

/// Fair probability per ratio O_c/O_u over the given grid (ratios in
/// (0, 1]). Where several roots exist the one continuous with the previous
/// grid point is kept, seeded from the closed-form linear solution.
std::vector<CurvePoint> fairness_curve(double uncertain_outcome, const UtilityModel& model,
                                       const BoundsConfig& cfg, const std::vector<double>& ratios);

/// Uniform ratio grid i/points for i = 1..points.
std::vector<double> uniform_ratio_grid(unsigned points);

/// Probability weighting function w(p) = p^g / (p^g + (1-p)^(1/g)).
double kt_weight(double p, double gamma);

/// Two-part value function: x^alpha for gains, -lambda (-x)^beta for
/// losses.
double kt_value(double x, double alpha, double beta, double lambda);

/// Verdict on a certainty bet together with the fair-probability
/// comparison that explains it.
struct BetPrediction {
    Preference preference;            // index 0 = uncertain bet, 1 = certain bet
    double p_fair = 0.0;              // root nearest the bet's own probability
    bool uncertain_preferred = false; // strictly preferred
    bool gains = false;               // sign of the outcomes
    std::string dominating_bound;     // "upper" or "lower" (empty when indifferent)
};

BetPrediction predict_kt_bet(const CertaintyBet& bet, const UtilityModel& model,
                             const BoundsConfig& cfg);

} // namespace bdt
