#include "bdt/fairness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bdt {

namespace {

constexpr unsigned kScanPoints = 10001;

} // namespace

CertaintyBet::CertaintyBet(double certain, double uncertain, double probability)
    : certain_outcome(certain), uncertain_outcome(uncertain), p(probability) {
    if (uncertain_outcome == 0.0) {
        throw ValidationError("the uncertain outcome must be nonzero");
    }
    if (certain_outcome * uncertain_outcome < 0.0) {
        throw ValidationError("certainty-bet outcomes must share a sign");
    }
    if (std::abs(certain_outcome) > std::abs(uncertain_outcome)) {
        throw ValidationError("the certain outcome must not exceed the uncertain one in magnitude");
    }
    if (!(p >= 0.0) || p > 1.0) {
        std::ostringstream msg;
        msg << "bet probability " << p << " is outside [0, 1]";
        throw ValidationError(msg.str());
    }
}

DiscreteDistribution CertaintyBet::uncertain_distribution() const {
    if (p == 0.0) {
        return DiscreteDistribution::point_mass(0.0);
    }
    if (p == 1.0) {
        return DiscreteDistribution::point_mass(uncertain_outcome);
    }
    return DiscreteDistribution{{0.0, 1.0 - p}, {uncertain_outcome, p}};
}

DiscreteDistribution CertaintyBet::certain_distribution() const {
    return DiscreteDistribution::point_mass(certain_outcome);
}

std::string to_string(ClipBranch branch) {
    switch (branch) {
    case ClipBranch::none:
        return "none";
    case ClipBranch::low:
        return "low";
    case ClipBranch::high:
        return "high";
    case ClipBranch::both:
        return "both";
    }
    return "unknown";
}

const FairnessRoot& FairnessResult::single() const {
    if (roots.empty()) {
        throw SolveError("no fairness root available");
    }
    return roots.front();
}

namespace {

struct FairnessObjective {
    double uncertain_outcome;
    const UtilityModel& model;
    BoundsConfig cfg;
    double certain_score;

    DiscreteDistribution uncertain_utilities(double p) const {
        if (p <= 0.0) {
            return pushforward(DiscreteDistribution::point_mass(0.0), model);
        }
        if (p >= 1.0) {
            return pushforward(DiscreteDistribution::point_mass(uncertain_outcome), model);
        }
        return pushforward(DiscreteDistribution{{0.0, 1.0 - p}, {uncertain_outcome, p}}, model);
    }

    BoundsResult bounds_at(double p) const { return bounds(uncertain_utilities(p), cfg); }

    double operator()(double p) const {
        return criterion_score(bounds_at(p), cfg) - certain_score;
    }
};

double bisect(const FairnessObjective& f, double lo, double hi, double f_lo) {
    // Narrow past the 1e-12 design target all the way to ulp resolution;
    // the extra iterations are cheap and sharpen the fair intervals.
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double f_mid = f(mid);
        if (f_mid == 0.0) {
            return mid;
        }
        if ((f_lo < 0.0) == (f_mid < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

FairnessRoot make_root(const FairnessObjective& f, double p) {
    const BoundsResult b = f.bounds_at(p);
    FairnessRoot root;
    root.p = p;
    root.interval_low = b.lower;
    root.interval_high = b.upper;
    if (b.clipped_low && b.clipped_high) {
        root.branch = ClipBranch::both;
    } else if (b.clipped_low) {
        root.branch = ClipBranch::low;
    } else if (b.clipped_high) {
        root.branch = ClipBranch::high;
    } else {
        root.branch = ClipBranch::none;
    }
    return root;
}

} // namespace

FairnessResult fair_probability(double certain_outcome, double uncertain_outcome,
                                const UtilityModel& model, const BoundsConfig& cfg) {
    const CertaintyBet bet(certain_outcome, uncertain_outcome, 0.0); // validates the outcome pair
    const double certain_score =
        criterion_score(bounds(pushforward(bet.certain_distribution(), model), cfg), cfg);
    FairnessObjective objective{uncertain_outcome, model, cfg, certain_score};

    FairnessResult result;
    // Scan [0, 1] so that roots below the first grid step (tiny certain
    // offers) still get bracketed. Roots are reported in (0, 1]; p = 0
    // itself never counts, as a zero certain offer has no bet to balance.
    double prev_p = 0.0;
    double prev_f = objective(0.0);
    for (unsigned i = 1; i <= kScanPoints; ++i) {
        const double p = static_cast<double>(i) / kScanPoints;
        const double f = objective(p);
        if (f == 0.0) {
            result.roots.push_back(make_root(objective, p));
        } else if (prev_f != 0.0 && (prev_f < 0.0) != (f < 0.0)) {
            result.roots.push_back(make_root(objective, bisect(objective, prev_p, p, prev_f)));
        }
        prev_p = p;
        prev_f = f;
    }
    if (result.roots.empty()) {
        std::ostringstream msg;
        msg << "no fair probability in (0, 1) for certain outcome " << certain_outcome
            << " against uncertain outcome " << uncertain_outcome;
        throw SolveError(msg.str());
    }
    return result;
}

double expectation_fair_probability(double certain_outcome, double uncertain_outcome) {
    if (uncertain_outcome == 0.0) {
        throw ValidationError("the uncertain outcome must be nonzero");
    }
    return certain_outcome / uncertain_outcome;
}

double linear_fair_probability(double ratio) {
    if (!(ratio > 0.0) || ratio > 1.0) {
        throw ValidationError("fairness ratio must lie in (0, 1]");
    }
    // Under linear utility with 1-sigma bounds the fairness equation is
    // quadratic on each clipping branch; the branches join at ratio 1/2.
    if (ratio <= 0.5) {
        const double s = 2.0 * ratio; // p + sqrt(p(1-p)) = s, p <= 1/2
        return ((1.0 + 2.0 * s) - std::sqrt(1.0 + 4.0 * s - 4.0 * s * s)) / 4.0;
    }
    const double s = 2.0 * ratio - 1.0; // p - sqrt(p(1-p)) = s, p >= 1/2
    return ((1.0 + 2.0 * s) + std::sqrt(1.0 + 4.0 * s - 4.0 * s * s)) / 4.0;
}

std::vector<CurvePoint> fairness_curve(double uncertain_outcome, const UtilityModel& model,
                                       const BoundsConfig& cfg,
                                       const std::vector<double>& ratios) {
    std::vector<CurvePoint> series;
    series.reserve(ratios.size());
    std::optional<double> previous;
    for (double ratio : ratios) {
        if (!(ratio > 0.0) || ratio > 1.0) {
            throw ValidationError("fairness curve ratios must lie in (0, 1]");
        }
        CurvePoint point;
        point.ratio = ratio;
        try {
            const FairnessResult result =
                fair_probability(ratio * uncertain_outcome, uncertain_outcome, model, cfg);
            const double seed = previous.value_or(linear_fair_probability(ratio));
            const FairnessRoot* nearest = &result.roots.front();
            for (const auto& root : result.roots) {
                if (std::abs(root.p - seed) < std::abs(nearest->p - seed)) {
                    nearest = &root;
                }
            }
            point.p_fair = nearest->p;
            previous = nearest->p;
        } catch (const SolveError&) {
            point.p_fair = std::nullopt; // gap; selection continues from the last hit
        }
        series.push_back(point);
    }
    return series;
}

std::vector<double> uniform_ratio_grid(unsigned points) {
    if (points == 0) {
        throw ValidationError("ratio grid needs at least one point");
    }
    std::vector<double> ratios;
    ratios.reserve(points);
    for (unsigned i = 1; i <= points; ++i) {
        ratios.push_back(static_cast<double>(i) / points);
    }
    return ratios;
}

double kt_weight(double p, double gamma) {
    if (!(p >= 0.0) || p > 1.0) {
        throw ValidationError("weighting function argument outside [0, 1]");
    }
    if (!(gamma > 0.0)) {
        throw ValidationError("weighting exponent must be positive");
    }
    if (p == 0.0) {
        return 0.0;
    }
    if (p == 1.0) {
        return 1.0;
    }
    const double num = std::pow(p, gamma);
    return num / (num + std::pow(1.0 - p, 1.0 / gamma));
}

double kt_value(double x, double alpha, double beta, double lambda) {
    if (!(alpha > 0.0) || alpha > 1.0 || !(beta > 0.0) || beta > 1.0 || !(lambda > 0.0)) {
        throw ValidationError("value-function parameters need alpha, beta in (0, 1] and lambda > 0");
    }
    if (x >= 0.0) {
        return std::pow(x, alpha);
    }
    return -lambda * std::pow(-x, beta);
}

BetPrediction predict_kt_bet(const CertaintyBet& bet, const UtilityModel& model,
                             const BoundsConfig& cfg) {
    BetPrediction prediction;
    prediction.gains = bet.uncertain_outcome > 0.0;
    prediction.preference =
        decide({bet.uncertain_distribution(), bet.certain_distribution()}, model, cfg);

    const FairnessResult fairness =
        fair_probability(bet.certain_outcome, bet.uncertain_outcome, model, cfg);
    const FairnessRoot* nearest = &fairness.roots.front();
    for (const auto& root : fairness.roots) {
        if (std::abs(root.p - bet.p) < std::abs(nearest->p - bet.p)) {
            nearest = &root;
        }
    }
    prediction.p_fair = nearest->p;

    if (!prediction.preference.indifferent()) {
        prediction.uncertain_preferred = prediction.preference.preferred() == 0;
        // The winning side is carried by the bound that moved in its favor:
        // the upper bound when the gamble wins, the lower bound when the
        // sure thing does.
        prediction.dominating_bound = prediction.uncertain_preferred ? "upper" : "lower";
    }
    return prediction;
}

} // namespace bdt
