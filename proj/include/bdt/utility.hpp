#pragma once

#include <string>
#include <utility>

#include "bdt/distribution.hpp"
#include "bdt/errors.hpp"

namespace bdt {

enum class UtilityKind {
    bernoulli_income, ///< u = q log((S + delta) / S), concave in the increment
    bernoulli_debt,   ///< u = -b log((D + delta) / D), positive for repayments
    linear,           ///< u = delta (the large-wealth limit, identity scale)
};

/// A utility model mapping monetary increments to utiles. For the
/// logarithmic kinds, `weber` is the Weber constant (utiles per log unit),
/// `reference` the initial wealth or initial debt, and `gamma` the smallest
/// increment that still matters; increments at or below -reference + gamma
/// are outside the legal domain.
struct UtilityModel {
    UtilityKind kind = UtilityKind::linear;
    double weber = 1.0;
    double reference = 0.0;
    double gamma = 1.0;

    static UtilityModel bernoulli_income(double initial_wealth, double weber, double gamma = 1.0);
    static UtilityModel bernoulli_debt(double initial_debt, double weber, double gamma = 1.0);
    static UtilityModel linear();

    /// Utility of a monetary increment, in utiles. Increments outside the
    /// model's domain raise DomainError; clamping would silently corrupt
    /// downstream bound computations.
    double value(double delta) const;

    /// True when `delta` lies strictly inside the model's legal domain.
    bool in_domain(double delta) const;

    std::string kind_name() const;
};

/// Weber constant such that one just-noticeable difference at the reference
/// equals one utile. For income the JND is an increment; for debt it is a
/// decrement of the initial debt.
double calibrate_weber(double reference, double jnd, UtilityKind kind);

/// Maps every outcome value through the model, keeping probabilities
/// unchanged. A value outside the domain raises DomainError naming it.
DiscreteDistribution pushforward(const DiscreteDistribution& outcomes, const UtilityModel& model);

/// Utilities of the extreme outcomes: (u(min_outcome), u(max_outcome)).
std::pair<double, double> utility_support(const UtilityModel& model, double min_outcome,
                                          double max_outcome);

/// Sensation strength under the power law of stimulus perception: c * S^q.
double power_law_sensation(double stimulus, double exponent, double scale);

/// Log of the sensation-strength ratio between two stimuli: q * log(S1/S0).
/// Equals the logarithmic utility of the increment S1 - S0 at reference S0.
double log_ratio_sensation(double stimulus, double reference, double exponent);

} // namespace bdt
