#pragma once

#include "bdt/errors.hpp"

namespace bdt {

/// Odds P(A)/P(not A), a nonnegative ratio; +infinity encodes certainty.
struct Odds {
    double ratio = 1.0;

    static Odds from_probability(double p);
    double to_probability() const;
};

/// Posterior odds = prior odds * likelihood ratio. The 0 * infinity case is
/// indeterminate and raises an error.
Odds posterior_odds(Odds prior, Odds likelihood_ratio);

/// Evidence in decibans: 10 * log10(p / (1 - p)). p = 0 and p = 1 map to
/// -infinity and +infinity.
double deciban(double p);

/// Probability with the given deciban evidence; inverse of deciban().
double inverse_deciban(double d);

} // namespace bdt
