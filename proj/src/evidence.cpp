#include "bdt/evidence.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace bdt {

namespace {

void check_ratio(double ratio, const char* role) {
    if (std::isnan(ratio) || ratio < 0.0) {
        std::ostringstream msg;
        msg << role << " odds ratio must be nonnegative, got " << ratio;
        throw ValidationError(msg.str());
    }
}

void check_probability(double p) {
    if (!(p >= 0.0) || p > 1.0) {
        std::ostringstream msg;
        msg << "probability " << p << " is outside [0, 1]";
        throw ValidationError(msg.str());
    }
}

} // namespace

Odds Odds::from_probability(double p) {
    check_probability(p);
    if (p == 1.0) {
        return {std::numeric_limits<double>::infinity()};
    }
    return {p / (1.0 - p)};
}

double Odds::to_probability() const {
    check_ratio(ratio, "the");
    if (std::isinf(ratio)) {
        return 1.0;
    }
    return ratio / (1.0 + ratio);
}

Odds posterior_odds(Odds prior, Odds likelihood_ratio) {
    check_ratio(prior.ratio, "prior");
    check_ratio(likelihood_ratio.ratio, "likelihood");
    const bool zero_times_inf =
        (prior.ratio == 0.0 && std::isinf(likelihood_ratio.ratio)) ||
        (std::isinf(prior.ratio) && likelihood_ratio.ratio == 0.0);
    if (zero_times_inf) {
        throw ValidationError("indeterminate odds: 0 times infinity");
    }
    return {prior.ratio * likelihood_ratio.ratio};
}

double deciban(double p) {
    check_probability(p);
    if (p == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    if (p == 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(p / (1.0 - p));
}

double inverse_deciban(double d) {
    if (std::isnan(d)) {
        throw ValidationError("deciban value is NaN");
    }
    if (d == std::numeric_limits<double>::infinity()) {
        return 1.0;
    }
    if (d == -std::numeric_limits<double>::infinity()) {
        return 0.0;
    }
    const double odds = std::pow(10.0, d / 10.0);
    return odds / (1.0 + odds);
}

} // namespace bdt
