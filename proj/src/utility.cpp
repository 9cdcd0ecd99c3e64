#include "bdt/utility.hpp"

#include <cmath>
#include <sstream>

namespace bdt {

namespace {

void check_logarithmic_params(double reference, double gamma, const char* kind) {
    if (!(reference > 0.0)) {
        std::ostringstream msg;
        msg << kind << " model needs a positive reference, got " << reference;
        throw ValidationError(msg.str());
    }
    if (!(gamma > 0.0)) {
        std::ostringstream msg;
        msg << kind << " model needs a positive significance threshold, got " << gamma;
        throw ValidationError(msg.str());
    }
}

void check_weber(double weber) {
    if (!(weber > 0.0)) {
        std::ostringstream msg;
        msg << "Weber constant must be positive, got " << weber;
        throw ValidationError(msg.str());
    }
}

} // namespace

UtilityModel UtilityModel::bernoulli_income(double initial_wealth, double weber, double gamma) {
    check_logarithmic_params(initial_wealth, gamma, "income");
    check_weber(weber);
    return {UtilityKind::bernoulli_income, weber, initial_wealth, gamma};
}

UtilityModel UtilityModel::bernoulli_debt(double initial_debt, double weber, double gamma) {
    check_logarithmic_params(initial_debt, gamma, "debt");
    check_weber(weber);
    return {UtilityKind::bernoulli_debt, weber, initial_debt, gamma};
}

UtilityModel UtilityModel::linear() {
    return {UtilityKind::linear, 1.0, 0.0, 1.0};
}

bool UtilityModel::in_domain(double delta) const {
    if (kind == UtilityKind::linear) {
        return std::isfinite(delta);
    }
    return std::isfinite(delta) && delta > -reference + gamma;
}

double UtilityModel::value(double delta) const {
    if (!in_domain(delta)) {
        std::ostringstream msg;
        msg << "increment " << delta << " is below the significance threshold of the "
            << kind_name() << " model (reference " << reference << ", gamma " << gamma << ")";
        throw DomainError(msg.str());
    }
    switch (kind) {
    case UtilityKind::bernoulli_income:
        return weber * std::log((reference + delta) / reference);
    case UtilityKind::bernoulli_debt:
        return -weber * std::log((reference + delta) / reference);
    case UtilityKind::linear:
        return delta;
    }
    throw ValidationError("unknown utility kind");
}

std::string UtilityModel::kind_name() const {
    switch (kind) {
    case UtilityKind::bernoulli_income:
        return "bernoulli_income";
    case UtilityKind::bernoulli_debt:
        return "bernoulli_debt";
    case UtilityKind::linear:
        return "linear";
    }
    return "unknown";
}

double calibrate_weber(double reference, double jnd, UtilityKind kind) {
    if (!(reference > 0.0) || !(jnd > 0.0)) {
        throw ValidationError("calibration needs positive reference and JND");
    }
    switch (kind) {
    case UtilityKind::bernoulli_income:
        // 1 utile = q log((ref + jnd) / ref)
        return 1.0 / std::log((reference + jnd) / reference);
    case UtilityKind::bernoulli_debt:
        // 1 utile = -b log((ref - jnd) / ref); the JND is a debt decrement
        if (jnd >= reference) {
            throw ValidationError("debt JND must be smaller than the initial debt");
        }
        return -1.0 / std::log((reference - jnd) / reference);
    case UtilityKind::linear:
        throw ValidationError("the linear model has no Weber constant to calibrate");
    }
    throw ValidationError("unknown utility kind");
}

DiscreteDistribution pushforward(const DiscreteDistribution& outcomes, const UtilityModel& model) {
    for (const auto& atom : outcomes.atoms()) {
        if (!model.in_domain(atom.value)) {
            std::ostringstream msg;
            msg << "outcome " << atom.value << " is outside the domain of the "
                << model.kind_name() << " model (reference " << model.reference << ", gamma "
                << model.gamma << ")";
            throw DomainError(msg.str());
        }
    }
    return outcomes.map([&model](double v) { return model.value(v); });
}

std::pair<double, double> utility_support(const UtilityModel& model, double min_outcome,
                                          double max_outcome) {
    if (min_outcome > max_outcome) {
        throw ValidationError("minimum outcome exceeds maximum outcome");
    }
    return {model.value(min_outcome), model.value(max_outcome)};
}

double power_law_sensation(double stimulus, double exponent, double scale) {
    if (!(stimulus > 0.0)) {
        throw ValidationError("power-law stimulus must be positive");
    }
    return scale * std::pow(stimulus, exponent);
}

double log_ratio_sensation(double stimulus, double reference, double exponent) {
    if (!(stimulus > 0.0) || !(reference > 0.0)) {
        throw ValidationError("sensation ratio needs positive stimuli");
    }
    return exponent * std::log(stimulus / reference);
}

} // namespace bdt
