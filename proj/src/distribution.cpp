#include "bdt/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bdt {

namespace {

std::vector<DiscreteDistribution::Atom> canonicalize(std::vector<DiscreteDistribution::Atom> atoms) {
    std::sort(atoms.begin(), atoms.end(),
              [](const auto& a, const auto& b) { return a.value < b.value; });
    std::vector<DiscreteDistribution::Atom> merged;
    merged.reserve(atoms.size());
    for (const auto& atom : atoms) {
        if (!merged.empty() && merged.back().value == atom.value) {
            merged.back().probability += atom.probability;
        } else {
            merged.push_back(atom);
        }
    }
    // Exact zeros carry no mass and would distort the support extremes.
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& a) { return a.probability == 0.0; }),
                 merged.end());
    return merged;
}

void check_masses(const std::vector<DiscreteDistribution::Atom>& atoms) {
    if (atoms.empty()) {
        throw ValidationError("distribution has no probability mass");
    }
    double total = 0.0;
    for (const auto& atom : atoms) {
        if (!(atom.probability >= 0.0)) {
            std::ostringstream msg;
            msg << "negative probability " << atom.probability << " at value " << atom.value;
            throw ValidationError(msg.str());
        }
        if (!std::isfinite(atom.value)) {
            throw ValidationError("non-finite support value");
        }
        total += atom.probability;
    }
    if (std::abs(total - 1.0) > kNormalizationTol) {
        std::ostringstream msg;
        msg << "probabilities sum to " << total << ", expected 1 within " << kNormalizationTol;
        throw ValidationError(msg.str());
    }
}

} // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms)
    : atoms_(canonicalize(std::move(atoms))) {
    check_masses(atoms_);
}

DiscreteDistribution DiscreteDistribution::point_mass(double value) {
    return DiscreteDistribution({{value, 1.0}});
}

double DiscreteDistribution::probability_of(double value) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), value,
                               [](const Atom& a, double v) { return a.value < v; });
    if (it != atoms_.end() && it->value == value) {
        return it->probability;
    }
    return 0.0;
}

double DiscreteDistribution::moment(unsigned k) const {
    if (k < 1) {
        throw ValidationError("moment order must be >= 1");
    }
    double acc = 0.0;
    for (const auto& atom : atoms_) {
        acc += std::pow(atom.value, static_cast<double>(k)) * atom.probability;
    }
    return acc;
}

double DiscreteDistribution::stddev() const {
    if (atoms_.size() == 1) {
        return 0.0;
    }
    const double mu = mean();
    // Centered form avoids the cancellation of E[X^2] - mu^2 for narrow
    // distributions far from zero.
    double var = 0.0;
    for (const auto& atom : atoms_) {
        const double d = atom.value - mu;
        var += d * d * atom.probability;
    }
    return std::sqrt(std::max(var, 0.0));
}

DiscreteDistribution DiscreteDistribution::renormalized(std::vector<Atom> atoms) {
    double total = 0.0;
    for (const auto& atom : atoms) {
        if (!(atom.probability >= 0.0)) {
            throw ValidationError("negative probability in renormalization");
        }
        total += atom.probability;
    }
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw ValidationError("cannot renormalize: total mass is not positive and finite");
    }
    for (auto& atom : atoms) {
        atom.probability /= total;
    }
    DiscreteDistribution dist;
    dist.atoms_ = canonicalize(std::move(atoms));
    if (dist.atoms_.empty()) {
        throw ValidationError("distribution has no probability mass");
    }
    return dist;
}

DiscreteDistribution DiscreteDistribution::map(const std::function<double(double)>& f) const {
    std::vector<Atom> mapped;
    mapped.reserve(atoms_.size());
    for (const auto& atom : atoms_) {
        mapped.push_back({f(atom.value), atom.probability});
    }
    return DiscreteDistribution(std::move(mapped));
}

bool DiscreteDistribution::operator==(const DiscreteDistribution& other) const {
    if (atoms_.size() != other.atoms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i].value != other.atoms_[i].value ||
            atoms_[i].probability != other.atoms_[i].probability) {
            return false;
        }
    }
    return true;
}

ConditionalTable::ConditionalTable(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_.front().empty()) {
        throw ValidationError("conditional table must have at least one row and column");
    }
    const std::size_t cols = rows_.front().size();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != cols) {
            throw ValidationError("conditional table rows have unequal lengths");
        }
        double total = 0.0;
        for (double p : rows_[r]) {
            if (!(p >= 0.0) || p > 1.0) {
                std::ostringstream msg;
                msg << "conditional table entry " << p << " in row " << r << " is outside [0, 1]";
                throw ValidationError(msg.str());
            }
            total += p;
        }
        if (std::abs(total - 1.0) > kNormalizationTol) {
            std::ostringstream msg;
            msg << "conditional table row " << r << " sums to " << total;
            throw ValidationError(msg.str());
        }
    }
}

JointTable::JointTable(std::vector<std::vector<double>> entries, std::vector<double> outcome_values)
    : entries_(std::move(entries)), outcome_values_(std::move(outcome_values)) {
    if (entries_.empty() || outcome_values_.empty()) {
        throw ValidationError("joint table must have at least one event and outcome");
    }
    double total = 0.0;
    for (const auto& row : entries_) {
        if (row.size() != outcome_values_.size()) {
            throw ValidationError("joint table row length does not match outcome values");
        }
        for (double p : row) {
            if (!(p >= 0.0)) {
                throw ValidationError("joint table entry is negative");
            }
            total += p;
        }
    }
    if (std::abs(total - 1.0) > kNormalizationTol) {
        std::ostringstream msg;
        msg << "joint table total mass is " << total;
        throw ValidationError(msg.str());
    }
}

double JointTable::event_marginal(std::size_t event) const {
    return std::accumulate(entries_[event].begin(), entries_[event].end(), 0.0);
}

double JointTable::outcome_marginal(std::size_t outcome) const {
    double acc = 0.0;
    for (const auto& row : entries_) {
        acc += row[outcome];
    }
    return acc;
}

JointTable joint_from_conditionals(const std::vector<double>& prior,
                                   const ConditionalTable& table,
                                   std::vector<double> outcome_values) {
    if (prior.size() != table.row_count()) {
        std::ostringstream msg;
        msg << "event prior has " << prior.size() << " entries but the outcome table has "
            << table.row_count() << " rows";
        throw ValidationError(msg.str());
    }
    if (outcome_values.size() != table.column_count()) {
        std::ostringstream msg;
        msg << "outcome value list has " << outcome_values.size()
            << " entries but the outcome table has " << table.column_count() << " columns";
        throw ValidationError(msg.str());
    }
    double prior_total = 0.0;
    for (double p : prior) {
        if (!(p >= 0.0) || p > 1.0) {
            throw ValidationError("event prior entry outside [0, 1]");
        }
        prior_total += p;
    }
    if (std::abs(prior_total - 1.0) > kNormalizationTol) {
        std::ostringstream msg;
        msg << "event prior sums to " << prior_total;
        throw ValidationError(msg.str());
    }

    std::vector<std::vector<double>> entries(prior.size(),
                                             std::vector<double>(table.column_count(), 0.0));
    for (std::size_t j = 0; j < prior.size(); ++j) {
        for (std::size_t k = 0; k < table.column_count(); ++k) {
            entries[j][k] = prior[j] * table.at(j, k);
        }
    }
    return JointTable(std::move(entries), std::move(outcome_values));
}

DiscreteDistribution marginalize_outcomes(const JointTable& joint) {
    std::vector<DiscreteDistribution::Atom> atoms;
    atoms.reserve(joint.outcome_count());
    for (std::size_t k = 0; k < joint.outcome_count(); ++k) {
        atoms.push_back({joint.outcome_values()[k], joint.outcome_marginal(k)});
    }
    return DiscreteDistribution(std::move(atoms));
}

DiscreteDistribution outcome_distribution(const Decision& decision) {
    return marginalize_outcomes(
        joint_from_conditionals(decision.event_prior, decision.outcome_table,
                                decision.outcome_values));
}

namespace {

double log_binomial_coefficient(unsigned n, unsigned r) {
    return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0);
}

// Binomial pmf evaluated through logs; exact at the p = 0 and p = 1 edges.
double binomial_pmf(unsigned n, unsigned r, double p) {
    if (p == 0.0) {
        return r == 0 ? 1.0 : 0.0;
    }
    if (p == 1.0) {
        return r == n ? 1.0 : 0.0;
    }
    const double log_pmf = log_binomial_coefficient(n, r) + r * std::log(p) +
                           (n - r) * std::log1p(-p);
    return std::exp(log_pmf);
}

} // namespace

DiscreteDistribution binomial_outcome_dist(unsigned n, double p, double fee) {
    if (n < 1) {
        throw ValidationError("binomial draw count must be >= 1");
    }
    if (!(p >= 0.0) || p > 1.0) {
        std::ostringstream msg;
        msg << "success probability " << p << " is outside [0, 1]";
        throw ValidationError(msg.str());
    }
    std::vector<DiscreteDistribution::Atom> atoms;
    atoms.reserve(n + 1);
    for (unsigned r = 0; r <= n; ++r) {
        atoms.push_back({static_cast<double>(r) - fee, binomial_pmf(n, r, p)});
    }
    return DiscreteDistribution::renormalized(std::move(atoms));
}

DiscreteDistribution mixture_binomial_outcome_dist(unsigned n, unsigned urn_size, double fee) {
    if (urn_size < 2) {
        throw ValidationError("urn size must be >= 2");
    }
    if (n < 1) {
        throw ValidationError("binomial draw count must be >= 1");
    }
    const double weight = 1.0 / (urn_size - 1.0);
    std::vector<DiscreteDistribution::Atom> atoms;
    atoms.reserve(n + 1);
    for (unsigned r = 0; r <= n; ++r) {
        double mass = 0.0;
        for (unsigned reds = 1; reds < urn_size; ++reds) {
            mass += weight * binomial_pmf(n, r, static_cast<double>(reds) / urn_size);
        }
        atoms.push_back({static_cast<double>(r) - fee, mass});
    }
    return DiscreteDistribution::renormalized(std::move(atoms));
}

} // namespace bdt
