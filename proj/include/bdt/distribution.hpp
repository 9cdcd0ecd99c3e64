#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bdt/errors.hpp"

namespace bdt {

/// Tolerance used when checking that probabilities sum to one.
inline constexpr double kNormalizationTol = 1e-9;

/// A finite probability distribution over real values.
///
/// The support is kept sorted by value; equal values are merged by summing
/// their probabilities, and exact zero-mass atoms are dropped, so two
/// distributions over the same masses compare equal regardless of input
/// order. Probabilities must be nonnegative and sum to one within
/// kNormalizationTol.
class DiscreteDistribution {
public:
    struct Atom {
        double value;
        double probability;
    };

    DiscreteDistribution(std::initializer_list<Atom> atoms)
        : DiscreteDistribution(std::vector<Atom>(atoms)) {}

    explicit DiscreteDistribution(std::vector<Atom> atoms);

    static DiscreteDistribution point_mass(double value);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    double min_value() const { return atoms_.front().value; }
    double max_value() const { return atoms_.back().value; }

    /// P(value), 0 if the value is not in the support.
    double probability_of(double value) const;

    /// Raw moment E[X^k], k >= 1.
    double moment(unsigned k) const;
    double mean() const { return moment(1); }
    /// sqrt(E[X^2] - E[X]^2); exact zero for a point mass.
    double stddev() const;

    /// Same masses with probabilities rescaled to sum to exactly one.
    /// Accepts any positive total, unlike the constructor.
    static DiscreteDistribution renormalized(std::vector<Atom> atoms);

    /// Pushforward through a strictly defined map; probabilities carry over
    /// unchanged (atoms mapping to equal values merge).
    DiscreteDistribution map(const std::function<double(double)>& f) const;

    bool operator==(const DiscreteDistribution& other) const;

private:
    DiscreteDistribution() = default;
    std::vector<Atom> atoms_;
};

/// A row-stochastic table P(column | row): every row sums to one within
/// kNormalizationTol.
class ConditionalTable {
public:
    explicit ConditionalTable(std::vector<std::vector<double>> rows);

    std::size_t row_count() const { return rows_.size(); }
    std::size_t column_count() const { return rows_.front().size(); }
    double at(std::size_t row, std::size_t col) const { return rows_[row][col]; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

    bool operator==(const ConditionalTable& other) const { return rows_ == other.rows_; }

private:
    std::vector<std::vector<double>> rows_;
};

/// A bivariate event-outcome probability table whose entries sum to one,
/// together with the monetary value of each outcome column.
class JointTable {
public:
    JointTable(std::vector<std::vector<double>> entries, std::vector<double> outcome_values);

    std::size_t event_count() const { return entries_.size(); }
    std::size_t outcome_count() const { return outcome_values_.size(); }
    double at(std::size_t event, std::size_t outcome) const { return entries_[event][outcome]; }
    const std::vector<double>& outcome_values() const { return outcome_values_; }

    /// P(event j) = sum_k entry(j, k).
    double event_marginal(std::size_t event) const;
    /// P(outcome k) = sum_j entry(j, k).
    double outcome_marginal(std::size_t outcome) const;

private:
    std::vector<std::vector<double>> entries_;
    std::vector<double> outcome_values_;
};

/// One decision arm: an event prior, the outcome table conditional on each
/// event, and the monetary outcome values.
struct Decision {
    std::string label;
    std::vector<double> event_prior;
    ConditionalTable outcome_table;
    std::vector<double> outcome_values;
};

/// A problem of choice: the set of decisions to choose between.
struct DecisionProblem {
    std::vector<Decision> decisions;
};

/// Product rule: entry(j, k) = prior(j) * table(j, k).
JointTable joint_from_conditionals(const std::vector<double>& prior,
                                   const ConditionalTable& table,
                                   std::vector<double> outcome_values);

/// Sum rule over events: P(O_k) = sum_j entry(j, k). Outcome columns with
/// equal values merge into one atom.
DiscreteDistribution marginalize_outcomes(const JointTable& joint);

/// Outcome distribution for one decision arm (product rule then
/// marginalization).
DiscreteDistribution outcome_distribution(const Decision& decision);

/// Net return from n draws at success probability p, minus a fixed fee:
/// support r - fee for r = 0..n with binomial weights. Coefficients are
/// accumulated in log space so n = 100 stays finite.
DiscreteDistribution binomial_outcome_dist(unsigned n, double p, double fee);

/// Net return when the success count R in an urn of size N is unknown:
/// uniform prior over R = 1..N-1 mixed through the binomial, shifted by fee.
DiscreteDistribution mixture_binomial_outcome_dist(unsigned n, unsigned urn_size, double fee);

} // namespace bdt
