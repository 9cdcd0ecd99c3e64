#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bdt/errors.hpp"

namespace bdt {

/// A Bayesian network over binary variables, built in topological order:
/// each variable's parents must already be present, which keeps the parent
/// references acyclic by construction. Inference is exact full-joint
/// enumeration, intended for networks of at most ~20 variables.
class BinaryNetwork {
public:
    /// Adds a root variable with P(name = true) = p_true.
    void add_variable(const std::string& name, double p_true);

    /// Adds a variable with the given parents. cpt[mask] = P(name = true |
    /// parent assignment), where bit i of mask is parent i's truth value;
    /// cpt.size() must be 2^parents.size().
    void add_variable(const std::string& name, const std::vector<std::string>& parents,
                      const std::vector<double>& cpt);

    std::size_t variable_count() const { return variables_.size(); }
    bool has_variable(const std::string& name) const;

    /// Joint probability of a complete assignment (one bool per variable, in
    /// declaration order), by the product rule over the conditional tables.
    double joint_probability(const std::vector<bool>& assignment) const;

    /// P(query = true | evidence) by summing the full joint over all
    /// assignments consistent with the evidence. Evidence of probability
    /// zero has no defined conditional and raises an error.
    double enumerate_posterior(const std::string& query,
                               const std::map<std::string, bool>& evidence) const;

private:
    struct Variable {
        std::string name;
        std::vector<std::size_t> parents;
        std::vector<double> cpt; // P(true | parent mask)
    };

    std::size_t index_of(const std::string& name) const;

    std::vector<Variable> variables_;
};

} // namespace bdt
