#include "bdt/network.hpp"

#include <cmath>
#include <sstream>

namespace bdt {

void BinaryNetwork::add_variable(const std::string& name, double p_true) {
    add_variable(name, {}, {p_true});
}

void BinaryNetwork::add_variable(const std::string& name, const std::vector<std::string>& parents,
                                 const std::vector<double>& cpt) {
    if (has_variable(name)) {
        throw ValidationError("variable '" + name + "' already declared");
    }
    if (variables_.size() >= 25) {
        throw ValidationError("network too large for full-joint enumeration");
    }
    Variable var;
    var.name = name;
    for (const auto& parent : parents) {
        var.parents.push_back(index_of(parent));
    }
    const std::size_t expected = std::size_t{1} << parents.size();
    if (cpt.size() != expected) {
        std::ostringstream msg;
        msg << "variable '" << name << "' needs " << expected << " conditional entries, got "
            << cpt.size();
        throw ValidationError(msg.str());
    }
    for (double p : cpt) {
        if (!(p >= 0.0) || p > 1.0) {
            throw ValidationError("conditional probability outside [0, 1] for '" + name + "'");
        }
    }
    var.cpt = cpt;
    variables_.push_back(std::move(var));
}

bool BinaryNetwork::has_variable(const std::string& name) const {
    for (const auto& var : variables_) {
        if (var.name == name) {
            return true;
        }
    }
    return false;
}

std::size_t BinaryNetwork::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i].name == name) {
            return i;
        }
    }
    throw ValidationError("unknown variable '" + name + "'");
}

double BinaryNetwork::joint_probability(const std::vector<bool>& assignment) const {
    if (assignment.size() != variables_.size()) {
        throw ValidationError("assignment length does not match variable count");
    }
    double joint = 1.0;
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        const Variable& var = variables_[i];
        std::size_t mask = 0;
        for (std::size_t bit = 0; bit < var.parents.size(); ++bit) {
            if (assignment[var.parents[bit]]) {
                mask |= std::size_t{1} << bit;
            }
        }
        const double p_true = var.cpt[mask];
        joint *= assignment[i] ? p_true : 1.0 - p_true;
    }
    return joint;
}

double BinaryNetwork::enumerate_posterior(const std::string& query,
                                          const std::map<std::string, bool>& evidence) const {
    const std::size_t query_index = index_of(query);
    if (evidence.count(query) != 0) {
        throw ValidationError("query variable '" + query + "' is already fixed by the evidence");
    }
    std::vector<std::pair<std::size_t, bool>> fixed;
    fixed.reserve(evidence.size());
    for (const auto& [name, value] : evidence) {
        fixed.emplace_back(index_of(name), value);
    }

    const std::uint64_t total = std::uint64_t{1} << variables_.size();
    double evidence_mass = 0.0;
    double query_mass = 0.0;
    std::vector<bool> assignment(variables_.size());
    for (std::uint64_t code = 0; code < total; ++code) {
        for (std::size_t i = 0; i < variables_.size(); ++i) {
            assignment[i] = (code >> i) & 1;
        }
        bool consistent = true;
        for (const auto& [index, value] : fixed) {
            if (assignment[index] != value) {
                consistent = false;
                break;
            }
        }
        if (!consistent) {
            continue;
        }
        const double mass = joint_probability(assignment);
        evidence_mass += mass;
        if (assignment[query_index]) {
            query_mass += mass;
        }
    }
    if (evidence_mass == 0.0) {
        throw ValidationError("undefined conditional: evidence has probability zero");
    }
    return query_mass / evidence_mass;
}

} // namespace bdt
