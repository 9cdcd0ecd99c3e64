#include "bdt/problem_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bdt {

namespace {

using nlohmann::json;

constexpr double kRowTol = 1e-6; // accepts hand-typed priors

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw SchemaError(where + ": " + what);
}

const json& require(const json& obj, const std::string& where, const std::string& key) {
    if (!obj.contains(key)) {
        fail(where, "missing required field '" + key + "'");
    }
    return obj.at(key);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> known) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            fail(where, "unknown field '" + key + "'");
        }
    }
}

double number_at(const json& value, const std::string& where) {
    if (!value.is_number()) {
        fail(where, "expected a number");
    }
    return value.get<double>();
}

std::vector<double> number_row(const json& value, const std::string& where) {
    if (!value.is_array() || value.empty()) {
        fail(where, "expected a nonempty array of numbers");
    }
    std::vector<double> row;
    row.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        row.push_back(number_at(value.at(i), where + "[" + std::to_string(i) + "]"));
    }
    return row;
}

// Probability rows are validated to 1e-6 and then renormalized exactly so
// the core checks downstream see clean inputs.
std::vector<double> probability_row(const json& value, const std::string& where) {
    std::vector<double> row = number_row(value, where);
    double total = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (!(row[i] >= 0.0) || row[i] > 1.0) {
            fail(where + "[" + std::to_string(i) + "]", "probability outside [0, 1]");
        }
        total += row[i];
    }
    if (std::abs(total - 1.0) > kRowTol) {
        std::ostringstream msg;
        msg << "probabilities sum to " << total << ", expected 1 within " << kRowTol;
        fail(where, msg.str());
    }
    // Rows already normalized to rounding noise are left untouched, so
    // reparsing an emitted document reproduces it byte for byte.
    if (std::abs(total - 1.0) > 1e-12) {
        for (double& p : row) {
            p /= total;
        }
    }
    return row;
}

Decision parse_decision(const json& obj, const std::string& where) {
    if (!obj.is_object()) {
        fail(where, "expected an object");
    }
    reject_unknown_keys(obj, where, {"label", "prior", "outcome_table", "outcome_values"});

    const json& label = require(obj, where, "label");
    if (!label.is_string()) {
        fail(where + ".label", "expected a string");
    }
    std::vector<double> prior = probability_row(require(obj, where, "prior"), where + ".prior");
    std::vector<double> values =
        number_row(require(obj, where, "outcome_values"), where + ".outcome_values");

    std::vector<std::vector<double>> rows;
    if (obj.contains("outcome_table")) {
        const json& table = obj.at("outcome_table");
        if (!table.is_array() || table.empty()) {
            fail(where + ".outcome_table", "expected a nonempty array of rows");
        }
        for (std::size_t r = 0; r < table.size(); ++r) {
            rows.push_back(probability_row(table.at(r),
                                           where + ".outcome_table[" + std::to_string(r) + "]"));
        }
    } else {
        // Identity: each event maps straight to the outcome of the same
        // index, so the prior is a distribution over outcomes directly.
        rows.assign(prior.size(), std::vector<double>(prior.size(), 0.0));
        for (std::size_t i = 0; i < prior.size(); ++i) {
            rows[i][i] = 1.0;
        }
    }
    if (rows.size() != prior.size()) {
        fail(where, "outcome_table has " + std::to_string(rows.size()) + " rows but prior has " +
                        std::to_string(prior.size()) + " entries");
    }
    if (rows.front().size() != values.size()) {
        fail(where, "outcome_values has " + std::to_string(values.size()) +
                        " entries but outcome_table rows have " +
                        std::to_string(rows.front().size()));
    }
    try {
        return Decision{label.get<std::string>(), std::move(prior), ConditionalTable(rows),
                        std::move(values)};
    } catch (const ValidationError& err) {
        fail(where, err.what());
    }
}

UtilityModel parse_utility(const json& obj) {
    const std::string where = "utility";
    if (!obj.is_object()) {
        fail(where, "expected an object");
    }
    reject_unknown_keys(obj, where, {"kind", "q", "calibration", "reference", "gamma"});
    const json& kind = require(obj, where, "kind");
    if (!kind.is_string()) {
        fail(where + ".kind", "expected a string");
    }
    const std::string name = kind.get<std::string>();
    if (name == "linear") {
        if (obj.contains("q") || obj.contains("calibration") || obj.contains("reference")) {
            fail(where, "the linear model takes no q, calibration, or reference");
        }
        return UtilityModel::linear();
    }
    UtilityKind utility_kind;
    if (name == "bernoulli_income") {
        utility_kind = UtilityKind::bernoulli_income;
    } else if (name == "bernoulli_debt") {
        utility_kind = UtilityKind::bernoulli_debt;
    } else {
        fail(where + ".kind", "unknown utility kind '" + name + "'");
    }

    const double reference = number_at(require(obj, where, "reference"), where + ".reference");
    const double gamma =
        obj.contains("gamma") ? number_at(obj.at("gamma"), where + ".gamma") : 1.0;

    double weber = 0.0;
    if (obj.contains("q") == obj.contains("calibration")) {
        fail(where, "exactly one of 'q' or 'calibration' is required");
    }
    if (obj.contains("q")) {
        weber = number_at(obj.at("q"), where + ".q");
    } else {
        const json& calib = obj.at("calibration");
        if (!calib.is_object()) {
            fail(where + ".calibration", "expected an object");
        }
        reject_unknown_keys(calib, where + ".calibration", {"reference", "jnd"});
        const double calib_ref =
            number_at(require(calib, where + ".calibration", "reference"),
                      where + ".calibration.reference");
        const double jnd = number_at(require(calib, where + ".calibration", "jnd"),
                                     where + ".calibration.jnd");
        try {
            weber = calibrate_weber(calib_ref, jnd, utility_kind);
        } catch (const ValidationError& err) {
            fail(where + ".calibration", err.what());
        }
    }
    try {
        return utility_kind == UtilityKind::bernoulli_income
                   ? UtilityModel::bernoulli_income(reference, weber, gamma)
                   : UtilityModel::bernoulli_debt(reference, weber, gamma);
    } catch (const ValidationError& err) {
        fail(where, err.what());
    }
}

BoundsConfig parse_criterion(const json& obj) {
    const std::string where = "criterion";
    if (!obj.is_object()) {
        fail(where, "expected an object");
    }
    reject_unknown_keys(obj, where, {"k", "caution", "opportunity", "mode", "clip_to_support"});
    BoundsConfig cfg;
    if (obj.contains("k")) {
        cfg.k = number_at(obj.at("k"), where + ".k");
        if (cfg.k < 0.0) {
            fail(where + ".k", "sigma multiplier must be nonnegative");
        }
    }
    if (obj.contains("caution")) {
        cfg.caution = number_at(obj.at("caution"), where + ".caution");
        if (*cfg.caution < 0.0) {
            fail(where + ".caution", "premium must be nonnegative");
        }
    }
    if (obj.contains("opportunity")) {
        cfg.opportunity = number_at(obj.at("opportunity"), where + ".opportunity");
        if (*cfg.opportunity < 0.0) {
            fail(where + ".opportunity", "premium must be nonnegative");
        }
    }
    if (obj.contains("mode")) {
        const json& mode = obj.at("mode");
        if (!mode.is_string()) {
            fail(where + ".mode", "expected a string");
        }
        try {
            cfg.mode = parse_score_mode(mode.get<std::string>());
        } catch (const ValidationError& err) {
            fail(where + ".mode", err.what());
        }
    }
    if (obj.contains("clip_to_support")) {
        const json& clip = obj.at("clip_to_support");
        if (!clip.is_boolean()) {
            fail(where + ".clip_to_support", "expected a boolean");
        }
        cfg.clip_to_support = clip.get<bool>();
    }
    return cfg;
}

} // namespace

ProblemFile parse_problem_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw SchemaError(std::string("parse error: ") + err.what());
    }
    if (!doc.is_object()) {
        fail("document", "expected a top-level object");
    }
    reject_unknown_keys(doc, "document", {"decisions", "utility", "criterion"});

    const json& decisions = require(doc, "document", "decisions");
    if (!decisions.is_array() || decisions.empty()) {
        fail("decisions", "expected a nonempty array");
    }
    ProblemFile file;
    for (std::size_t i = 0; i < decisions.size(); ++i) {
        file.problem.decisions.push_back(
            parse_decision(decisions.at(i), "decisions[" + std::to_string(i) + "]"));
    }
    file.model = parse_utility(require(doc, "document", "utility"));
    if (doc.contains("criterion")) {
        file.criterion = parse_criterion(doc.at("criterion"));
    }
    return file;
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SchemaError("cannot open problem file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_text(buffer.str());
}

ScoreMode parse_score_mode(const std::string& name) {
    if (name == "sum_of_bounds") {
        return ScoreMode::sum_of_bounds;
    }
    if (name == "lower_only") {
        return ScoreMode::lower_only;
    }
    if (name == "upper_only") {
        return ScoreMode::upper_only;
    }
    if (name == "expectation_only") {
        return ScoreMode::expectation_only;
    }
    throw ValidationError("unknown score mode '" + name + "'");
}

std::string to_string(ScoreMode mode) {
    switch (mode) {
    case ScoreMode::sum_of_bounds:
        return "sum_of_bounds";
    case ScoreMode::lower_only:
        return "lower_only";
    case ScoreMode::upper_only:
        return "upper_only";
    case ScoreMode::expectation_only:
        return "expectation_only";
    }
    return "unknown";
}

} // namespace bdt
