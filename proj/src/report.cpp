#include "bdt/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace bdt {

namespace {

using nlohmann::json;

json distribution_to_json(const DiscreteDistribution& dist) {
    json atoms = json::array();
    for (const auto& atom : dist.atoms()) {
        atoms.push_back(json::array({atom.value, atom.probability}));
    }
    return atoms;
}

DiscreteDistribution distribution_from_json(const json& atoms) {
    std::vector<DiscreteDistribution::Atom> parsed;
    for (const auto& pair : atoms) {
        parsed.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
    }
    return DiscreteDistribution(std::move(parsed));
}

json problem_to_json(const ProblemFile& input) {
    json decisions = json::array();
    for (const auto& decision : input.problem.decisions) {
        decisions.push_back({{"label", decision.label},
                             {"prior", decision.event_prior},
                             {"outcome_table", decision.outcome_table.rows()},
                             {"outcome_values", decision.outcome_values}});
    }
    json utility = {{"kind", input.model.kind_name()}};
    if (input.model.kind != UtilityKind::linear) {
        utility["q"] = input.model.weber;
        utility["reference"] = input.model.reference;
        utility["gamma"] = input.model.gamma;
    }
    json criterion = {{"k", input.criterion.k},
                      {"mode", to_string(input.criterion.mode)},
                      {"clip_to_support", input.criterion.clip_to_support}};
    if (input.criterion.caution) {
        criterion["caution"] = *input.criterion.caution;
    }
    if (input.criterion.opportunity) {
        criterion["opportunity"] = *input.criterion.opportunity;
    }
    return {{"decisions", decisions}, {"utility", utility}, {"criterion", criterion}};
}

ProblemFile problem_from_json(const json& doc) {
    // The echoed input obeys the problem-file schema, so the parser is the
    // inverse of problem_to_json.
    return parse_problem_text(doc.dump());
}

json bounds_to_json(const BoundsResult& b) {
    return {{"mean", b.mean},
            {"stddev", b.stddev},
            {"lower_raw", b.lower_raw},
            {"upper_raw", b.upper_raw},
            {"lower", b.lower},
            {"upper", b.upper},
            {"support_min", b.support_min},
            {"support_max", b.support_max},
            {"clipped_low", b.clipped_low},
            {"clipped_high", b.clipped_high}};
}

BoundsResult bounds_from_json(const json& doc) {
    BoundsResult b;
    b.mean = doc.at("mean").get<double>();
    b.stddev = doc.at("stddev").get<double>();
    b.lower_raw = doc.at("lower_raw").get<double>();
    b.upper_raw = doc.at("upper_raw").get<double>();
    b.lower = doc.at("lower").get<double>();
    b.upper = doc.at("upper").get<double>();
    b.support_min = doc.at("support_min").get<double>();
    b.support_max = doc.at("support_max").get<double>();
    b.clipped_low = doc.at("clipped_low").get<bool>();
    b.clipped_high = doc.at("clipped_high").get<bool>();
    return b;
}

} // namespace

bool DecisionReport::operator==(const DecisionReport& other) const {
    const auto key = [](const DecisionReport& r) {
        return std::make_tuple(r.label, r.bounds.mean, r.bounds.stddev, r.bounds.lower_raw,
                               r.bounds.upper_raw, r.bounds.lower, r.bounds.upper,
                               r.bounds.support_min, r.bounds.support_max, r.bounds.clipped_low,
                               r.bounds.clipped_high, r.score);
    };
    return key(*this) == key(other) && outcome_dist == other.outcome_dist &&
           utility_dist == other.utility_dist;
}

bool ReportDocument::operator==(const ReportDocument& other) const {
    return to_machine_format(*this) == to_machine_format(other);
}

ReportDocument analyze(const ProblemFile& input, const AnalysisOverrides& overrides) {
    ReportDocument report;
    report.input = input;
    if (overrides.k) {
        report.input.criterion.k = *overrides.k;
    }
    if (overrides.mode) {
        report.input.criterion.mode = *overrides.mode;
    }
    if (overrides.weber) {
        if (report.input.model.kind == UtilityKind::linear) {
            throw SchemaError("the linear model has no Weber constant to override");
        }
        report.input.model.weber = *overrides.weber;
    }

    const UtilityModel& model = report.input.model;
    const BoundsConfig& cfg = report.input.criterion;
    std::vector<double> scores;
    for (const auto& decision : report.input.problem.decisions) {
        DecisionReport entry;
        entry.label = decision.label;
        entry.outcome_dist = outcome_distribution(decision);
        try {
            entry.utility_dist = pushforward(entry.outcome_dist, model);
        } catch (const DomainError& err) {
            throw DomainError("decision '" + decision.label + "': " + err.what());
        }
        entry.bounds = bounds(entry.utility_dist, cfg);
        entry.score = criterion_score(entry.bounds, cfg);
        scores.push_back(entry.score);
        report.decisions.push_back(std::move(entry));
    }
    if (scores.size() < 2) {
        report.verdict.scores = scores;
        report.warning = "single decision: nothing to compare, no verdict";
    } else {
        report.verdict = compare_scores(scores, cfg.tie_tolerance);
    }
    return report;
}

std::string to_machine_format(const ReportDocument& report) {
    json decisions = json::array();
    for (const auto& entry : report.decisions) {
        decisions.push_back({{"label", entry.label},
                             {"outcome_distribution", distribution_to_json(entry.outcome_dist)},
                             {"utility_distribution", distribution_to_json(entry.utility_dist)},
                             {"bounds", bounds_to_json(entry.bounds)},
                             {"score", entry.score}});
    }
    json verdict = {{"preferred", report.verdict.best},
                    {"indifferent", report.verdict.indifferent()},
                    {"scores", report.verdict.scores},
                    {"margin", report.verdict.margin()}};
    json doc = {{"input", problem_to_json(report.input)},
                {"decisions", decisions},
                {"verdict", verdict}};
    if (report.warning) {
        doc["warning"] = *report.warning;
    }
    return doc.dump(2) + "\n";
}

ReportDocument from_machine_format(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw SchemaError(std::string("report parse error: ") + err.what());
    }
    ReportDocument report;
    try {
        report.input = problem_from_json(doc.at("input"));
        for (const auto& entry : doc.at("decisions")) {
            DecisionReport decision;
            decision.label = entry.at("label").get<std::string>();
            decision.outcome_dist = distribution_from_json(entry.at("outcome_distribution"));
            decision.utility_dist = distribution_from_json(entry.at("utility_distribution"));
            decision.bounds = bounds_from_json(entry.at("bounds"));
            decision.score = entry.at("score").get<double>();
            report.decisions.push_back(std::move(decision));
        }
        const json& verdict = doc.at("verdict");
        report.verdict.best = verdict.at("preferred").get<std::vector<std::size_t>>();
        report.verdict.scores = verdict.at("scores").get<std::vector<double>>();
        if (doc.contains("warning")) {
            report.warning = doc.at("warning").get<std::string>();
        }
    } catch (const json::exception& err) {
        throw SchemaError(std::string("malformed report document: ") + err.what());
    }
    return report;
}

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out << std::setprecision(6) << v;
    return out.str();
}

} // namespace

std::string to_human_format(const ReportDocument& report) {
    std::ostringstream out;
    const UtilityModel& model = report.input.model;
    out << "Decisions: " << report.decisions.size() << "\n";
    out << "Utility:   " << model.kind_name();
    if (model.kind != UtilityKind::linear) {
        out << " (reference " << fmt(model.reference) << ", q " << fmt(model.weber) << ", gamma "
            << fmt(model.gamma) << ")";
    }
    out << "\n";
    const BoundsConfig& cfg = report.input.criterion;
    out << "Criterion: " << to_string(cfg.mode) << ", k " << fmt(cfg.k) << ", caution "
        << fmt(cfg.caution_multiplier()) << ", opportunity " << fmt(cfg.opportunity_multiplier())
        << ", clip " << (cfg.clip_to_support ? "on" : "off") << "\n\n";

    for (const auto& entry : report.decisions) {
        out << entry.label << "\n";
        out << "  outcomes: " << entry.outcome_dist.size() << " values on ["
            << fmt(entry.outcome_dist.min_value()) << ", " << fmt(entry.outcome_dist.max_value())
            << "]\n";
        out << "  utility:  mean " << fmt(entry.bounds.mean) << ", std "
            << fmt(entry.bounds.stddev) << ", support [" << fmt(entry.bounds.support_min) << ", "
            << fmt(entry.bounds.support_max) << "]\n";
        out << "  bounds:   raw [" << fmt(entry.bounds.lower_raw) << ", "
            << fmt(entry.bounds.upper_raw) << "]";
        if (entry.bounds.clipped_low || entry.bounds.clipped_high) {
            out << ", clipped to [" << fmt(entry.bounds.lower) << ", " << fmt(entry.bounds.upper)
                << "]";
        }
        out << "\n";
        out << "  score:    " << fmt(entry.score) << "\n";
    }
    out << "\n";
    if (report.warning) {
        out << "Warning: " << *report.warning << "\n";
    }
    if (!report.verdict.best.empty()) {
        if (report.verdict.indifferent()) {
            out << "Verdict: indifferent between";
            for (std::size_t index : report.verdict.best) {
                out << " " << report.decisions[index].label;
            }
            out << "\n";
        } else {
            out << "Verdict: prefer " << report.decisions[report.verdict.preferred()].label
                << " (margin " << fmt(report.verdict.margin()) << ")\n";
        }
    }
    return out.str();
}

} // namespace bdt
