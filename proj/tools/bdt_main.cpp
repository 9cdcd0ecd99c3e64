// bdt: decision analysis from the command line.
//
//   bdt analyze <problem.json>    full pipeline on a problem file
//   bdt fair                      fair probability of a certainty bet
//   bdt curve                     CSV series for plots
//   bdt scenario <id> | --all     built-in worked examples
//
// Exit codes: 0 success, 2 parse/schema error, 3 utility-domain error,
// 4 no root, 5 scenario failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bdt/distribution.hpp"
#include "bdt/errors.hpp"
#include "bdt/fairness.hpp"
#include "bdt/problem_file.hpp"
#include "bdt/report.hpp"
#include "bdt/scenarios.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSchema = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNoRoot = 4;
constexpr int kExitScenario = 5;

struct ModelFlags {
    bool linear = false;
    std::optional<double> income_reference;
    std::optional<double> debt_reference;
    std::optional<double> weber;
    double gamma = 1.0;

    void attach(CLI::App& cmd) {
        cmd.add_flag("--linear", linear, "Linear (identity) utility");
        cmd.add_option("--income", income_reference,
                       "Logarithmic income utility at this initial wealth");
        cmd.add_option("--debt", debt_reference, "Logarithmic debt utility at this initial debt");
        cmd.add_option("--q", weber, "Weber constant for the logarithmic models");
        cmd.add_option("--gamma", gamma, "Significance threshold")->capture_default_str();
    }

    bdt::UtilityModel build() const {
        const int picked = (linear ? 1 : 0) + (income_reference ? 1 : 0) +
                           (debt_reference ? 1 : 0);
        if (picked != 1) {
            throw bdt::SchemaError("pick exactly one of --linear, --income, --debt");
        }
        if (linear) {
            return bdt::UtilityModel::linear();
        }
        if (!weber) {
            throw bdt::SchemaError("the logarithmic models need --q");
        }
        if (income_reference) {
            return bdt::UtilityModel::bernoulli_income(*income_reference, *weber, gamma);
        }
        return bdt::UtilityModel::bernoulli_debt(*debt_reference, *weber, gamma);
    }
};

std::string fmt(double v, int precision) {
    std::ostringstream out;
    out << std::setprecision(precision) << v;
    return out.str();
}

// Relative output paths land in $BDT_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("BDT_OUTPUT_DIR")) {
            return std::filesystem::path(dir) / p;
        }
    }
    return p;
}

void write_series(const std::string& path, const std::string& title,
                  const std::string& column_header,
                  const std::vector<std::pair<double, std::optional<double>>>& rows,
                  int precision) {
    const std::filesystem::path out_path = resolve_output(path);
    std::ofstream out(out_path);
    if (!out) {
        throw bdt::Error("cannot write '" + out_path.string() + "'");
    }
    out << "# " << title << "\n";
    out << column_header << "\n";
    for (const auto& [x, y] : rows) {
        out << fmt(x, precision) << ",";
        if (y) {
            out << fmt(*y, precision);
        }
        out << "\n";
    }
    if (!out) {
        throw bdt::Error("failed while writing '" + out_path.string() + "'");
    }
}

int run_analyze(const std::string& path, const std::string& format,
                const bdt::AnalysisOverrides& overrides) {
    const bdt::ProblemFile input = bdt::load_problem_file(path);
    const bdt::ReportDocument report = bdt::analyze(input, overrides);
    if (format == "machine") {
        std::cout << bdt::to_machine_format(report);
    } else {
        std::cout << bdt::to_human_format(report);
    }
    return kExitOk;
}

int run_fair(double certain, double uncertain, const ModelFlags& model_flags, double k,
             const std::string& format, int precision) {
    const bdt::UtilityModel model = model_flags.build();
    const bdt::BoundsConfig cfg = bdt::BoundsConfig::k_sigma(k);
    const bdt::FairnessResult result = bdt::fair_probability(certain, uncertain, model, cfg);
    if (format == "machine") {
        nlohmann::json roots = nlohmann::json::array();
        for (const auto& root : result.roots) {
            roots.push_back({{"p_fair", root.p},
                             {"branch", bdt::to_string(root.branch)},
                             {"interval", {root.interval_low, root.interval_high}}});
        }
        std::cout << nlohmann::json({{"certain_outcome", certain},
                                     {"uncertain_outcome", uncertain},
                                     {"k", k},
                                     {"utility", model.kind_name()},
                                     {"roots", roots}})
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    for (const auto& root : result.roots) {
        std::cout << "fair probability: " << fmt(root.p, precision) << "\n";
        std::cout << "clipped bound:    " << bdt::to_string(root.branch) << "\n";
        std::cout << "fair interval:    [" << fmt(root.interval_low, precision) << ", "
                  << fmt(root.interval_high, precision) << "]\n";
    }
    return kExitOk;
}

int run_scenarios(const std::string& id, bool all, const std::string& format) {
    std::vector<bdt::ScenarioReport> reports;
    if (all) {
        reports = bdt::run_all_scenarios();
    } else if (id == "list") {
        for (const auto& info : bdt::list_scenarios()) {
            std::cout << info.id << "  " << info.description << "\n";
        }
        return kExitOk;
    } else {
        reports.push_back(bdt::run_scenario(id));
    }

    bool all_passed = true;
    if (format == "machine") {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& report : reports) {
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& check : report.checks) {
                checks.push_back({{"label", check.label},
                                  {"computed", check.computed},
                                  {"expected", check.expected},
                                  {"tolerance", check.tolerance},
                                  {"source", check.source},
                                  {"passed", check.passed()}});
            }
            doc.push_back({{"id", report.id},
                           {"description", report.description},
                           {"passed", report.passed()},
                           {"checks", checks}});
            all_passed = all_passed && report.passed();
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& report : reports) {
            all_passed = all_passed && report.passed();
            std::cout << "scenario " << report.id << ": "
                      << (report.passed() ? "PASS" : "FAIL") << "\n";
            for (const auto& check : report.checks) {
                if (!all || !check.passed()) {
                    std::cout << "  [" << (check.passed() ? "pass" : "FAIL") << "] "
                              << check.label << ": computed " << fmt(check.computed, 6)
                              << ", expected " << fmt(check.expected, 6) << " within "
                              << fmt(check.tolerance, 6) << "  (" << check.source << ")\n";
                }
            }
        }
        if (all) {
            std::cout << (all_passed ? "all scenarios passed" : "some scenarios FAILED") << "\n";
        }
    }
    return all_passed ? kExitOk : kExitScenario;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bayesian decision analysis: outcome distributions, logarithmic utilities, "
                 "sum-of-bounds comparisons"};
    app.require_subcommand(1);
    int precision = 6;
    app.add_option("--precision", precision, "Significant digits in text output")->capture_default_str();

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Run the pipeline on a problem file");
    std::string problem_path;
    std::string analyze_format = "human";
    bdt::AnalysisOverrides overrides;
    std::string mode_override;
    analyze_cmd->add_option("path", problem_path, "Problem file (JSON)")->required();
    analyze_cmd->add_option("--format", analyze_format, "human or machine")->capture_default_str()
        ->check(CLI::IsMember({"human", "machine"}));
    double k_override = 0.0;
    auto* k_opt = analyze_cmd->add_option("--k", k_override, "Override the sigma multiplier");
    double q_override = 0.0;
    auto* q_opt = analyze_cmd->add_option("--q", q_override, "Override the Weber constant");
    analyze_cmd->add_option("--mode", mode_override,
                            "Override the score mode (sum_of_bounds, lower_only, upper_only, "
                            "expectation_only)");

    // fair
    auto* fair_cmd = app.add_subcommand("fair", "Fair probability of a certainty bet");
    double fair_oc = 0.0;
    double fair_ou = 0.0;
    double fair_k = 1.0;
    std::string fair_format = "human";
    ModelFlags fair_model;
    fair_cmd->add_option("--oc", fair_oc, "Certain outcome")->required();
    fair_cmd->add_option("--ou", fair_ou, "Uncertain outcome")->required();
    fair_cmd->add_option("--k", fair_k, "Sigma multiplier")->capture_default_str();
    fair_cmd->add_option("--format", fair_format, "human or machine")->capture_default_str()
        ->check(CLI::IsMember({"human", "machine"}));
    fair_model.attach(*fair_cmd);

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "Emit a CSV data series");
    std::string series = "fairness";
    std::string output_path;
    double curve_ou = 0.0;
    double curve_k = 1.0;
    unsigned curve_points = 100;
    double range_from = 0.0;
    double range_to = 0.0;
    unsigned binom_n = 0;
    double binom_p = 0.5;
    unsigned urn_size = 0;
    double fee = 0.0;
    ModelFlags curve_model;
    curve_cmd->add_option("--series", series,
                          "fairness, utility, outcome-binomial, or outcome-mixture")
        ->capture_default_str()
        ->check(CLI::IsMember({"fairness", "utility", "outcome-binomial", "outcome-mixture"}));
    curve_cmd->add_option("--output,-o", output_path, "Output CSV path")->required();
    curve_cmd->add_option("--ou", curve_ou, "Uncertain outcome (fairness series)");
    curve_cmd->add_option("--k", curve_k, "Sigma multiplier (fairness series)")->capture_default_str();
    curve_cmd->add_option("--points", curve_points, "Grid size")->capture_default_str();
    curve_cmd->add_option("--from", range_from, "Increment range start (utility series)");
    curve_cmd->add_option("--to", range_to, "Increment range end (utility series)");
    curve_cmd->add_option("--n", binom_n, "Number of draws (outcome series)");
    curve_cmd->add_option("--p", binom_p, "Success probability (outcome-binomial)");
    curve_cmd->add_option("--urn", urn_size, "Urn size (outcome-mixture)");
    curve_cmd->add_option("--fee", fee, "Entrance fee (outcome series)");
    curve_model.attach(*curve_cmd);

    // scenario
    auto* scenario_cmd = app.add_subcommand("scenario", "Run built-in worked examples");
    std::string scenario_id;
    bool scenario_all = false;
    std::string scenario_format = "human";
    scenario_cmd->add_option("id", scenario_id, "Scenario id, or 'list'");
    scenario_cmd->add_flag("--all", scenario_all, "Run the whole catalog");
    scenario_cmd->add_option("--format", scenario_format, "human or machine")->capture_default_str()
        ->check(CLI::IsMember({"human", "machine"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitSchema;
    }

    try {
        if (*analyze_cmd) {
            if (*k_opt) {
                overrides.k = k_override;
            }
            if (*q_opt) {
                overrides.weber = q_override;
            }
            if (!mode_override.empty()) {
                overrides.mode = bdt::parse_score_mode(mode_override);
            }
            return run_analyze(problem_path, analyze_format, overrides);
        }
        if (*fair_cmd) {
            return run_fair(fair_oc, fair_ou, fair_model, fair_k, fair_format, precision);
        }
        if (*curve_cmd) {
            std::vector<std::pair<double, std::optional<double>>> rows;
            std::string title;
            std::string header;
            if (series == "fairness") {
                if (curve_ou == 0.0) {
                    throw bdt::SchemaError("the fairness series needs --ou");
                }
                const bdt::UtilityModel model = curve_model.build();
                const auto curve = bdt::fairness_curve(curve_ou, model,
                                                       bdt::BoundsConfig::k_sigma(curve_k),
                                                       bdt::uniform_ratio_grid(curve_points));
                for (const auto& point : curve) {
                    rows.emplace_back(point.ratio, point.p_fair);
                }
                title = "fair probability vs outcome ratio (uncertain outcome " +
                        fmt(curve_ou, precision) + ", " + model.kind_name() + " utility, k " +
                        fmt(curve_k, precision) + ")";
                header = "ratio,p_fair";
            } else if (series == "utility") {
                const bdt::UtilityModel model = curve_model.build();
                if (!(range_to > range_from)) {
                    throw bdt::SchemaError("the utility series needs --from < --to");
                }
                const unsigned segments = curve_points > 1 ? curve_points - 1 : 1;
                for (unsigned i = 0; i < curve_points; ++i) {
                    const double delta =
                        range_from + (range_to - range_from) * static_cast<double>(i) / segments;
                    rows.emplace_back(delta, model.value(delta));
                }
                title = "utility of monetary increments (" + model.kind_name() + ")";
                header = "delta,utiles";
            } else {
                if (binom_n == 0) {
                    throw bdt::SchemaError("the outcome series needs --n");
                }
                if (series == "outcome-mixture" && urn_size == 0) {
                    throw bdt::SchemaError("the mixture series needs --urn");
                }
                const bdt::DiscreteDistribution dist =
                    series == "outcome-binomial"
                        ? bdt::binomial_outcome_dist(binom_n, binom_p, fee)
                        : bdt::mixture_binomial_outcome_dist(binom_n, urn_size, fee);
                for (const auto& atom : dist.atoms()) {
                    rows.emplace_back(atom.value, atom.probability);
                }
                title = "net-return distribution (" + std::to_string(binom_n) + " draws, fee " +
                        fmt(fee, precision) + ")";
                header = "value,probability";
            }
            write_series(output_path, title, header, rows, precision);
            return kExitOk;
        }
        if (*scenario_cmd) {
            if (scenario_all == !scenario_id.empty()) {
                throw bdt::SchemaError("pass a scenario id or --all (and not both)");
            }
            return run_scenarios(scenario_id, scenario_all, scenario_format);
        }
    } catch (const bdt::SchemaError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitSchema;
    } catch (const bdt::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitSchema;
    } catch (const bdt::DomainError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitDomain;
    } catch (const bdt::SolveError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitNoRoot;
    } catch (const bdt::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitSchema;
    }
    return kExitOk;
}
