// Property suites over randomized inputs. Generators are hand-rolled on a
// fixed-seed mt19937 so every run checks the same cases.

#include <cmath>
#include <random>

#include <doctest.h>

#include "bdt/criterion.hpp"
#include "bdt/distribution.hpp"
#include "bdt/evidence.hpp"
#include "bdt/fairness.hpp"
#include "bdt/network.hpp"
#include "bdt/utility.hpp"

using namespace bdt;

namespace {

bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

DiscreteDistribution random_distribution(std::mt19937& rng, double lo, double hi,
                                         std::size_t max_atoms = 6) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_atoms);
    std::uniform_real_distribution<double> value_dist(lo, hi);
    std::uniform_real_distribution<double> mass_dist(0.05, 1.0);
    const std::size_t n = size_dist(rng);
    std::vector<DiscreteDistribution::Atom> atoms;
    for (std::size_t i = 0; i < n; ++i) {
        atoms.push_back({value_dist(rng), mass_dist(rng)});
    }
    return DiscreteDistribution::renormalized(std::move(atoms));
}

} // namespace

TEST_CASE("scale invariance of the logarithmic utility") {
    std::mt19937 rng(20240601);
    std::uniform_real_distribution<double> wealth_dist(10.0, 1e6);
    std::uniform_real_distribution<double> fraction_dist(-0.9, 4.0);
    std::uniform_real_distribution<double> scale_dist(0.01, 1000.0);
    std::uniform_real_distribution<double> weber_dist(0.1, 150.0);
    for (int i = 0; i < 1000; ++i) {
        const double wealth = wealth_dist(rng);
        const double delta = fraction_dist(rng) * wealth;
        const double c = scale_dist(rng);
        const double q = weber_dist(rng);
        const double u1 = UtilityModel::bernoulli_income(wealth, q).value(delta);
        const double u2 = UtilityModel::bernoulli_income(c * wealth, q).value(c * delta);
        REQUIRE_MESSAGE(close(u1, u2, 1e-12), "wealth=", wealth, " delta=", delta, " c=", c);
    }
}

TEST_CASE("chaining consistency of the logarithmic utility") {
    // Going straight from z to x must equal going via any intermediate y.
    std::mt19937 rng(20240602);
    std::uniform_real_distribution<double> positive(0.5, 1e5);
    std::uniform_real_distribution<double> weber_dist(0.1, 150.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = positive(rng);
        const double y = positive(rng);
        const double z = positive(rng);
        const double q = weber_dist(rng);
        const double direct = q * std::log(x / z);
        const double chained = q * std::log(x / y) + q * std::log(y / z);
        REQUIRE_MESSAGE(close(direct, chained, 1e-12), "x=", x, " y=", y, " z=", z);
    }
}

TEST_CASE("zero increments carry zero utility, losses negative utility") {
    std::mt19937 rng(20240603);
    std::uniform_real_distribution<double> wealth_dist(10.0, 1e6);
    std::uniform_real_distribution<double> weber_dist(0.1, 150.0);
    for (int i = 0; i < 200; ++i) {
        const UtilityModel model =
            UtilityModel::bernoulli_income(wealth_dist(rng), weber_dist(rng));
        CHECK(model.value(0.0) == 0.0);
        std::uniform_real_distribution<double> loss_dist(-model.reference + model.gamma + 1e-9,
                                                         -1e-6);
        CHECK(model.value(loss_dist(rng)) < 0.0);
    }
}

TEST_CASE("debt and income utilities are antisymmetric on the common domain") {
    std::mt19937 rng(20240604);
    std::uniform_real_distribution<double> reference_dist(100.0, 1e5);
    std::uniform_real_distribution<double> fraction_dist(-0.9, 3.0);
    std::uniform_real_distribution<double> weber_dist(0.1, 150.0);
    for (int i = 0; i < 500; ++i) {
        const double reference = reference_dist(rng);
        const double weber = weber_dist(rng);
        const double delta = fraction_dist(rng) * reference;
        const double income = UtilityModel::bernoulli_income(reference, weber).value(delta);
        const double debt = UtilityModel::bernoulli_debt(reference, weber).value(delta);
        REQUIRE(close(debt, -income, 1e-12));
    }
}

TEST_CASE("pushforward preserves mass and order") {
    std::mt19937 rng(20240605);
    for (int i = 0; i < 300; ++i) {
        const DiscreteDistribution outcomes = random_distribution(rng, -90.0, 400.0);
        const UtilityModel model = UtilityModel::bernoulli_income(100.0, 7.5);
        const DiscreteDistribution utilities = pushforward(outcomes, model);
        double total = 0.0;
        for (const auto& atom : utilities.atoms()) {
            total += atom.probability;
        }
        REQUIRE(std::abs(total - 1.0) <= 1e-12);
        // The map is strictly increasing, so values stay in outcome order
        // with probabilities attached to the right images.
        REQUIRE(utilities.size() == outcomes.size());
        for (std::size_t a = 0; a < outcomes.size(); ++a) {
            REQUIRE(utilities.atoms()[a].value == model.value(outcomes.atoms()[a].value));
            REQUIRE(utilities.atoms()[a].probability == outcomes.atoms()[a].probability);
        }
    }
}

TEST_CASE("utility moments are linear in the Weber constant") {
    std::mt19937 rng(20240606);
    std::uniform_real_distribution<double> factor_dist(0.1, 50.0);
    for (int i = 0; i < 300; ++i) {
        const DiscreteDistribution outcomes = random_distribution(rng, -90.0, 400.0);
        const double c = factor_dist(rng);
        const DiscreteDistribution base =
            pushforward(outcomes, UtilityModel::bernoulli_income(100.0, 2.0));
        const DiscreteDistribution scaled =
            pushforward(outcomes, UtilityModel::bernoulli_income(100.0, 2.0 * c));
        REQUIRE(close(scaled.mean(), c * base.mean(), 1e-12));
        REQUIRE(close(scaled.stddev(), c * base.stddev(), 1e-12));
    }
}

TEST_CASE("verdicts are invariant under Weber-constant scaling") {
    std::mt19937 rng(20240607);
    std::uniform_int_distribution<int> count_dist(2, 4);
    std::uniform_real_distribution<double> factor_dist(0.1, 40.0);
    for (int i = 0; i < 200; ++i) {
        const int decisions = count_dist(rng);
        std::vector<DiscreteDistribution> outcome_dists;
        for (int d = 0; d < decisions; ++d) {
            outcome_dists.push_back(random_distribution(rng, -80.0, 500.0));
        }
        const double c = factor_dist(rng);
        const BoundsConfig cfg = BoundsConfig::k_sigma(1.0);
        const Preference base =
            decide(outcome_dists, UtilityModel::bernoulli_income(100.0, 3.0), cfg);
        const Preference scaled =
            decide(outcome_dists, UtilityModel::bernoulli_income(100.0, 3.0 * c), cfg);
        REQUIRE(base.best == scaled.best);
        for (std::size_t d = 0; d < base.scores.size(); ++d) {
            REQUIRE(close(scaled.scores[d], c * base.scores[d], 1e-9));
        }
    }
}

TEST_CASE("expectation-only mode reproduces expected-utility verdicts") {
    std::mt19937 rng(20240608);
    for (int i = 0; i < 200; ++i) {
        std::vector<DiscreteDistribution> outcome_dists;
        for (int d = 0; d < 3; ++d) {
            outcome_dists.push_back(random_distribution(rng, -80.0, 500.0));
        }
        const UtilityModel model = UtilityModel::bernoulli_income(100.0, 5.0);
        BoundsConfig cfg = BoundsConfig::k_sigma(1.0);
        cfg.mode = ScoreMode::expectation_only;
        const Preference pref = decide(outcome_dists, model, cfg);

        std::vector<double> means;
        for (const auto& dist : outcome_dists) {
            means.push_back(pushforward(dist, model).mean());
        }
        const Preference by_mean = compare_scores(means, 1e-9);
        REQUIRE(pref.best == by_mean.best);
    }
}

TEST_CASE("bound dominance implies preference") {
    std::mt19937 rng(20240609);
    const BoundsConfig cfg = BoundsConfig::k_sigma(1.0);
    int dominant_pairs = 0;
    for (int i = 0; i < 500; ++i) {
        const DiscreteDistribution first = random_distribution(rng, -50.0, 50.0);
        const DiscreteDistribution second = random_distribution(rng, -50.0, 50.0);
        const BoundsResult b1 = bounds(first, cfg);
        const BoundsResult b2 = bounds(second, cfg);
        const bool dominates = b1.lower >= b2.lower + 1e-9 && b1.upper >= b2.upper + 1e-9;
        if (!dominates) {
            continue;
        }
        ++dominant_pairs;
        const Preference pref = decide({first, second}, UtilityModel::linear(), cfg);
        REQUIRE_FALSE(pref.indifferent());
        REQUIRE(pref.preferred() == 0);
    }
    CHECK(dominant_pairs > 50); // the generator must actually exercise the property
}

TEST_CASE("trade-offs resolve by comparing bound gains against bound losses") {
    std::mt19937 rng(20240610);
    const BoundsConfig cfg = BoundsConfig::k_sigma(1.0);
    int tradeoff_pairs = 0;
    for (int i = 0; i < 800; ++i) {
        const DiscreteDistribution first = random_distribution(rng, -50.0, 50.0);
        const DiscreteDistribution second = random_distribution(rng, -50.0, 50.0);
        const BoundsResult b1 = bounds(first, cfg);
        const BoundsResult b2 = bounds(second, cfg);
        // Upper-bound gain for the first against a lower-bound loss.
        const bool tradeoff = b1.upper > b2.upper + 1e-9 && b1.lower < b2.lower - 1e-9;
        if (!tradeoff) {
            continue;
        }
        ++tradeoff_pairs;
        const bool gain_exceeds_loss = (b1.upper - b2.upper) > (b2.lower - b1.lower);
        const Preference pref = decide({first, second}, UtilityModel::linear(), cfg);
        if (pref.indifferent()) {
            continue; // knife-edge within tie tolerance
        }
        REQUIRE(pref.preferred() == (gain_exceeds_loss ? 0u : 1u));
    }
    CHECK(tradeoff_pairs > 50);
}

TEST_CASE("enumeration agrees with a hand-rolled three-variable joint") {
    std::mt19937 rng(20240611);
    std::uniform_real_distribution<double> prob(0.02, 0.98);
    for (int i = 0; i < 200; ++i) {
        const double pa = prob(rng);
        const double pb = prob(rng);
        // c depends on both a and b.
        const std::vector<double> cpt{prob(rng), prob(rng), prob(rng), prob(rng)};

        BinaryNetwork net;
        net.add_variable("a", pa);
        net.add_variable("b", pb);
        net.add_variable("c", {"a", "b"}, cpt);

        // Independent tabulation of all eight assignments.
        double joint[2][2][2];
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                for (int c = 0; c < 2; ++c) {
                    const double p_c_true = cpt[(a ? 1 : 0) | (b ? 2 : 0)];
                    joint[a][b][c] = (a ? pa : 1 - pa) * (b ? pb : 1 - pb) *
                                     (c ? p_c_true : 1 - p_c_true);
                }
            }
        }
        const double evidence = joint[0][0][1] + joint[0][1][1] + joint[1][0][1] +
                                joint[1][1][1];
        const double target = joint[1][0][1] + joint[1][1][1];
        const double expected = target / evidence;
        const double actual = net.enumerate_posterior("a", {{"c", true}});
        REQUIRE_MESSAGE(std::abs(actual - expected) <= 1e-12, "pa=", pa, " pb=", pb);

        // Conditioning on two variables as well.
        const double expected_ab =
            joint[1][1][1] / (joint[0][1][1] + joint[1][1][1]);
        const double actual_ab =
            net.enumerate_posterior("a", {{"b", true}, {"c", true}});
        REQUIRE(std::abs(actual_ab - expected_ab) <= 1e-12);
    }
}

TEST_CASE("deciban round-trips across the unit interval") {
    for (int i = 1; i < 1000; ++i) {
        const double p = i / 1000.0;
        REQUIRE(std::abs(inverse_deciban(deciban(p)) - p) <= 1e-9);
    }
}

TEST_CASE("joint tables satisfy the product-rule symmetry") {
    // P(A) P(B|A) and P(B) P(A|B) rebuild the same joint entry.
    std::mt19937 rng(20240612);
    std::uniform_real_distribution<double> mass(0.05, 1.0);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::vector<double>> entries(3, std::vector<double>(4));
        double total = 0.0;
        for (auto& row : entries) {
            for (double& cell : row) {
                cell = mass(rng);
                total += cell;
            }
        }
        for (auto& row : entries) {
            for (double& cell : row) {
                cell /= total;
            }
        }
        const JointTable joint(entries, {0.0, 1.0, 2.0, 3.0});
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t k = 0; k < 4; ++k) {
                const double via_rows = joint.event_marginal(j) *
                                        (joint.at(j, k) / joint.event_marginal(j));
                const double via_cols = joint.outcome_marginal(k) *
                                        (joint.at(j, k) / joint.outcome_marginal(k));
                REQUIRE(std::abs(via_rows - via_cols) <= 1e-12);
                REQUIRE(std::abs(via_rows - joint.at(j, k)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("marginalization matches the direct product sum") {
    std::mt19937 rng(20240613);
    std::uniform_real_distribution<double> mass(0.05, 1.0);
    for (int i = 0; i < 200; ++i) {
        std::vector<double> prior(3);
        double prior_total = 0.0;
        for (double& p : prior) {
            p = mass(rng);
            prior_total += p;
        }
        for (double& p : prior) {
            p /= prior_total;
        }
        std::vector<std::vector<double>> rows(3, std::vector<double>(3));
        for (auto& row : rows) {
            double row_total = 0.0;
            for (double& cell : row) {
                cell = mass(rng);
                row_total += cell;
            }
            for (double& cell : row) {
                cell /= row_total;
            }
        }
        const ConditionalTable table(rows);
        const DiscreteDistribution marginal =
            marginalize_outcomes(joint_from_conditionals(prior, table, {0.0, 1.0, 2.0}));
        for (std::size_t k = 0; k < 3; ++k) {
            double direct = 0.0;
            for (std::size_t j = 0; j < 3; ++j) {
                direct += prior[j] * table.at(j, k);
            }
            REQUIRE(std::abs(marginal.probability_of(static_cast<double>(k)) - direct) <= 1e-12);
        }
    }
}

TEST_CASE("mixture variance obeys the law of total variance") {
    const unsigned n = 100;
    const unsigned urn = 1000;
    const DiscreteDistribution mixture = mixture_binomial_outcome_dist(n, urn, 50.0);
    double within = 0.0;  // E[n p (1-p)]
    double mean_np = 0.0; // E[n p]
    double second = 0.0;  // E[(n p)^2]
    for (unsigned reds = 1; reds < urn; ++reds) {
        const double p = static_cast<double>(reds) / urn;
        within += n * p * (1.0 - p) / (urn - 1.0);
        mean_np += n * p / (urn - 1.0);
        second += n * p * n * p / (urn - 1.0);
    }
    const double between = second - mean_np * mean_np;
    const double variance = mixture.stddev() * mixture.stddev();
    CHECK(std::abs(variance - (within + between)) <= 1e-9);
}

TEST_CASE("numeric fairness roots match the closed-form linear branches") {
    const UtilityModel linear = UtilityModel::linear();
    const BoundsConfig cfg = BoundsConfig::k_sigma(1.0);
    for (int i = 1; i <= 99; ++i) {
        const double ratio = i / 100.0;
        // Independent quadratic solution of the two clipping branches.
        double expected;
        if (ratio <= 0.5) {
            const double s = 2.0 * ratio;
            expected = ((1.0 + 2.0 * s) - std::sqrt(1.0 + 4.0 * s - 4.0 * s * s)) / 4.0;
        } else {
            const double s = 2.0 * ratio - 1.0;
            expected = ((1.0 + 2.0 * s) + std::sqrt(1.0 + 4.0 * s - 4.0 * s * s)) / 4.0;
        }
        const FairnessResult result =
            fair_probability(ratio * 5000.0, 5000.0, linear, cfg);
        REQUIRE(result.roots.size() == 1);
        REQUIRE_MESSAGE(std::abs(result.single().p - expected) <= 1e-9, "ratio=", ratio);
    }
}

TEST_CASE("fairness roots satisfy the fairness equation") {
    const BoundsConfig cfg = BoundsConfig::k_sigma(1.0);
    for (const UtilityModel& model :
         {UtilityModel::linear(), UtilityModel::bernoulli_income(1000.0, 100.0)}) {
        for (int i = 1; i <= 19; ++i) {
            const double ratio = i / 20.0;
            const double certain = ratio * 900.0;
            const FairnessResult result = fair_probability(certain, 900.0, model, cfg);
            const double certain_score = 2.0 * model.value(certain);
            for (const auto& root : result.roots) {
                const DiscreteDistribution utilities = pushforward(
                    DiscreteDistribution{{0.0, 1.0 - root.p}, {900.0, root.p}}, model);
                const double score = criterion_score(bounds(utilities, cfg), cfg);
                REQUIRE(std::abs(score - certain_score) <=
                        1e-9 * std::max(1.0, std::abs(certain_score)));
            }
        }
    }
}

TEST_CASE("power-law ratios agree with the logarithmic form") {
    std::mt19937 rng(20240614);
    std::uniform_real_distribution<double> stimulus(0.1, 1e4);
    std::uniform_real_distribution<double> exponent(0.1, 5.0);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    for (int i = 0; i < 500; ++i) {
        const double s0 = stimulus(rng);
        const double s1 = stimulus(rng);
        const double q = exponent(rng);
        const double c = scale(rng);
        const double via_power =
            std::log(power_law_sensation(s1, q, c) / power_law_sensation(s0, q, c));
        const double via_log = log_ratio_sensation(s1, s0, q);
        REQUIRE(close(via_power, via_log, 1e-12));
    }
}

TEST_CASE("clipping replaces exactly the overshooting bound") {
    std::mt19937 rng(20240615);
    std::uniform_real_distribution<double> k_dist(0.0, 3.0);
    for (int i = 0; i < 500; ++i) {
        const DiscreteDistribution dist = random_distribution(rng, -50.0, 50.0);
        const BoundsConfig cfg = BoundsConfig::k_sigma(k_dist(rng));
        const BoundsResult b = bounds(dist, cfg);
        if (b.clipped_low) {
            REQUIRE(b.lower == b.support_min);
        } else {
            REQUIRE(b.lower == b.lower_raw);
        }
        if (b.clipped_high) {
            REQUIRE(b.upper == b.support_max);
        } else {
            REQUIRE(b.upper == b.upper_raw);
        }
        if (!b.clipped_low && !b.clipped_high) {
            const double premium_form =
                2.0 * b.mean +
                (cfg.opportunity_multiplier() - cfg.caution_multiplier()) * b.stddev;
            REQUIRE(std::abs((b.lower + b.upper) - premium_form) <=
                    1e-12 * std::max(1.0, std::abs(premium_form)));
        }
    }
}

TEST_CASE("linear fairness is reflection symmetric") {
    const UtilityModel linear = UtilityModel::linear();
    const BoundsConfig cfg = BoundsConfig::k_sigma(1.0);
    for (int i = 1; i <= 20; ++i) {
        const double ratio = i / 20.0;
        const double gains =
            fair_probability(ratio * 5000.0, 5000.0, linear, cfg).single().p;
        const double losses =
            fair_probability(-ratio * 5000.0, -5000.0, linear, cfg).single().p;
        REQUIRE(std::abs(gains - losses) <= 1e-9);
    }
}
