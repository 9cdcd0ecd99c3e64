#include <cmath>

#include <doctest.h>

#include "bdt/distribution.hpp"
#include "bdt/utility.hpp"

using namespace bdt;

TEST_CASE("income utility of a just-noticeable gain is one utile") {
    const double q = 1.0 / std::log(1010.0 / 1000.0);
    const UtilityModel model = UtilityModel::bernoulli_income(1000.0, q);
    CHECK(std::abs(model.value(10.0) - 1.0) <= 1e-12);
    CHECK(model.value(0.0) == 0.0);
    CHECK(model.value(20.0) > model.value(10.0));
}

TEST_CASE("income utility of a deep loss") {
    const UtilityModel model = UtilityModel::bernoulli_income(1500.0, 100.0);
    // 100 log(1000/1500); the vignette text reports -41.5 but the formula
    // gives -40.55.
    CHECK(std::abs(model.value(-500.0) - (-40.55)) <= 0.05);
}

TEST_CASE("income domain is truncated at the significance threshold") {
    const UtilityModel model = UtilityModel::bernoulli_income(1000.0, 100.0, 1.0);
    CHECK_THROWS_AS(model.value(-999.0), DomainError);  // exactly -S + gamma
    CHECK_THROWS_AS(model.value(-1000.0), DomainError); // total ruin
    CHECK(model.value(-998.9) < 0.0);
}

TEST_CASE("debt utilities of repayments") {
    CHECK(std::abs(UtilityModel::bernoulli_debt(40000.0, 40.0).value(-500.0) - 0.5) <= 0.01);
    CHECK(std::abs(UtilityModel::bernoulli_debt(2000.0, 40.0).value(-500.0) - 11.5) <= 0.1);
    CHECK(std::abs(UtilityModel::bernoulli_debt(20000.0, 40.0).value(-500.0) - 1.0) <= 0.05);
    // Debt increases hurt.
    CHECK(UtilityModel::bernoulli_debt(20000.0, 40.0).value(1000.0) < 0.0);
}

TEST_CASE("weber calibration") {
    CHECK(std::abs(calibrate_weber(1000.0, 10.0, UtilityKind::bernoulli_income) - 100.50) <= 0.01);
    CHECK(std::abs(calibrate_weber(40000.0, 1000.0, UtilityKind::bernoulli_debt) - 39.5) <= 0.1);
    // A JND of S(e - 1) makes the log ratio exactly one.
    const double s = 123.0;
    CHECK(std::abs(calibrate_weber(s, s * (std::exp(1.0) - 1.0), UtilityKind::bernoulli_income) -
                   1.0) <= 1e-12);
    CHECK_THROWS_AS(calibrate_weber(-1.0, 10.0, UtilityKind::bernoulli_income), ValidationError);
    CHECK_THROWS_AS(calibrate_weber(1000.0, 0.0, UtilityKind::bernoulli_income), ValidationError);
    CHECK_THROWS_AS(calibrate_weber(100.0, 100.0, UtilityKind::bernoulli_debt), ValidationError);
    CHECK_THROWS_AS(calibrate_weber(100.0, 10.0, UtilityKind::linear), ValidationError);
}

TEST_CASE("linear utility is the identity") {
    const UtilityModel linear = UtilityModel::linear();
    CHECK(linear.value(5000.0) == 5000.0);
    CHECK(linear.value(0.0) == 0.0);
    CHECK(linear.value(-123.25) == -123.25);
}

TEST_CASE("log utility approaches linear as wealth grows") {
    const UtilityModel huge = UtilityModel::bernoulli_income(1e9, 1e9);
    const double u = huge.value(5000.0);
    CHECK(std::abs(u - 5000.0) / 5000.0 <= 1e-4);
}

TEST_CASE("model construction is validated") {
    CHECK_THROWS_AS(UtilityModel::bernoulli_income(0.0, 100.0), ValidationError);
    CHECK_THROWS_AS(UtilityModel::bernoulli_income(1000.0, 0.0), ValidationError);
    CHECK_THROWS_AS(UtilityModel::bernoulli_income(1000.0, 100.0, 0.0), ValidationError);
    CHECK_THROWS_AS(UtilityModel::bernoulli_debt(-5.0, 40.0), ValidationError);
}

TEST_CASE("pushforward of the known-urn distribution") {
    const DiscreteDistribution outcomes = binomial_outcome_dist(100, 0.5, 50.0);
    const UtilityModel model = UtilityModel::bernoulli_income(200.0, 1.0);
    const DiscreteDistribution utilities = pushforward(outcomes, model);
    REQUIRE(utilities.size() == outcomes.size());
    CHECK(std::abs(utilities.mean() - (-0.0003)) <= 5e-5);
    CHECK(std::abs(utilities.stddev() - 0.025) <= 5e-5);
}

TEST_CASE("pushforward of the unknown-urn distribution") {
    const DiscreteDistribution outcomes = mixture_binomial_outcome_dist(100, 1000, 50.0);
    const DiscreteDistribution utilities =
        pushforward(outcomes, UtilityModel::bernoulli_income(200.0, 1.0));
    CHECK(std::abs(utilities.mean() - (-0.0108)) <= 5e-4);
    CHECK(std::abs(utilities.stddev() - 0.1479) <= 5e-4);
}

TEST_CASE("pushforward of a zero point mass") {
    const DiscreteDistribution utilities = pushforward(
        DiscreteDistribution::point_mass(0.0), UtilityModel::bernoulli_income(200.0, 1.0));
    REQUIRE(utilities.size() == 1);
    CHECK(utilities.probability_of(0.0) == 1.0);
}

TEST_CASE("pushforward names the offending outcome") {
    const DiscreteDistribution outcomes{{-250.0, 0.5}, {10.0, 0.5}};
    const UtilityModel model = UtilityModel::bernoulli_income(200.0, 1.0);
    try {
        pushforward(outcomes, model);
        FAIL("expected a domain error");
    } catch (const DomainError& err) {
        CHECK(std::string(err.what()).find("-250") != std::string::npos);
    }
}

TEST_CASE("utility support endpoints") {
    const UtilityModel unit = UtilityModel::bernoulli_income(200.0, 1.0);
    const auto [a, b] = utility_support(unit, -50.0, 50.0);
    CHECK(std::abs(a - (-0.2877)) <= 1e-4);
    CHECK(std::abs(b - 0.2231) <= 1e-4);

    const auto [la, lb] = utility_support(UtilityModel::linear(), -4000.0, 0.0);
    CHECK(la == -4000.0);
    CHECK(lb == 0.0);

    // Student-budget curve endpoints: wealth 300, calibrated q, +/-200.
    const UtilityModel student = UtilityModel::bernoulli_income(300.0, 100.5);
    const auto [sa, sb] = utility_support(student, -200.0, 200.0);
    CHECK(std::abs(sa - 100.5 * std::log(100.0 / 300.0)) <= 1e-12);
    CHECK(std::abs(sb - 100.5 * std::log(500.0 / 300.0)) <= 1e-12);

    CHECK_THROWS_AS(utility_support(unit, 100.0, -50.0), ValidationError);
}

TEST_CASE("power law and its log form") {
    CHECK(power_law_sensation(7.25, 1.0, 1.0) == 7.25);
    // The decibel exponent turns a tenfold ratio into ten units.
    const double q = 10.0 / std::log(10.0);
    CHECK(std::abs(log_ratio_sensation(10.0, 1.0, q) - 10.0) <= 1e-12);
    CHECK_THROWS_AS(power_law_sensation(-1.0, 2.0, 1.0), ValidationError);
    CHECK_THROWS_AS(log_ratio_sensation(1.0, 0.0, 1.0), ValidationError);
}
