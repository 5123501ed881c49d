#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hamest/scenarios.hpp"
#include "test_util.hpp"

using namespace hamest;

TEST_CASE("spin-fields scenario: orthogonality at a quarter of the naive period") {
    const ScenarioResult result = scenario_spin_fields(1.0);
    CHECK(result.passed);
    CHECK(result.metrics.at("d0") == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(result.metrics.at("orthogonality_time") ==
          doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-9));
    CHECK(result.metrics.at("bound_time") ==
          doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-12));
    CHECK(result.metrics.at("sigma_y_h1") == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(result.metrics.at("sigma_y_h2") == doctest::Approx(-1.0).epsilon(1e-7));
    CHECK(result.metrics.at("discrepancy_factor") == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(result.sweep_rows.size() > 100);

    // Scaling: doubling the field halves every time scale.
    const ScenarioResult faster = scenario_spin_fields(2.0);
    CHECK(faster.passed);
    CHECK(faster.metrics.at("orthogonality_time") ==
          doctest::Approx(std::numbers::pi / 8.0).epsilon(1e-9));

    CHECK_THROWS_AS(scenario_spin_fields(0.0), DomainError);
}

TEST_CASE("spin-fields scenario is deterministic") {
    const ScenarioResult a = scenario_spin_fields(1.0);
    const ScenarioResult b = scenario_spin_fields(1.0);
    CHECK(a.metrics == b.metrics);
    CHECK(a.sweep_rows == b.sweep_rows);
}

TEST_CASE("phase-box scenario: the no-box branch is what makes phases physical") {
    const ScenarioResult result = scenario_phase_box(1.0, 0.0, zero_operator(2));
    CHECK(result.passed);
    CHECK(result.metrics.at("d0") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.metrics.at("bound_time") == doctest::Approx(std::numbers::pi).epsilon(1e-12));
    CHECK(result.metrics.at("overlap_at_bound_time") <= 1e-9);
    CHECK(result.metrics.at("max_box_only_deviation") <= 1e-9);

    // A nontrivial box Hamiltonian must not change the conclusion: the
    // constant offset still factors out inside the box.
    SplitMix64 gen = trial_rng(61, 0);
    const HermitianOperator h0(testutil::random_hermitian_matrix(3, gen));
    const ScenarioResult generic = scenario_phase_box(0.7, -0.3, h0);
    CHECK(generic.passed);
    CHECK(generic.metrics.at("d0") == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(scenario_phase_box(0.5, 0.5, zero_operator(2)), DomainError);
}

TEST_CASE("farhi-gutmann scenario: sqrt(d) scaling on a reduced sweep") {
    const ScenarioResult result = scenario_farhi_gutmann(1.0, {4, 8, 16, 32}, 0.9);
    CHECK(result.passed);
    CHECK(result.metrics.at("scaling_exponent") == doctest::Approx(0.5).epsilon(0.1));
    REQUIRE(result.sweep_rows.size() == 4);
    for (const auto& row : result.sweep_rows) {
        // Simulated crossing times track the analytic prediction closely.
        CHECK(row[1] == doctest::Approx(row[2]).epsilon(0.02));
    }

    CHECK_THROWS_AS(scenario_farhi_gutmann(0.0, {4}, 0.9), DomainError);
    CHECK_THROWS_AS(scenario_farhi_gutmann(1.0, {1}, 0.9), DimensionError);
    CHECK_THROWS_AS(scenario_farhi_gutmann(1.0, {4}, 0.4), DomainError);
    CHECK_THROWS_AS(scenario_farhi_gutmann(1.0, {}, 0.9), DomainError);
}

TEST_CASE("farhi-gutmann identification probability is symmetric across marked states") {
    // All marked states are equivalent up to permutation, so the worst case
    // equals the k = 0 case; spot-check via two different runs whose dims
    // overlap.
    const ScenarioResult a = scenario_farhi_gutmann(1.0, {8}, 0.8);
    const ScenarioResult b = scenario_farhi_gutmann(1.0, {8, 8}, 0.8);
    REQUIRE(a.sweep_rows.size() == 1);
    REQUIRE(b.sweep_rows.size() == 2);
    CHECK(a.sweep_rows[0][1] == doctest::Approx(b.sweep_rows[0][1]).epsilon(1e-12));
    CHECK(b.sweep_rows[0][1] == doctest::Approx(b.sweep_rows[1][1]).epsilon(1e-12));
}

TEST_CASE("shared-eigenbasis scenario: hit frequency 1/dim within 3 sigma") {
    const std::vector<double> e1 = {0.0, 1.0, 2.0, 3.0};
    std::vector<double> e2 = e1;
    e2[2] += 2.0;
    const ScenarioResult result = scenario_shared_eigenbasis(e1, e2, 2, 50000, 9);
    CHECK(result.passed);
    CHECK(result.metrics.at("dim") == doctest::Approx(4.0));
    CHECK(result.metrics.at("delta_e") == doctest::Approx(2.0));
    CHECK(result.metrics.at("expected_time") ==
          doctest::Approx(std::numbers::pi / 8.0).epsilon(1e-12));
    CHECK(std::abs(result.metrics.at("k0_frequency") - 0.25) <=
          result.metrics.at("three_sigma"));
    CHECK(result.metrics.at("mc_expected_time") ==
          doctest::Approx(std::numbers::pi / 8.0)
              .epsilon(4.0 * result.metrics.at("three_sigma")));

    // One-dimensional edge: the only level carries everything.
    const ScenarioResult tiny = scenario_shared_eigenbasis({0.0}, {1.5}, 0, 100, 1);
    CHECK(tiny.passed);
    CHECK(tiny.metrics.at("expected_time") ==
          doctest::Approx(std::numbers::pi / 1.5).epsilon(1e-12));
    CHECK(tiny.metrics.at("k0_frequency") == doctest::Approx(1.0));
}

TEST_CASE("shared-eigenbasis scenario validation") {
    CHECK_THROWS_AS(scenario_shared_eigenbasis({0.0, 1.0}, {0.5, 1.5}, 0, 100, 1),
                    DomainError);
    CHECK_THROWS_AS(scenario_shared_eigenbasis({0.0, 1.0}, {0.0, 1.0}, 1, 100, 1),
                    DomainError);
    CHECK_THROWS_AS(scenario_shared_eigenbasis({0.0, 1.0}, {0.0}, 0, 100, 1),
                    DimensionError);
    CHECK_THROWS_AS(scenario_shared_eigenbasis({0.0, 1.0}, {0.0, 2.0}, 2, 100, 1),
                    DimensionError);
    CHECK_THROWS_AS(scenario_shared_eigenbasis({0.0, 1.0}, {0.0, 2.0}, 1, 0, 1),
                    DomainError);
}

TEST_CASE("shared-eigenbasis scenario is bitwise reproducible") {
    const ScenarioResult a = scenario_shared_eigenbasis({0.0, 1.0}, {0.0, 2.0}, 1, 20000, 3);
    const ScenarioResult b = scenario_shared_eigenbasis({0.0, 1.0}, {0.0, 2.0}, 1, 20000, 3);
    CHECK(a.metrics == b.metrics);
    CHECK(a.sweep_rows == b.sweep_rows);
}
