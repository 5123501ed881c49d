#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hamest/spectral.hpp"

namespace hamest {

// Outcome of a worked end-to-end scenario: named scalar metrics, a pass/fail
// verdict against the scenario's own checks, and an optional sweep table
// (one named column per entry in `sweep_columns`).
struct ScenarioResult {
    std::string name;
    std::map<std::string, double> metrics;
    bool passed;
    std::vector<std::string> sweep_columns;
    std::vector<std::vector<double>> sweep_rows;
};

// Spin-1/2 in a field of magnitude mu_b0 pointing up or down: the probe
// polarised along x reaches orthogonality at pi / (4 mu_b0), which is exactly
// pi / dist0 and four times earlier than the pi / mu_b0 period over which the
// transverse spin expectation returns to itself.
ScenarioResult scenario_spin_fields(double mu_b0);

// Particle in a box whose potential floor is phi1 or phi2: with the particle
// kept inside the box the two hypotheses are indistinguishable for ever, while
// a superposition with one out-of-the-box level reaches orthogonality at
// pi / |phi1 - phi2|.
ScenarioResult scenario_phase_box(double phi1, double phi2, const HermitianOperator& h0);

// Oracle-identification run: H_k = E |k><k| + E |s><s| with s the uniform
// superposition.  The worst-case time to identify k with probability >=
// threshold grows like sqrt(dim), matching the minimum-time bound with
// dist0 = O(E / sqrt(dim)).
ScenarioResult scenario_farhi_gutmann(double energy, const std::vector<int>& dims,
                                      double threshold);

// Two Hamiltonians sharing one eigenbasis and differing in a single level k0:
// only probe amplitude on k0 distinguishes them, so a uniformly random probe
// succeeds with frequency 1/dim and the expected discrimination time is
// pi / (dim |Delta E|).
ScenarioResult scenario_shared_eigenbasis(const std::vector<double>& e1,
                                          const std::vector<double>& e2, int k0,
                                          std::uint64_t trials, std::uint64_t seed);

} // namespace hamest
