#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "hamest/estimation.hpp"
#include "hamest/spectral.hpp"

namespace hamest {

// Reported-energy distributions conditioned on the true energy.  A model
// carries an optional named density (applied centred on any true energy) plus
// per-energy discrete tables that override it.

struct DiscreteResponse {
    std::vector<double> energies;       // reported values E'
    std::vector<double> probabilities;  // must sum to 1
};

struct ExactResponse {};  // E' = E with certainty

struct LorentzianResponse {
    double gamma;  // half width at half maximum
};

struct GaussianResponse {
    double sigma;
};

class MeasurementModel {
public:
    MeasurementModel() = default;  // every energy must be registered explicitly

    static MeasurementModel exact();
    static MeasurementModel lorentzian(double gamma);
    static MeasurementModel gaussian(double sigma);

    // Override the density with a discrete table at one true energy.
    void set_response(double energy, DiscreteResponse response);

    using Density = std::variant<std::monostate, ExactResponse, LorentzianResponse,
                                 GaussianResponse>;

    const Density& density() const { return density_; }
    const DiscreteResponse* table_for(double energy) const;

private:
    explicit MeasurementModel(Density density) : density_(std::move(density)) {}

    Density density_ = std::monostate{};
    std::map<double, DiscreteResponse> tables_;
};

// First absolute moment sum/integral of |E' - E|; `divergent` is set (and the
// value is +infinity) when the moment does not exist, as for a Lorentzian line.
struct AccuracyResult {
    double value;
    bool divergent;
};

AccuracyResult accuracy_eigenstate(const MeasurementModel& model, double energy);

// Same moment restricted to |E' - E| <= cutoff; always finite.
double truncated_accuracy_eigenstate(const MeasurementModel& model, double energy,
                                     double cutoff);

// Numeric divergence probe: doubles the cutoff repeatedly and flags the moment
// divergent when the increments fail to die out.  Agrees with the analytic
// classification on every registered density.
bool divergence_by_doubling(const MeasurementModel& model, double energy);

// Born distribution over energy outcomes, degenerate levels merged.
struct EnergyOutcome {
    double energy;
    double probability;
};

std::vector<EnergyOutcome> ideal_energy_distribution(const HermitianOperator& h,
                                                     const QuantumState& psi);

// Born-weighted accuracy sum_k p_k * accuracy_eigenstate(model, E_k).
AccuracyResult accuracy_state(const MeasurementModel& model, const HermitianOperator& h,
                              const QuantumState& psi);

// Unstable level of width gamma at energy e0: decay times are exponential with
// mean 1/gamma and the emitted line is Lorentzian with FWHM 2 gamma.
struct DecayModel {
    double gamma;
    double e0;

    DecayModel(double gamma_, double e0_);
};

struct TruncatedAccuracy {
    double cutoff;
    double monte_carlo;
    double closed_form;
};

struct DecayStats {
    double mean_time;
    double mean_time_expected;  // 1 / gamma
    double fwhm_estimate;       // histogram FWHM, bin width gamma/20 over e0 +- 20 gamma
    double fwhm_expected;       // 2 gamma
    std::vector<TruncatedAccuracy> truncated;
    std::uint64_t trials;
};

// Inverse-CDF sampling of (decay time, reported energy) pairs.  Empty
// `cutoffs` selects {10, 100, 1000} gamma; the untruncated moment diverges,
// which is why only truncated values are reported.
DecayStats decay_measurement_simulation(const DecayModel& model, std::uint64_t trials,
                                        std::uint64_t seed,
                                        std::vector<double> cutoffs = {});

// Adversarial lower-bound construction: to resolve a level of h0 to accuracy
// Delta E within time delta_t, one must beat a "spy" who replaces h0 by
// h0 + eps * I with eps = 2 x_star / delta_t.  The pair is at distance eps
// (using a no-box level), and the best dichotomic estimate leaves
// Delta E = eps * (1 - sin x_star) / 2, so Delta E * delta_t is a constant
// just above 1/4 no matter how large delta_t is.
UncertaintyReport spy_bound_experiment(const HermitianOperator& h0, int level_index,
                                       double delta_t);

} // namespace hamest
