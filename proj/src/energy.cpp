#include "hamest/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hamest/rng.hpp"

namespace hamest {

namespace {

constexpr double kTableKeyTol = 1e-9;

void validate_discrete(const DiscreteResponse& response) {
    if (response.energies.empty() ||
        response.energies.size() != response.probabilities.size()) {
        throw DimensionError("DiscreteResponse: need one probability per reported energy");
    }
    double total = 0.0;
    for (double p : response.probabilities) {
        if (p < -1e-12) {
            throw DomainError("DiscreteResponse: negative probability");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw DomainError("DiscreteResponse: probabilities must sum to 1");
    }
}

double discrete_moment(const DiscreteResponse& table, double energy, double cutoff) {
    double moment = 0.0;
    for (std::size_t i = 0; i < table.energies.size(); ++i) {
        const double dev = std::abs(table.energies[i] - energy);
        if (dev <= cutoff) {
            moment += table.probabilities[i] * dev;
        }
    }
    return moment;
}

} // namespace

MeasurementModel MeasurementModel::exact() {
    return MeasurementModel(Density{ExactResponse{}});
}

MeasurementModel MeasurementModel::lorentzian(double gamma) {
    if (!(gamma > 0.0)) {
        throw DomainError("MeasurementModel::lorentzian: gamma must be positive");
    }
    return MeasurementModel(Density{LorentzianResponse{gamma}});
}

MeasurementModel MeasurementModel::gaussian(double sigma) {
    if (!(sigma > 0.0)) {
        throw DomainError("MeasurementModel::gaussian: sigma must be positive");
    }
    return MeasurementModel(Density{GaussianResponse{sigma}});
}

void MeasurementModel::set_response(double energy, DiscreteResponse response) {
    validate_discrete(response);
    tables_.insert_or_assign(energy, std::move(response));
}

const DiscreteResponse* MeasurementModel::table_for(double energy) const {
    const auto it = tables_.lower_bound(energy - kTableKeyTol);
    if (it != tables_.end() && std::abs(it->first - energy) <= kTableKeyTol) {
        return &it->second;
    }
    return nullptr;
}

AccuracyResult accuracy_eigenstate(const MeasurementModel& model, double energy) {
    if (const DiscreteResponse* table = model.table_for(energy)) {
        const double inf = std::numeric_limits<double>::infinity();
        return {discrete_moment(*table, energy, inf), false};
    }
    if (std::holds_alternative<ExactResponse>(model.density())) {
        return {0.0, false};
    }
    if (std::holds_alternative<GaussianResponse>(model.density())) {
        const double sigma = std::get<GaussianResponse>(model.density()).sigma;
        return {sigma * std::sqrt(2.0 / std::numbers::pi), false};
    }
    if (std::holds_alternative<LorentzianResponse>(model.density())) {
        return {std::numeric_limits<double>::infinity(), true};
    }
    throw DomainError("accuracy_eigenstate: no response registered for this energy");
}

double truncated_accuracy_eigenstate(const MeasurementModel& model, double energy,
                                     double cutoff) {
    if (!(cutoff >= 0.0)) {
        throw DomainError("truncated_accuracy_eigenstate: cutoff must be >= 0");
    }
    if (const DiscreteResponse* table = model.table_for(energy)) {
        return discrete_moment(*table, energy, cutoff);
    }
    if (std::holds_alternative<ExactResponse>(model.density())) {
        return 0.0;
    }
    if (std::holds_alternative<GaussianResponse>(model.density())) {
        const double sigma = std::get<GaussianResponse>(model.density()).sigma;
        return sigma * std::sqrt(2.0 / std::numbers::pi) *
               (1.0 - std::exp(-0.5 * cutoff * cutoff / (sigma * sigma)));
    }
    if (std::holds_alternative<LorentzianResponse>(model.density())) {
        const double gamma = std::get<LorentzianResponse>(model.density()).gamma;
        return gamma / std::numbers::pi * std::log1p(cutoff * cutoff / (gamma * gamma));
    }
    throw DomainError("truncated_accuracy_eigenstate: no response registered for this energy");
}

bool divergence_by_doubling(const MeasurementModel& model, double energy) {
    // If the tail contribution between successive cutoff doublings keeps
    // arriving, the full moment cannot be finite.
    double cutoff = 1.0;
    double previous = truncated_accuracy_eigenstate(model, energy, cutoff);
    double increment = previous;
    for (int k = 0; k < 30; ++k) {
        cutoff *= 2.0;
        const double current = truncated_accuracy_eigenstate(model, energy, cutoff);
        increment = current - previous;
        previous = current;
    }
    return increment > 1e-9 * std::max(1.0, previous);
}

std::vector<EnergyOutcome> ideal_energy_distribution(const HermitianOperator& h,
                                                     const QuantumState& psi) {
    if (h.dim() != psi.dim()) {
        throw DimensionError("ideal_energy_distribution: state does not match Hamiltonian");
    }
    const EigenSystem es = eig_hermitian(h);
    const double scale = std::max(std::abs(es.values(0)),
                                  std::abs(es.values(es.values.size() - 1)));
    const double merge_tol = 1e-9 * std::max(1.0, scale);

    std::vector<EnergyOutcome> outcomes;
    for (Eigen::Index k = 0; k < es.values.size(); ++k) {
        const double p = std::norm(es.vectors.col(k).dot(psi.amplitudes()));
        if (!outcomes.empty() && es.values(k) - outcomes.back().energy <= merge_tol) {
            outcomes.back().probability += p;
        } else {
            outcomes.push_back({es.values(k), p});
        }
    }
    std::erase_if(outcomes, [](const EnergyOutcome& o) { return o.probability <= 1e-12; });
    return outcomes;
}

AccuracyResult accuracy_state(const MeasurementModel& model, const HermitianOperator& h,
                              const QuantumState& psi) {
    double value = 0.0;
    bool divergent = false;
    for (const EnergyOutcome& outcome : ideal_energy_distribution(h, psi)) {
        const AccuracyResult level = accuracy_eigenstate(model, outcome.energy);
        value += outcome.probability * level.value;
        divergent = divergent || level.divergent;
    }
    return {value, divergent};
}

DecayModel::DecayModel(double gamma_, double e0_) : gamma(gamma_), e0(e0_) {
    if (!(gamma > 0.0)) {
        throw DomainError("DecayModel: gamma must be positive");
    }
}

DecayStats decay_measurement_simulation(const DecayModel& model, std::uint64_t trials,
                                        std::uint64_t seed, std::vector<double> cutoffs) {
    if (trials < 2) {
        throw DomainError("decay_measurement_simulation: need at least two trials");
    }
    if (cutoffs.empty()) {
        cutoffs = {10.0 * model.gamma, 100.0 * model.gamma, 1000.0 * model.gamma};
    }
    for (double c : cutoffs) {
        if (!(c > 0.0)) {
            throw DomainError("decay_measurement_simulation: cutoffs must be positive");
        }
    }

    // Binned line profile for the width estimate.  Bin width gamma/20 over
    // e0 +- 20 gamma keeps a 5% tolerance on the expected 2 gamma meaningful;
    // the heavy Lorentzian tails rule out variance-based estimators.
    const double window = 20.0 * model.gamma;
    const double bin_width = model.gamma / 20.0;
    const int n_bins = 800;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_bins), 0);

    double time_sum = 0.0;
    std::vector<double> moment_sums(cutoffs.size(), 0.0);
    for (std::uint64_t i = 0; i < trials; ++i) {
        SplitMix64 gen = trial_rng(seed, i);
        time_sum += -std::log(gen.next_open_double()) / model.gamma;
        // Inverse CDF of the Lorentzian line.
        const double dev =
            model.gamma * std::tan(std::numbers::pi * (gen.next_double() - 0.5));
        if (std::abs(dev) < window) {
            const int bin = std::min(n_bins - 1,
                                     static_cast<int>((dev + window) / bin_width));
            ++counts[static_cast<std::size_t>(bin)];
        }
        for (std::size_t c = 0; c < cutoffs.size(); ++c) {
            if (std::abs(dev) <= cutoffs[c]) {
                moment_sums[c] += std::abs(dev);
            }
        }
    }

    // Full width at half maximum of the binned line: span of the outermost
    // bins still holding at least half the peak count.
    std::uint64_t peak = 0;
    for (std::uint64_t c : counts) {
        peak = std::max(peak, c);
    }
    const double half = static_cast<double>(peak) / 2.0;
    int first = 0;
    while (first < n_bins && static_cast<double>(counts[static_cast<std::size_t>(first)]) < half) {
        ++first;
    }
    int last = n_bins - 1;
    while (last >= 0 && static_cast<double>(counts[static_cast<std::size_t>(last)]) < half) {
        --last;
    }
    const double fwhm = last >= first ? (last - first + 1) * bin_width : 0.0;

    const MeasurementModel line = MeasurementModel::lorentzian(model.gamma);
    std::vector<TruncatedAccuracy> truncated;
    truncated.reserve(cutoffs.size());
    for (std::size_t c = 0; c < cutoffs.size(); ++c) {
        truncated.push_back({cutoffs[c],
                             moment_sums[c] / static_cast<double>(trials),
                             truncated_accuracy_eigenstate(line, 0.0, cutoffs[c])});
    }

    return DecayStats{time_sum / static_cast<double>(trials),
                      1.0 / model.gamma,
                      fwhm,
                      2.0 * model.gamma,
                      std::move(truncated),
                      trials};
}

UncertaintyReport spy_bound_experiment(const HermitianOperator& h0, int level_index,
                                       double delta_t) {
    if (level_index < 0 || level_index >= h0.dim()) {
        throw DimensionError("spy_bound_experiment: level index out of range");
    }
    if (!(delta_t > 0.0)) {
        throw DomainError("spy_bound_experiment: delta_t must be positive");
    }
    // The larger the allotted time, the smaller the shift the spy needs; the
    // product of the residual error and the time never drops below 1/4.
    const ProductMaximum best = max_uncertainty_product(1.0);
    const double eps = 2.0 * best.x_star / delta_t;
    const double delta_e = dichotomic_uncertainty(eps, delta_t);
    const double product = delta_t * delta_e;
    return UncertaintyReport{delta_t, delta_e, product, product >= 0.25 - 1e-12};
}

} // namespace hamest
