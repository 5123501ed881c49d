#include "hamest/estimation.hpp"

#include <cmath>
#include <numbers>

#include "hamest/metric.hpp"
#include "hamest/protocol.hpp"
#include "hamest/rng.hpp"

namespace hamest {

HypothesisPair::HypothesisPair(HermitianOperator h1, HermitianOperator h2, double p1, double p2)
    : h1_(std::move(h1)), h2_(std::move(h2)), p1_(p1), p2_(p2) {
    if (h1_.dim() != h2_.dim()) {
        throw DimensionError("HypothesisPair: dimension mismatch");
    }
    if (p1_ < 0.0 || p2_ < 0.0 || std::abs(p1_ + p2_ - 1.0) > 1e-9) {
        throw DomainError("HypothesisPair: priors must be non-negative and sum to 1");
    }
}

double helstrom_error(double overlap_magnitude) {
    if (!(overlap_magnitude >= 0.0) || overlap_magnitude > 1.0 + 1e-12) {
        throw DomainError("helstrom_error: overlap magnitude must lie in [0, 1]");
    }
    const double m = std::min(overlap_magnitude, 1.0);
    return 0.5 * (1.0 - std::sqrt(1.0 - m * m));
}

double estimation_uncertainty(const std::vector<HermitianOperator>& hypotheses,
                              const std::vector<double>& priors,
                              const std::vector<GuessOutcome>& outcomes) {
    if (hypotheses.empty() || hypotheses.size() != priors.size()) {
        throw DimensionError("estimation_uncertainty: need one prior per hypothesis");
    }
    double prior_sum = 0.0;
    for (double p : priors) {
        if (p < 0.0) {
            throw DomainError("estimation_uncertainty: negative prior");
        }
        prior_sum += p;
    }
    if (std::abs(prior_sum - 1.0) > 1e-9) {
        throw DomainError("estimation_uncertainty: priors must sum to 1");
    }
    for (std::size_t i = 0; i < hypotheses.size(); ++i) {
        double total = 0.0;
        for (const auto& outcome : outcomes) {
            if (outcome.conditionals.size() != hypotheses.size()) {
                throw DimensionError("estimation_uncertainty: outcome conditionals must cover "
                                     "every hypothesis");
            }
            const double p = outcome.conditionals[i];
            if (p < -1e-12) {
                throw DomainError("estimation_uncertainty: negative conditional probability");
            }
            total += p;
        }
        if (std::abs(total - 1.0) > 1e-9) {
            throw DomainError("estimation_uncertainty: conditionals must sum to 1 per "
                              "hypothesis");
        }
    }
    double delta_h = 0.0;
    for (std::size_t i = 0; i < hypotheses.size(); ++i) {
        for (const auto& outcome : outcomes) {
            delta_h += priors[i] * outcome.conditionals[i] *
                       dist0(hypotheses[i], outcome.guess);
        }
    }
    return delta_h;
}

const HermitianOperator& optimal_guess(double posterior1, double posterior2,
                                       const HermitianOperator& h1,
                                       const HermitianOperator& h2) {
    if (posterior1 < 0.0 || posterior2 < 0.0 ||
        std::abs(posterior1 + posterior2 - 1.0) > 1e-9) {
        throw DomainError("optimal_guess: posteriors must be non-negative and sum to 1");
    }
    return posterior1 >= posterior2 ? h1 : h2;
}

double dichotomic_uncertainty(double d0, double delta_t) {
    if (!(d0 > 0.0)) {
        throw DomainError("dichotomic_uncertainty: d0 must be positive");
    }
    if (delta_t < 0.0) {
        throw DomainError("dichotomic_uncertainty: delta_t must be >= 0");
    }
    // Beyond the bound time the pair is perfectly distinguishable; the formula
    // must not be re-entered or the sine would bring the error back up.
    if (delta_t >= std::numbers::pi / d0) {
        return 0.0;
    }
    return 0.5 * d0 * (1.0 - std::sin(0.5 * d0 * delta_t));
}

std::vector<UncertaintyReport> uncertainty_product_curve(
    double d0, const std::vector<double>& delta_t_grid) {
    std::vector<UncertaintyReport> curve;
    curve.reserve(delta_t_grid.size());
    for (double dt : delta_t_grid) {
        const double dh = dichotomic_uncertainty(d0, dt);
        const double product = dt * dh;
        curve.push_back({dt, dh, product, product >= 0.25 - 1e-12});
    }
    return curve;
}

ProductMaximum max_uncertainty_product(double d0) {
    if (!(d0 > 0.0)) {
        throw DomainError("max_uncertainty_product: d0 must be positive");
    }
    // Golden-section maximisation of x (1 - sin x) on [0, pi/2]; the objective
    // is unimodal there (positive, vanishing at both ends).
    const auto f = [](double x) { return x * (1.0 - std::sin(x)); };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0;
    double hi = std::numbers::pi / 2.0;
    double a = hi - inv_phi * (hi - lo);
    double b = lo + inv_phi * (hi - lo);
    double fa = f(a);
    double fb = f(b);
    while (hi - lo > 1e-13) {
        if (fa > fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = f(b);
        }
    }
    const double x_star = 0.5 * (lo + hi);
    return ProductMaximum{2.0 * x_star / d0, f(x_star), x_star};
}

EstimationSample simulate_dichotomic_estimation(const HypothesisPair& pair, double delta_t,
                                                std::uint64_t trials, std::uint64_t seed,
                                                int protocol_steps) {
    if (std::abs(pair.p1() - 0.5) > 1e-12) {
        throw DomainError("simulate_dichotomic_estimation: only equal priors are supported");
    }
    if (delta_t < 0.0) {
        throw DomainError("simulate_dichotomic_estimation: delta_t must be >= 0");
    }
    if (trials < 1) {
        throw DomainError("simulate_dichotomic_estimation: need at least one trial");
    }
    if (protocol_steps < 1) {
        throw DomainError("simulate_dichotomic_estimation: need at least one protocol step");
    }
    const double d0 = dist0(pair.h1(), pair.h2());
    if (d0 <= 0.0) {
        throw DomainError("simulate_dichotomic_estimation: hypotheses are identical");
    }

    // One no-box level makes the protocol work for commuting pairs too; an
    // extra ancilla level would change nothing (the distance is invariant).
    const SpaceLayout layout(pair.h1().dim(), 1, 1);
    const DiscriminationProtocol protocol =
        saturation_protocol(pair.h1(), pair.h2(), layout, protocol_steps, 0.5, delta_t);
    const ProtocolOutcome outcome = run_protocol_full(protocol, pair.h1(), pair.h2());
    const double mag =
        std::min(std::abs(outcome.trajectory.overlaps.back()), 1.0);

    // Born probabilities of the "+" outcome under each hypothesis.  Branches
    // parallel up to rounding carry no information: any measurement gives
    // identical outcome statistics, so the MAP guess is decided by the priors
    // alone.  (The slack also keeps decompose_pair away from its 1/sin(theta)
    // amplification near theta = 0.)
    double p_plus_1 = 1.0;
    double p_plus_2 = 1.0;
    if (mag < 1.0 - 1e-9) {
        const MeasurementBasis basis = discrimination_measurement(outcome.final1, outcome.final2);
        p_plus_1 = std::norm(inner(basis.plus, outcome.final1));
        p_plus_2 = std::norm(inner(basis.plus, outcome.final2));
    }

    std::uint64_t errors = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 gen = trial_rng(seed, t);
        const bool truth_is_h1 = gen.next_double() < 0.5;
        const double p_plus = truth_is_h1 ? p_plus_1 : p_plus_2;
        const bool saw_plus = gen.next_double() < p_plus;
        const double like1 = saw_plus ? p_plus_1 : 1.0 - p_plus_1;
        const double like2 = saw_plus ? p_plus_2 : 1.0 - p_plus_2;
        const double norm = 0.5 * like1 + 0.5 * like2;
        const double q1 = norm > 0.0 ? 0.5 * like1 / norm : 0.5;
        const HermitianOperator& guess =
            optimal_guess(q1, 1.0 - q1, pair.h1(), pair.h2());
        const bool guessed_h1 = &guess == &pair.h1();
        if (guessed_h1 != truth_is_h1) {
            ++errors;
        }
    }

    const double error_rate = static_cast<double>(errors) / static_cast<double>(trials);
    const double closed = dichotomic_uncertainty(d0, delta_t);
    const double product = delta_t * closed;
    return EstimationSample{delta_t,
                            mag,
                            closed,
                            d0 * helstrom_error(mag),
                            d0 * error_rate,
                            d0 * std::sqrt(error_rate * (1.0 - error_rate) /
                                           static_cast<double>(trials)),
                            product,
                            product >= 0.25 - 1e-12,
                            trials};
}

} // namespace hamest
