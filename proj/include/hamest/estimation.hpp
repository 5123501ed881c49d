#pragma once

#include <cstdint>
#include <vector>

#include "hamest/spectral.hpp"

namespace hamest {

// Two candidate Hamiltonians with prior probabilities (p1 + p2 = 1).
class HypothesisPair {
public:
    HypothesisPair(HermitianOperator h1, HermitianOperator h2, double p1 = 0.5, double p2 = 0.5);

    const HermitianOperator& h1() const { return h1_; }
    const HermitianOperator& h2() const { return h2_; }
    double p1() const { return p1_; }
    double p2() const { return p2_; }

private:
    HermitianOperator h1_;
    HermitianOperator h2_;
    double p1_;
    double p2_;
};

// Minimum-error probability for equal-prior discrimination of two pure states
// with |<psi1|psi2>| = overlap_magnitude: (1 - sqrt(1 - m^2)) / 2.
double helstrom_error(double overlap_magnitude);

// One measurement outcome of a generic estimation strategy: the probability of
// this outcome under each hypothesis, and the Hamiltonian the estimator
// announces when the outcome occurs.
struct GuessOutcome {
    std::vector<double> conditionals;
    HermitianOperator guess;
};

// Mean estimation inaccuracy Delta H = sum_i prior_i sum_j p(j|i) dist0(H_i, G_j).
double estimation_uncertainty(const std::vector<HermitianOperator>& hypotheses,
                              const std::vector<double>& priors,
                              const std::vector<GuessOutcome>& outcomes);

// Maximum-a-posteriori decision between two hypotheses; ties go to h1.
const HermitianOperator& optimal_guess(double posterior1, double posterior2,
                                       const HermitianOperator& h1,
                                       const HermitianOperator& h2);

// Best achievable Delta H after estimating for time delta_t, for a pair at
// distance d0: (d0 / 2) (1 - sin(d0 delta_t / 2)) until the bound time
// pi / d0, identically 0 beyond it.
double dichotomic_uncertainty(double d0, double delta_t);

struct UncertaintyReport {
    double delta_t;
    double delta_h;
    double product;        // delta_t * delta_h
    bool bound_satisfied;  // product >= 1/4, i.e. this delta_t witnesses the bound
};

std::vector<UncertaintyReport> uncertainty_product_curve(double d0,
                                                         const std::vector<double>& delta_t_grid);

// Maximum of delta_t * dichotomic_uncertainty(d0, delta_t) over delta_t.  In
// the scale-free variable x = d0 delta_t / 2 the objective is x (1 - sin x),
// so x_star and product_star do not depend on d0.
struct ProductMaximum {
    double delta_t_star;
    double product_star;
    double x_star;
};

ProductMaximum max_uncertainty_product(double d0);

// Monte-Carlo run of the truncated saturation protocol followed by the optimal
// measurement and MAP guessing, for an equal-prior pair.
struct EstimationSample {
    double delta_t;
    double overlap_magnitude;   // |<psi1|psi2>| the protocol reached
    double delta_h_closed;      // closed form at delta_t
    double delta_h_achievable;  // d0 * helstrom_error(overlap_magnitude)
    double delta_h_empirical;   // d0 * (observed error rate)
    double std_error;           // binomial standard error of delta_h_empirical
    double product;             // delta_t * delta_h_closed
    bool bound_satisfied;
    std::uint64_t trials;
};

EstimationSample simulate_dichotomic_estimation(const HypothesisPair& pair, double delta_t,
                                                std::uint64_t trials, std::uint64_t seed,
                                                int protocol_steps = 1000);

} // namespace hamest
