#pragma once

#include <vector>

#include "hamest/spectral.hpp"

namespace hamest {

// One round of a discrimination experiment: free evolution for `dwell` under
// whichever hypothesis is true, followed by an agent-chosen control unitary
// (the same unitary regardless of hypothesis, since the agent does not know it).
class ProtocolStep {
public:
    ProtocolStep(double dwell, Matrix control);

    double dwell() const { return dwell_; }
    const Matrix& control() const { return control_; }

private:
    double dwell_;
    Matrix control_;
};

class DiscriminationProtocol {
public:
    DiscriminationProtocol(SpaceLayout layout, QuantumState initial,
                           std::vector<ProtocolStep> steps);

    const SpaceLayout& layout() const { return layout_; }
    const QuantumState& initial() const { return initial_; }
    const std::vector<ProtocolStep>& steps() const { return steps_; }

private:
    SpaceLayout layout_;
    QuantumState initial_;
    std::vector<ProtocolStep> steps_;
};

// Overlap record of the two hypothesis branches, one entry per step boundary
// (index 0 is the initial state).  theta = arccos |overlap|.
struct Trajectory {
    std::vector<double> times;
    std::vector<Complex> overlaps;
    std::vector<double> thetas;
};

Trajectory run_protocol(const DiscriminationProtocol& protocol,
                        const HermitianOperator& h1_box, const HermitianOperator& h2_box);

// Same run, but also hands back the two final branch states.
struct ProtocolOutcome {
    Trajectory trajectory;
    QuantumState final1;
    QuantumState final2;
};

ProtocolOutcome run_protocol_full(const DiscriminationProtocol& protocol,
                                  const HermitianOperator& h1_box,
                                  const HermitianOperator& h2_box);

// Canonical form of a pair of pure states:
//   psi1 = e^{+i chi/2} (cos(theta/2) psi_par + sin(theta/2) psi_perp)
//   psi2 = e^{-i chi/2} (cos(theta/2) psi_par - sin(theta/2) psi_perp)
// with theta in (0, pi/2], <psi_par|psi_perp> = 0.  The reconstruction is
// exact, not merely up to a global phase.
struct PairDecomposition {
    double theta;
    double chi;
    QuantumState psi_par;
    QuantumState psi_perp;
};

PairDecomposition decompose_pair(const QuantumState& psi1, const QuantumState& psi2);

// Largest violation of the per-step speed limit d theta <= (d0 / 2) dt over a
// trajectory; <= 0 (up to rounding) for every physical run.
double speed_limit_margin(const Trajectory& trajectory, double d0);

// Equal superposition of the extreme eigenvectors of the (extended) difference
// Hamiltonian, the fastest-moving probe available.  Eigenvector phases are
// fixed by making each one's largest-magnitude component real positive, so the
// probe is deterministic.
QuantumState optimal_probe(const HermitianOperator& hd_extended, const SpaceLayout& layout);

// Protocol that meets the minimum discrimination time: N equal dwells of
// tau = T / N followed by the control exp(-i nu tau Hd~) exp(+i tau H+~),
// where Hd~ and H+~ are the extended difference and average Hamiltonians and
// T = pi / spread(Hd~).  With a no-box level in the layout, spread(Hd~) equals
// dist0(h1, h2) and the run reaches orthogonality at the bound as N grows; the
// final overlap magnitude decays like 1/N.  nu = +1/2 (-1/2) cancels the h2
// (h1) branch so that branch barely moves.
DiscriminationProtocol saturation_protocol(const HermitianOperator& h1_box,
                                           const HermitianOperator& h2_box,
                                           const SpaceLayout& layout, int num_steps, double nu);

// Same construction truncated (or stretched) to an arbitrary total time.
DiscriminationProtocol saturation_protocol(const HermitianOperator& h1_box,
                                           const HermitianOperator& h2_box,
                                           const SpaceLayout& layout, int num_steps, double nu,
                                           double total_time);

// Orthonormal basis {(psi_par + psi_perp)/sqrt(2), (psi_par - psi_perp)/sqrt(2)}
// realising the minimum-error (Helstrom) measurement for an equal-prior pair.
struct MeasurementBasis {
    QuantumState plus;
    QuantumState minus;
};

MeasurementBasis discrimination_measurement(const QuantumState& psi1, const QuantumState& psi2);

} // namespace hamest
