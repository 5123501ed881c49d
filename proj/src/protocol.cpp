#include "hamest/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hamest/metric.hpp"

namespace hamest {

namespace {

double clamped_theta(const Complex& overlap) {
    return std::acos(std::clamp(std::abs(overlap), 0.0, 1.0));
}

// Deterministic gauge: rotate so the largest-magnitude component is real
// positive (first such component wins ties).
Vector canonical_phase(Vector v) {
    Eigen::Index pivot = 0;
    double best = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > best) {
            best = mag;
            pivot = i;
        }
    }
    if (best > 0.0) {
        v *= std::conj(v(pivot)) / best;
    }
    return v;
}

struct BranchRun {
    Trajectory trajectory;
    Vector a1;
    Vector a2;
};

BranchRun run_impl(const DiscriminationProtocol& protocol, const HermitianOperator& h1_box,
                   const HermitianOperator& h2_box) {
    const SpaceLayout& layout = protocol.layout();
    const EigenSystem es1 = eig_hermitian(extend_to_layout(h1_box, layout));
    const EigenSystem es2 = eig_hermitian(extend_to_layout(h2_box, layout));

    BranchRun run;
    run.a1 = protocol.initial().amplitudes();
    run.a2 = run.a1;

    double t = 0.0;
    auto record = [&run, &t]() {
        const Complex ov = run.a1.dot(run.a2);
        run.trajectory.times.push_back(t);
        run.trajectory.overlaps.push_back(ov);
        run.trajectory.thetas.push_back(clamped_theta(ov));
    };
    record();

    for (const ProtocolStep& step : protocol.steps()) {
        run.a1 = evolve(es1, step.dwell(), run.a1);
        run.a2 = evolve(es2, step.dwell(), run.a2);
        const Complex before = run.a1.dot(run.a2);
        run.a1 = step.control() * run.a1;
        run.a2 = step.control() * run.a2;
        const Complex after = run.a1.dot(run.a2);
        // A shared unitary cannot move the overlap; anything beyond rounding
        // indicates a corrupted control matrix.
        if (std::abs(after - before) > 1e-10) {
            throw Error("run_protocol: control failed to preserve the branch overlap");
        }
        t += step.dwell();
        record();
    }
    return run;
}

DiscriminationProtocol build_saturation(const HermitianOperator& h1_box,
                                        const HermitianOperator& h2_box,
                                        const SpaceLayout& layout, int num_steps, double nu,
                                        double total_time) {
    if (h1_box.dim() != h2_box.dim() || h1_box.dim() != layout.box_dim) {
        throw DimensionError("saturation_protocol: Hamiltonians must act on the box sector");
    }
    if (num_steps < 1) {
        throw DomainError("saturation_protocol: need at least one step");
    }
    if (!(total_time >= 0.0) || !std::isfinite(total_time)) {
        throw DomainError("saturation_protocol: total time must be finite and >= 0");
    }
    const HermitianOperator hd = extend_to_layout(h1_box, layout) -
                                 extend_to_layout(h2_box, layout);
    const HermitianOperator hp = extend_to_layout(h1_box, layout) +
                                 extend_to_layout(h2_box, layout);
    const double tau = total_time / num_steps;
    const Matrix control = evolution_operator(hd, nu * tau) *
                           evolution_operator(0.5 * hp, -tau);
    QuantumState probe = optimal_probe(hd, layout);
    std::vector<ProtocolStep> steps(static_cast<std::size_t>(num_steps),
                                    ProtocolStep(tau, control));
    return DiscriminationProtocol(layout, std::move(probe), std::move(steps));
}

} // namespace

ProtocolStep::ProtocolStep(double dwell, Matrix control)
    : dwell_(dwell), control_(std::move(control)) {
    if (!(dwell_ >= 0.0) || !std::isfinite(dwell_)) {
        throw DomainError("ProtocolStep: dwell must be finite and >= 0");
    }
    if (control_.rows() == 0 || control_.rows() != control_.cols()) {
        throw DimensionError("ProtocolStep: control must be a square matrix");
    }
    const Matrix gram = control_.adjoint() * control_;
    const double defect =
        (gram - Matrix::Identity(control_.rows(), control_.cols())).cwiseAbs().maxCoeff();
    if (defect > 1e-10) {
        throw Error("ProtocolStep: control is not unitary (defect " +
                    std::to_string(defect) + ")");
    }
}

DiscriminationProtocol::DiscriminationProtocol(SpaceLayout layout, QuantumState initial,
                                               std::vector<ProtocolStep> steps)
    : layout_(layout), initial_(std::move(initial)), steps_(std::move(steps)) {
    if (initial_.layout() != layout_) {
        throw DimensionError("DiscriminationProtocol: initial state layout mismatch");
    }
    for (const auto& step : steps_) {
        if (step.control().rows() != layout_.total_dim()) {
            throw DimensionError("DiscriminationProtocol: control dimension mismatch");
        }
    }
}

Trajectory run_protocol(const DiscriminationProtocol& protocol, const HermitianOperator& h1_box,
                        const HermitianOperator& h2_box) {
    return run_impl(protocol, h1_box, h2_box).trajectory;
}

ProtocolOutcome run_protocol_full(const DiscriminationProtocol& protocol,
                                  const HermitianOperator& h1_box,
                                  const HermitianOperator& h2_box) {
    BranchRun run = run_impl(protocol, h1_box, h2_box);
    return ProtocolOutcome{std::move(run.trajectory),
                           QuantumState(protocol.layout(), std::move(run.a1)),
                           QuantumState(protocol.layout(), std::move(run.a2))};
}

PairDecomposition decompose_pair(const QuantumState& psi1, const QuantumState& psi2) {
    if (!(psi1.layout() == psi2.layout())) {
        throw DimensionError("decompose_pair: states live in different layouts");
    }
    const Complex ov = inner(psi1, psi2);
    const double mag = std::clamp(std::abs(ov), 0.0, 1.0);
    if (mag >= 1.0 - 1e-12) {
        throw DomainError("decompose_pair: states are parallel; psi_perp is undefined");
    }
    const double theta = std::acos(mag);
    const double chi = -std::arg(ov);

    const Complex half_phase = std::exp(Complex(0, -chi / 2.0));
    const Vector u1 = half_phase * psi1.amplitudes();
    const Vector u2 = std::conj(half_phase) * psi2.amplitudes();
    Vector par = (u1 + u2) / (2.0 * std::cos(theta / 2.0));
    Vector perp = (u1 - u2) / (2.0 * std::sin(theta / 2.0));
    return PairDecomposition{theta, chi, QuantumState(psi1.layout(), std::move(par)),
                             QuantumState(psi1.layout(), std::move(perp))};
}

double speed_limit_margin(const Trajectory& trajectory, double d0) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < trajectory.times.size(); ++k) {
        const double dt = trajectory.times[k + 1] - trajectory.times[k];
        const double dtheta = trajectory.thetas[k + 1] - trajectory.thetas[k];
        worst = std::max(worst, dtheta - 0.5 * d0 * dt);
    }
    return worst;
}

QuantumState optimal_probe(const HermitianOperator& hd_extended, const SpaceLayout& layout) {
    if (hd_extended.dim() != layout.total_dim()) {
        throw DimensionError("optimal_probe: operator does not match the layout");
    }
    const EigenSystem es = eig_hermitian(hd_extended);
    const Eigen::Index last = es.values.size() - 1;
    const double width = es.values(last) - es.values(0);
    if (width <= 1e-12 * std::max(1.0, std::abs(es.values(last)))) {
        throw DomainError("optimal_probe: difference Hamiltonian has no spectral width");
    }
    const Vector lo = canonical_phase(es.vectors.col(0));
    const Vector hi = canonical_phase(es.vectors.col(last));
    Vector probe = (hi + lo) / std::numbers::sqrt2;
    return QuantumState(layout, std::move(probe));
}

DiscriminationProtocol saturation_protocol(const HermitianOperator& h1_box,
                                           const HermitianOperator& h2_box,
                                           const SpaceLayout& layout, int num_steps, double nu) {
    if (h1_box.dim() != h2_box.dim() || h1_box.dim() != layout.box_dim) {
        throw DimensionError("saturation_protocol: Hamiltonians must act on the box sector");
    }
    const double width = spread(extend_to_layout(h1_box, layout) -
                                extend_to_layout(h2_box, layout));
    if (width <= 0.0) {
        throw DomainError("saturation_protocol: Hamiltonians are indistinguishable in this "
                          "layout (add a no-box level for commuting pairs)");
    }
    return build_saturation(h1_box, h2_box, layout, num_steps, nu, std::numbers::pi / width);
}

DiscriminationProtocol saturation_protocol(const HermitianOperator& h1_box,
                                           const HermitianOperator& h2_box,
                                           const SpaceLayout& layout, int num_steps, double nu,
                                           double total_time) {
    return build_saturation(h1_box, h2_box, layout, num_steps, nu, total_time);
}

MeasurementBasis discrimination_measurement(const QuantumState& psi1, const QuantumState& psi2) {
    const PairDecomposition dec = decompose_pair(psi1, psi2);
    const Vector par = dec.psi_par.amplitudes();
    const Vector perp = dec.psi_perp.amplitudes();
    Vector plus = (par + perp) / std::numbers::sqrt2;
    Vector minus = (par - perp) / std::numbers::sqrt2;
    return MeasurementBasis{QuantumState(psi1.layout(), std::move(plus)),
                            QuantumState(psi1.layout(), std::move(minus))};
}

} // namespace hamest
