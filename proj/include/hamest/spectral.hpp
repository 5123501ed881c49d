#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "hamest/errors.hpp"

namespace hamest {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// A finite-dimensional Hamiltonian.  Construction symmetrises inputs that are
// Hermitian up to rounding and rejects anything further away, so every
// instance satisfies H == H^dagger exactly.
class HermitianOperator {
public:
    explicit HermitianOperator(Matrix entries);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Matrix& matrix() const { return mat_; }

private:
    Matrix mat_;
};

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);
HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b);
HermitianOperator operator*(double scale, const HermitianOperator& h);

// Named generators used across tests and the command line.
HermitianOperator pauli_x();
HermitianOperator pauli_y();
HermitianOperator pauli_z();
HermitianOperator zero_operator(int dim);
// shift * identity; the canonical pair of Hamiltonians that differ by an
// overall constant.
HermitianOperator shifted_identity(int dim, double shift);
// GUE-like draw with a deterministic, platform-independent stream.
HermitianOperator random_hermitian(int dim, std::uint64_t seed);

// Eigendecomposition; `values` ascending, `vectors` columns matching order.
struct EigenSystem {
    RealVector values;
    Matrix vectors;
};

EigenSystem eig_hermitian(const HermitianOperator& h);

// Partition of the working Hilbert space.  The first box_dim system levels
// carry the Hamiltonian under study, the next nobox_dim levels are "outside
// the box" (zero energy), and an ancilla factor of dimension ancilla_dim is
// tensored on the right.  Basis index convention: i = sys * ancilla_dim + anc.
struct SpaceLayout {
    int box_dim;
    int nobox_dim;
    int ancilla_dim;

    SpaceLayout(int box, int nobox, int ancilla);

    int system_dim() const { return box_dim + nobox_dim; }
    int total_dim() const { return system_dim() * ancilla_dim; }

    bool operator==(const SpaceLayout& other) const = default;
};

// Normalised pure state tagged with the layout it lives in.
class QuantumState {
public:
    QuantumState(SpaceLayout layout, Vector amplitudes);

    const SpaceLayout& layout() const { return layout_; }
    const Vector& amplitudes() const { return amp_; }
    int dim() const { return static_cast<int>(amp_.size()); }

private:
    SpaceLayout layout_;
    Vector amp_;
};

QuantumState basis_state(const SpaceLayout& layout, int index);

// <a|b>; conjugate-linear in the first argument.
Complex inner(const QuantumState& a, const QuantumState& b);

// exp(-i H t) |psi>.
QuantumState evolve(const HermitianOperator& h, double t, const QuantumState& psi);
Vector evolve(const EigenSystem& es, double t, const Vector& amplitudes);

// Full propagator exp(-i H t), for building control unitaries.
Matrix evolution_operator(const HermitianOperator& h, double t);

// (H_box (+) 0_nobox) (x) I_ancilla with the index convention above.
HermitianOperator extend_to_layout(const HermitianOperator& h_box, const SpaceLayout& layout);

// Non-interacting composition H_sys (x) I + I (x) H_anc.
HermitianOperator add_ancilla_hamiltonian(const HermitianOperator& h_sys,
                                          const HermitianOperator& h_anc);

} // namespace hamest
