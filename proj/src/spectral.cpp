#include "hamest/spectral.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "hamest/rng.hpp"

namespace hamest {

namespace {

// Tolerances on data that is only Hermitian/normalised up to rounding scale
// with the magnitude of the input, with an absolute floor of 1 so that
// near-zero operators are not held to an impossible relative standard.
double scale_of(const Matrix& m) {
    return std::max(1.0, m.cwiseAbs().maxCoeff());
}

} // namespace

HermitianOperator::HermitianOperator(Matrix entries) : mat_(std::move(entries)) {
    if (mat_.rows() == 0 || mat_.rows() != mat_.cols()) {
        throw DimensionError("HermitianOperator: matrix must be square and non-empty");
    }
    const double defect = (mat_ - mat_.adjoint().eval()).cwiseAbs().maxCoeff();
    if (defect > 1e-12 * scale_of(mat_)) {
        throw Error("HermitianOperator: matrix is not Hermitian (defect " +
                    std::to_string(defect) + ")");
    }
    mat_ = 0.5 * (mat_ + mat_.adjoint().eval());
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("operator+: dimension mismatch");
    }
    return HermitianOperator(a.matrix() + b.matrix());
}

HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("operator-: dimension mismatch");
    }
    return HermitianOperator(a.matrix() - b.matrix());
}

HermitianOperator operator*(double scale, const HermitianOperator& h) {
    return HermitianOperator(scale * h.matrix());
}

HermitianOperator pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return HermitianOperator(m);
}

HermitianOperator pauli_y() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return HermitianOperator(m);
}

HermitianOperator pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return HermitianOperator(m);
}

HermitianOperator zero_operator(int dim) {
    if (dim < 1) {
        throw DimensionError("zero_operator: dim must be >= 1");
    }
    return HermitianOperator(Matrix::Zero(dim, dim));
}

HermitianOperator shifted_identity(int dim, double shift) {
    if (dim < 1) {
        throw DimensionError("shifted_identity: dim must be >= 1");
    }
    return HermitianOperator(shift * Matrix::Identity(dim, dim));
}

HermitianOperator random_hermitian(int dim, std::uint64_t seed) {
    if (dim < 1) {
        throw DimensionError("random_hermitian: dim must be >= 1");
    }
    SplitMix64 gen = trial_rng(seed, 0x48a5u);
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = Complex(gen.next_gaussian(), gen.next_gaussian());
        }
    }
    return HermitianOperator(0.5 * (a + a.adjoint().eval()));
}

EigenSystem eig_hermitian(const HermitianOperator& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error("eig_hermitian: eigensolver failed to converge");
    }
    return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

SpaceLayout::SpaceLayout(int box, int nobox, int ancilla)
    : box_dim(box), nobox_dim(nobox), ancilla_dim(ancilla) {
    if (box_dim < 1 || nobox_dim < 0 || ancilla_dim < 1) {
        throw DimensionError("SpaceLayout: need box >= 1, nobox >= 0, ancilla >= 1");
    }
}

QuantumState::QuantumState(SpaceLayout layout, Vector amplitudes)
    : layout_(layout), amp_(std::move(amplitudes)) {
    if (static_cast<int>(amp_.size()) != layout_.total_dim()) {
        throw DimensionError("QuantumState: amplitude vector does not match layout");
    }
    const double n = amp_.norm();
    if (std::abs(n - 1.0) > 1e-9) {
        throw Error("QuantumState: state is not normalised (norm " + std::to_string(n) + ")");
    }
    amp_ /= n;
}

QuantumState basis_state(const SpaceLayout& layout, int index) {
    if (index < 0 || index >= layout.total_dim()) {
        throw DimensionError("basis_state: index out of range");
    }
    Vector v = Vector::Zero(layout.total_dim());
    v(index) = 1.0;
    return QuantumState(layout, std::move(v));
}

Complex inner(const QuantumState& a, const QuantumState& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner: dimension mismatch");
    }
    return a.amplitudes().dot(b.amplitudes());
}

Vector evolve(const EigenSystem& es, double t, const Vector& amplitudes) {
    if (es.vectors.rows() != amplitudes.size()) {
        throw DimensionError("evolve: state dimension does not match eigensystem");
    }
    Vector modal = es.vectors.adjoint() * amplitudes;
    for (Eigen::Index k = 0; k < modal.size(); ++k) {
        modal(k) *= std::exp(Complex(0, -es.values(k) * t));
    }
    return es.vectors * modal;
}

QuantumState evolve(const HermitianOperator& h, double t, const QuantumState& psi) {
    if (h.dim() != psi.dim()) {
        throw DimensionError("evolve: state dimension does not match Hamiltonian");
    }
    return QuantumState(psi.layout(), evolve(eig_hermitian(h), t, psi.amplitudes()));
}

Matrix evolution_operator(const HermitianOperator& h, double t) {
    const EigenSystem es = eig_hermitian(h);
    Vector phases(es.values.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
        phases(k) = std::exp(Complex(0, -es.values(k) * t));
    }
    return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

HermitianOperator extend_to_layout(const HermitianOperator& h_box, const SpaceLayout& layout) {
    if (h_box.dim() != layout.box_dim) {
        throw DimensionError("extend_to_layout: operator does not act on the box sector");
    }
    Matrix sys = Matrix::Zero(layout.system_dim(), layout.system_dim());
    sys.topLeftCorner(layout.box_dim, layout.box_dim) = h_box.matrix();
    if (layout.ancilla_dim == 1) {
        return HermitianOperator(std::move(sys));
    }
    Matrix full = Eigen::kroneckerProduct(
        sys, Matrix::Identity(layout.ancilla_dim, layout.ancilla_dim));
    return HermitianOperator(std::move(full));
}

HermitianOperator add_ancilla_hamiltonian(const HermitianOperator& h_sys,
                                          const HermitianOperator& h_anc) {
    const Matrix i_sys = Matrix::Identity(h_sys.dim(), h_sys.dim());
    const Matrix i_anc = Matrix::Identity(h_anc.dim(), h_anc.dim());
    Matrix full = Eigen::kroneckerProduct(h_sys.matrix(), i_anc) +
                  Eigen::kroneckerProduct(i_sys, h_anc.matrix());
    return HermitianOperator(std::move(full));
}

} // namespace hamest
