// Python bindings: a functional facade over the hamest C++ library.  All
// operators cross the boundary as dense complex numpy matrices; structured
// results come back as plain dicts so downstream code stays numpy friendly.

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamest/energy.hpp"
#include "hamest/estimation.hpp"
#include "hamest/io.hpp"
#include "hamest/metric.hpp"
#include "hamest/protocol.hpp"
#include "hamest/scenarios.hpp"
#include "hamest/spectral.hpp"

namespace py = pybind11;

namespace {

using namespace hamest;

using LayoutTuple = std::tuple<int, int, int>;

HermitianOperator op(const Matrix& m) { return HermitianOperator(m); }

SpaceLayout layout_of(const LayoutTuple& t) {
    return SpaceLayout(std::get<0>(t), std::get<1>(t), std::get<2>(t));
}

Eigen::VectorXd real_array(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Vector complex_array(const std::vector<Complex>& v) {
    return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

py::dict trajectory_dict(const Trajectory& t) {
    py::dict d;
    d["times"] = real_array(t.times);
    d["overlaps"] = complex_array(t.overlaps);
    d["thetas"] = real_array(t.thetas);
    return d;
}

py::dict scenario_dict(const ScenarioResult& r) {
    py::dict d;
    d["name"] = r.name;
    d["passed"] = r.passed;
    d["metrics"] = r.metrics;
    d["sweep_columns"] = r.sweep_columns;
    d["sweep_rows"] = r.sweep_rows;
    return d;
}

py::dict sample_dict(const EstimationSample& s) {
    py::dict d;
    d["delta_t"] = s.delta_t;
    d["overlap_magnitude"] = s.overlap_magnitude;
    d["delta_h_closed"] = s.delta_h_closed;
    d["delta_h_achievable"] = s.delta_h_achievable;
    d["delta_h_empirical"] = s.delta_h_empirical;
    d["std_error"] = s.std_error;
    d["product"] = s.product;
    d["bound_satisfied"] = s.bound_satisfied;
    d["trials"] = s.trials;
    return d;
}

py::dict report_dict(const UncertaintyReport& r) {
    py::dict d;
    d["delta_t"] = r.delta_t;
    d["delta_h"] = r.delta_h;
    d["product"] = r.product;
    d["bound_satisfied"] = r.bound_satisfied;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hamiltonian discrimination and estimation toolkit (C++ core)";

    const auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());

    // --- generators -----------------------------------------------------
    m.def("pauli_x", [] { return pauli_x().matrix(); });
    m.def("pauli_y", [] { return pauli_y().matrix(); });
    m.def("pauli_z", [] { return pauli_z().matrix(); });
    m.def("random_hermitian",
          [](int dim, std::uint64_t seed) { return random_hermitian(dim, seed).matrix(); },
          py::arg("dim"), py::arg("seed"));

    // --- metric ----------------------------------------------------------
    m.def("norm0", [](const Matrix& h) { return norm0(op(h)); }, py::arg("h"),
          "Operator size max{E_max - E_min, |E_max|, |E_min|}");
    m.def("dist0", [](const Matrix& a, const Matrix& b) { return dist0(op(a), op(b)); },
          py::arg("h1"), py::arg("h2"), "Distance norm0(h1 - h2)");
    m.def("spread", [](const Matrix& h) { return spread(op(h)); }, py::arg("h"),
          "Spectral width E_max - E_min");
    m.def("min_discrimination_time",
          [](const Matrix& a, const Matrix& b, bool use_box_extension) {
              return min_discrimination_time(op(a), op(b), use_box_extension);
          },
          py::arg("h1"), py::arg("h2"), py::arg("use_box_extension") = true,
          "Shortest time permitting certain discrimination of h1 from h2");
    m.def("time_dependent_bound",
          [](const std::vector<std::tuple<double, Matrix, Matrix>>& segments) {
              std::vector<ScheduleSegment> native;
              native.reserve(segments.size());
              for (const auto& [duration, a, b] : segments) {
                  native.push_back({duration, op(a), op(b)});
              }
              const TimeDependentBound bound =
                  time_dependent_bound(HamiltonianSchedule(std::move(native)));
              py::dict d;
              d["integral"] = bound.integral;
              d["certain_discrimination_possible"] = bound.certain_discrimination_possible;
              return d;
          },
          py::arg("segments"),
          "Accumulated integral of dist0 over a piecewise schedule of "
          "(duration, h1, h2) segments; certainty requires reaching pi");
    m.def("ancilla_invariance_check",
          [](const Matrix& a, const Matrix& b, const Matrix& anc) {
              const AncillaInvariance inv = ancilla_invariance_check(op(a), op(b), op(anc));
              py::dict d;
              d["base_distance"] = inv.base_distance;
              d["composite_distance"] = inv.composite_distance;
              return d;
          },
          py::arg("h1"), py::arg("h2"), py::arg("h_ancilla"));

    // --- space layout and evolution --------------------------------------
    m.def("extend_to_layout",
          [](const Matrix& h, const LayoutTuple& layout) {
              return extend_to_layout(op(h), layout_of(layout)).matrix();
          },
          py::arg("h"), py::arg("layout"),
          "(H (+) 0_nobox) (x) I_ancilla for layout (box, nobox, ancilla)");
    m.def("add_ancilla_hamiltonian",
          [](const Matrix& sys, const Matrix& anc) {
              return add_ancilla_hamiltonian(op(sys), op(anc)).matrix();
          },
          py::arg("h_sys"), py::arg("h_ancilla"));
    m.def("evolve",
          [](const Matrix& h, double t, const Vector& psi) {
              return evolve(eig_hermitian(op(h)), t, psi);
          },
          py::arg("h"), py::arg("t"), py::arg("psi"), "exp(-i h t) psi");
    m.def("evolution_operator",
          [](const Matrix& h, double t) { return evolution_operator(op(h), t); },
          py::arg("h"), py::arg("t"), "Full propagator exp(-i h t)");
    m.def("optimal_probe",
          [](const Matrix& hd_extended, const LayoutTuple& layout) {
              return optimal_probe(op(hd_extended), layout_of(layout)).amplitudes();
          },
          py::arg("hd_extended"), py::arg("layout"),
          "Equal superposition of the extreme eigenvectors of the extended "
          "difference Hamiltonian");

    // --- discrimination protocol ------------------------------------------
    m.def("saturation_trajectory",
          [](const Matrix& h1, const Matrix& h2, std::optional<LayoutTuple> layout, int steps,
             double nu, std::optional<double> total_time) {
              const SpaceLayout lay = layout ? layout_of(*layout)
                                             : SpaceLayout(op(h1).dim(), 1, 1);
              const DiscriminationProtocol protocol =
                  total_time
                      ? saturation_protocol(op(h1), op(h2), lay, steps, nu, *total_time)
                      : saturation_protocol(op(h1), op(h2), lay, steps, nu);
              const ProtocolOutcome outcome = run_protocol_full(protocol, op(h1), op(h2));
              py::dict d = trajectory_dict(outcome.trajectory);
              d["final1"] = outcome.final1.amplitudes();
              d["final2"] = outcome.final2.amplitudes();
              return d;
          },
          py::arg("h1"), py::arg("h2"), py::arg("layout") = std::nullopt,
          py::arg("steps") = 1000, py::arg("nu") = 0.5,
          py::arg("total_time") = std::nullopt,
          "Run the saturation protocol (default layout adds one no-box level, "
          "default time is the discrimination bound) and return the overlap "
          "trajectory plus the two final branch states");
    m.def("decompose_pair",
          [](const LayoutTuple& layout, const Vector& psi1, const Vector& psi2) {
              const SpaceLayout lay = layout_of(layout);
              const PairDecomposition dec =
                  decompose_pair(QuantumState(lay, psi1), QuantumState(lay, psi2));
              py::dict d;
              d["theta"] = dec.theta;
              d["chi"] = dec.chi;
              d["psi_par"] = dec.psi_par.amplitudes();
              d["psi_perp"] = dec.psi_perp.amplitudes();
              return d;
          },
          py::arg("layout"), py::arg("psi1"), py::arg("psi2"),
          "Canonical (theta, chi, parallel, perpendicular) form of a state pair");

    // --- estimation --------------------------------------------------------
    m.def("helstrom_error", &helstrom_error, py::arg("overlap_magnitude"),
          "Minimum equal-prior discrimination error (1 - sqrt(1 - m^2)) / 2");
    m.def("dichotomic_uncertainty", &dichotomic_uncertainty, py::arg("d0"),
          py::arg("delta_t"),
          "Best mean inaccuracy (d0/2)(1 - sin(d0 dt / 2)), 0 past the bound time");
    m.def("max_uncertainty_product",
          [](double d0) {
              const ProductMaximum best = max_uncertainty_product(d0);
              py::dict d;
              d["delta_t_star"] = best.delta_t_star;
              d["product_star"] = best.product_star;
              d["x_star"] = best.x_star;
              return d;
          },
          py::arg("d0"), "Maximum of delta_t times the dichotomic uncertainty");
    m.def("uncertainty_product_curve",
          [](double d0, const std::vector<double>& grid) {
              py::list out;
              for (const UncertaintyReport& r : uncertainty_product_curve(d0, grid)) {
                  out.append(report_dict(r));
              }
              return out;
          },
          py::arg("d0"), py::arg("delta_t_grid"));
    m.def("simulate_dichotomic_estimation",
          [](const Matrix& h1, const Matrix& h2, double delta_t, std::uint64_t trials,
             std::uint64_t seed, int protocol_steps) {
              return sample_dict(simulate_dichotomic_estimation(
                  HypothesisPair(op(h1), op(h2)), delta_t, trials, seed, protocol_steps));
          },
          py::arg("h1"), py::arg("h2"), py::arg("delta_t"), py::arg("trials"),
          py::arg("seed") = 0, py::arg("protocol_steps") = 1000,
          "Monte-Carlo protocol + optimal measurement + MAP guess for an "
          "equal-prior pair");
    m.def("spy_bound_experiment",
          [](const Matrix& h0, int level_index, double delta_t) {
              return report_dict(spy_bound_experiment(op(h0), level_index, delta_t));
          },
          py::arg("h0"), py::arg("level_index"), py::arg("delta_t"),
          "Adversarial-shift lower bound: delta_t * DeltaE stays above 1/4");

    // --- decay model ---------------------------------------------------------
    m.def("decay_measurement_simulation",
          [](double gamma, double e0, std::uint64_t trials, std::uint64_t seed,
             std::vector<double> cutoffs) {
              const DecayStats stats = decay_measurement_simulation(
                  DecayModel(gamma, e0), trials, seed, std::move(cutoffs));
              py::list truncated;
              for (const TruncatedAccuracy& t : stats.truncated) {
                  py::dict row;
                  row["cutoff"] = t.cutoff;
                  row["monte_carlo"] = t.monte_carlo;
                  row["closed_form"] = t.closed_form;
                  truncated.append(row);
              }
              py::dict d;
              d["mean_time"] = stats.mean_time;
              d["mean_time_expected"] = stats.mean_time_expected;
              d["fwhm_estimate"] = stats.fwhm_estimate;
              d["fwhm_expected"] = stats.fwhm_expected;
              d["truncated"] = truncated;
              d["trials"] = stats.trials;
              return d;
          },
          py::arg("gamma"), py::arg("e0") = 0.0, py::arg("trials") = 1000000,
          py::arg("seed") = 0, py::arg("cutoffs") = std::vector<double>{},
          "Sample (decay time, reported energy) pairs from an unstable level; "
          "empty cutoffs selects {10, 100, 1000} gamma");

    // --- worked scenarios ----------------------------------------------------
    m.def("scenario_spin_fields",
          [](double mu_b0) { return scenario_dict(scenario_spin_fields(mu_b0)); },
          py::arg("mu_b0") = 1.0);
    m.def("scenario_phase_box",
          [](double phi1, double phi2, const Matrix& h0) {
              return scenario_dict(scenario_phase_box(phi1, phi2, op(h0)));
          },
          py::arg("phi1"), py::arg("phi2"), py::arg("h0"));
    m.def("scenario_farhi_gutmann",
          [](double energy, const std::vector<int>& dims, double threshold) {
              return scenario_dict(scenario_farhi_gutmann(energy, dims, threshold));
          },
          py::arg("energy") = 1.0, py::arg("dims") = std::vector<int>{4, 8, 16, 32},
          py::arg("threshold") = 0.9);
    m.def("scenario_shared_eigenbasis",
          [](const std::vector<double>& e1, const std::vector<double>& e2, int k0,
             std::uint64_t trials, std::uint64_t seed) {
              return scenario_dict(scenario_shared_eigenbasis(e1, e2, k0, trials, seed));
          },
          py::arg("e1"), py::arg("e2"), py::arg("k0"), py::arg("trials") = 100000,
          py::arg("seed") = 0);
}
