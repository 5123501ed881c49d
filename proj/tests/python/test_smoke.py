"""Smoke tests for the python bindings: every exposed operation runs and the
headline numbers come out right."""

import math

import numpy as np
import pytest

import hamest


def test_metric_basics():
    sz = hamest.pauli_z()
    sx = hamest.pauli_x()
    assert hamest.dist0(sz, -sz) == pytest.approx(4.0, abs=1e-12)
    assert hamest.norm0(2.0 * np.eye(3, dtype=complex)) == pytest.approx(2.0, abs=1e-12)
    assert hamest.spread(sz) == pytest.approx(2.0, abs=1e-12)
    # sx - sz has eigenvalues +-sqrt(2).
    assert hamest.min_discrimination_time(sx, sz) == pytest.approx(
        math.pi / (2.0 * math.sqrt(2.0)), abs=1e-12
    )


def test_metric_errors_map_to_python_exceptions():
    with pytest.raises(hamest.DimensionError):
        hamest.dist0(hamest.pauli_z(), np.zeros((3, 3), dtype=complex))
    with pytest.raises(hamest.DomainError):
        hamest.min_discrimination_time(hamest.pauli_z(), hamest.pauli_z())
    with pytest.raises(hamest.Error):
        hamest.norm0(np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex))


def test_layout_and_evolution():
    sz = hamest.pauli_z()
    extended = hamest.extend_to_layout(sz, (2, 1, 2))
    assert extended.shape == (6, 6)
    composite = hamest.add_ancilla_hamiltonian(sz, hamest.pauli_x())
    assert composite.shape == (4, 4)

    psi = np.array([1.0, 0.0], dtype=complex)
    out = hamest.evolve(sz, math.pi / 2.0, psi)
    assert out[0] == pytest.approx(-1j, abs=1e-12)
    u = hamest.evolution_operator(sz, 0.3)
    assert np.allclose(u @ u.conj().T, np.eye(2), atol=1e-12)

    inv = hamest.ancilla_invariance_check(sz, -sz, hamest.pauli_x())
    assert inv["composite_distance"] == pytest.approx(inv["base_distance"], abs=1e-9)


def test_time_dependent_bound():
    sz = hamest.pauli_z()
    short = hamest.time_dependent_bound([(0.25 * math.pi / 4.0, sz, -1.0 * sz)])
    assert short["integral"] == pytest.approx(math.pi / 4.0, abs=1e-12)
    assert not short["certain_discrimination_possible"]
    # Two segments whose distances accumulate past pi.
    full = hamest.time_dependent_bound(
        [(math.pi / 4.0, sz, -1.0 * sz), (0.1, sz, -1.0 * sz)]
    )
    assert full["integral"] == pytest.approx(math.pi + 0.4, abs=1e-12)
    assert full["certain_discrimination_possible"]


def test_saturation_trajectory_reaches_the_bound():
    traj = hamest.saturation_trajectory(hamest.pauli_x(), hamest.pauli_z(), steps=2000)
    assert traj["times"][-1] == pytest.approx(math.pi / (2.0 * math.sqrt(2.0)), abs=1e-9)
    assert abs(traj["overlaps"][-1]) < 1e-3
    assert traj["thetas"][-1] == pytest.approx(math.pi / 2.0, abs=1e-3)

    dec = hamest.decompose_pair((2, 1, 1), traj["final1"], traj["final2"])
    assert dec["theta"] == pytest.approx(math.pi / 2.0, abs=1e-3)
    par, perp = dec["psi_par"], dec["psi_perp"]
    assert abs(np.vdot(par, perp)) < 1e-9

    probe = hamest.optimal_probe(
        hamest.extend_to_layout(hamest.pauli_x(), (2, 1, 1))
        - hamest.extend_to_layout(hamest.pauli_z(), (2, 1, 1)),
        (2, 1, 1),
    )
    assert np.linalg.norm(probe) == pytest.approx(1.0, abs=1e-12)


def test_estimation_closed_form_and_monte_carlo():
    assert hamest.helstrom_error(1.0) == pytest.approx(0.5, abs=1e-12)
    assert hamest.helstrom_error(0.0) == pytest.approx(0.0, abs=1e-12)
    assert hamest.dichotomic_uncertainty(2.0, 0.0) == pytest.approx(1.0, abs=1e-12)
    assert hamest.dichotomic_uncertainty(2.0, 10.0) == 0.0

    best = hamest.max_uncertainty_product(2.0)
    assert best["product_star"] == pytest.approx(0.2625, abs=5e-4)
    assert best["x_star"] == pytest.approx(0.556, abs=2e-3)

    curve = hamest.uncertainty_product_curve(2.0, [0.0, best["delta_t_star"]])
    assert not curve[0]["bound_satisfied"]
    assert curve[1]["bound_satisfied"]

    sz = hamest.pauli_z()
    sample = hamest.simulate_dichotomic_estimation(
        sz, -1.0 * sz, delta_t=0.3, trials=20000, seed=3, protocol_steps=200
    )
    assert abs(sample["delta_h_empirical"] - sample["delta_h_closed"]) <= (
        4.0 * sample["std_error"]
    )
    # Identical runs are bit-identical; a different seed is not.
    again = hamest.simulate_dichotomic_estimation(
        sz, -1.0 * sz, delta_t=0.3, trials=20000, seed=3, protocol_steps=200
    )
    assert again["delta_h_empirical"] == sample["delta_h_empirical"]

    report = hamest.spy_bound_experiment(sz, level_index=0, delta_t=2.0)
    assert report["bound_satisfied"] and report["product"] >= 0.25


def test_decay_statistics():
    stats = hamest.decay_measurement_simulation(gamma=2.0, trials=100000, seed=11)
    assert stats["mean_time"] == pytest.approx(0.5, abs=0.02)
    assert stats["fwhm_estimate"] == pytest.approx(4.0, abs=0.2)
    cutoffs = [row["cutoff"] for row in stats["truncated"]]
    assert cutoffs == [20.0, 200.0, 2000.0]
    mc = [row["monte_carlo"] for row in stats["truncated"]]
    assert mc == sorted(mc)
    with pytest.raises(hamest.DomainError):
        hamest.decay_measurement_simulation(gamma=0.0, trials=100)


def test_scenarios_pass():
    spin = hamest.scenario_spin_fields(1.0)
    assert spin["passed"]
    assert spin["metrics"]["discrepancy_factor"] == pytest.approx(4.0, abs=1e-6)

    box = hamest.scenario_phase_box(1.0, 0.0, np.zeros((2, 2), dtype=complex))
    assert box["passed"]
    assert box["sweep_columns"] == ["time", "abs_overlap_extended", "abs_overlap_box_only"]

    search = hamest.scenario_farhi_gutmann(energy=1.0, dims=[4, 8, 16, 32], threshold=0.9)
    assert search["passed"]
    assert abs(search["metrics"]["scaling_exponent"] - 0.5) <= 0.05

    shared = hamest.scenario_shared_eigenbasis(
        [0.0, 1.0], [0.5, 1.0], k0=0, trials=50000, seed=2
    )
    assert shared["passed"]
    assert shared["metrics"]["expected_time"] == pytest.approx(math.pi, abs=1e-12)


def test_deterministic_generator():
    a = hamest.random_hermitian(4, seed=42)
    b = hamest.random_hermitian(4, seed=42)
    assert np.array_equal(a, b)
    assert np.allclose(a, a.conj().T)
