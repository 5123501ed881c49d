"""Hamiltonian discrimination and estimation toolkit.

Thin pure-python wrapper over the C++ core: operators are dense complex numpy
matrices, structured results are plain dicts.
"""

from ._core import (
    DimensionError,
    DomainError,
    Error,
    add_ancilla_hamiltonian,
    ancilla_invariance_check,
    decay_measurement_simulation,
    decompose_pair,
    dichotomic_uncertainty,
    dist0,
    evolution_operator,
    evolve,
    extend_to_layout,
    helstrom_error,
    max_uncertainty_product,
    min_discrimination_time,
    norm0,
    optimal_probe,
    pauli_x,
    pauli_y,
    pauli_z,
    random_hermitian,
    saturation_trajectory,
    scenario_farhi_gutmann,
    scenario_phase_box,
    scenario_shared_eigenbasis,
    scenario_spin_fields,
    simulate_dichotomic_estimation,
    spread,
    spy_bound_experiment,
    time_dependent_bound,
    uncertainty_product_curve,
)

__all__ = [
    "DimensionError",
    "DomainError",
    "Error",
    "add_ancilla_hamiltonian",
    "ancilla_invariance_check",
    "decay_measurement_simulation",
    "decompose_pair",
    "dichotomic_uncertainty",
    "dist0",
    "evolution_operator",
    "evolve",
    "extend_to_layout",
    "helstrom_error",
    "max_uncertainty_product",
    "min_discrimination_time",
    "norm0",
    "optimal_probe",
    "pauli_x",
    "pauli_y",
    "pauli_z",
    "random_hermitian",
    "saturation_trajectory",
    "scenario_farhi_gutmann",
    "scenario_phase_box",
    "scenario_shared_eigenbasis",
    "scenario_spin_fields",
    "simulate_dichotomic_estimation",
    "spread",
    "spy_bound_experiment",
    "time_dependent_bound",
    "uncertainty_product_curve",
]

__version__ = "0.1.0"
