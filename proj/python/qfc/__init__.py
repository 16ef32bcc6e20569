"""Control schemes for a qubit under dephasing noise: closed forms, simulation,
and optimality certificates. Thin veneer over the C++ core."""

from ._core import (
    best_random_channel,
    chi_opt,
    circuit_discrepancy,
    classical_bound,
    do_nothing_fidelity,
    dr_fidelity,
    eta_opt,
    f_dif,
    find_max_fdif,
    fqc,
    fqc_opt,
    helstrom_probability,
    quantum_bound,
    simulate_do_nothing,
    simulate_dr,
    simulate_feedback,
)

__all__ = [
    "best_random_channel",
    "chi_opt",
    "circuit_discrepancy",
    "classical_bound",
    "do_nothing_fidelity",
    "dr_fidelity",
    "eta_opt",
    "f_dif",
    "find_max_fdif",
    "fqc",
    "fqc_opt",
    "helstrom_probability",
    "quantum_bound",
    "simulate_do_nothing",
    "simulate_dr",
    "simulate_feedback",
]
