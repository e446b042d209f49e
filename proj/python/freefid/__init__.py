"""Ground-state fidelity for quadratic fermionic Hamiltonians."""

from ._core import (
    Error,
    FidelityResult,
    PolarForm,
    QuadraticCoupling,
    SweepConfig,
    canonical_ground_state,
    complete_graph,
    first_order_boundary,
    fidelity_angles,
    fidelity_commuting,
    fidelity_det,
    fidelity_perelomov,
    fock_ground_state,
    fock_hamiltonian,
    format_records,
    make_coupling,
    coupling_from_matrix,
    multimode_ex2,
    orthogonal_angles,
    pairing_matrix,
    parity_of,
    perturbative_s2,
    polar_decompose,
    run_sweep,
    s2_example2,
    state_from_angles,
    two_mode_ex1,
    two_mode_ex2,
)

__all__ = [name for name in dir() if not name.startswith("_")]
