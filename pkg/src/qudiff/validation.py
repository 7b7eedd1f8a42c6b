"""Input validation helpers for quantum-state arrays.

These mirror the role of ``sklearn.utils.validation``: they accept loose
array-likes from callers, coerce them to the canonical dtype/shape, and raise
``ValueError`` with a actionable message when a physical invariant is violated.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "ATOL",
    "n_qubits_from_dim",
    "check_density_matrix",
    "check_density_matrices",
    "check_pure_state",
    "check_weights",
]

# Tolerance for the Hermiticity / unit-trace / positivity checks.  Chosen to
# absorb floating-point drift across long channel/unitary compositions.
ATOL = 1e-9


def n_qubits_from_dim(dim: int) -> int:
    """Number of qubits for a Hilbert-space dimension, requiring a power of two."""
    n = int(dim).bit_length() - 1
    if dim <= 0 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def check_density_matrix(rho, n_qubits: int | None = None, *, atol: float = ATOL) -> np.ndarray:
    """Validate a single density matrix and return it as a complex ndarray.

    Checks the three defining invariants: Hermiticity, unit trace, and
    positive semidefiniteness (minimum eigenvalue >= -atol).
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    n = n_qubits_from_dim(rho.shape[0])
    if n_qubits is not None and n != n_qubits:
        raise ValueError(f"expected {n_qubits} qubits, got a {rho.shape[0]}-dimensional matrix")
    herm_err = np.max(np.abs(rho - rho.conj().T))
    if herm_err > atol:
        raise ValueError(f"matrix is not Hermitian: max |rho - rho^dagger| = {herm_err:.3e}")
    trace_err = abs(np.trace(rho) - 1.0)
    if trace_err > atol:
        raise ValueError(f"matrix does not have unit trace: |Tr - 1| = {trace_err:.3e}")
    min_eig = float(np.linalg.eigvalsh(rho)[0])
    if min_eig < -atol:
        raise ValueError(f"matrix is not positive semidefinite: min eigenvalue = {min_eig:.3e}")
    return rho


def check_density_matrices(states, n_qubits: int | None = None, *, atol: float = ATOL) -> np.ndarray:
    """Validate a stack of density matrices, shape ``(n_samples, d, d)``."""
    states = np.asarray(states, dtype=complex)
    if states.ndim == 2:
        states = states[None]
    if states.ndim != 3 or states.shape[1] != states.shape[2]:
        raise ValueError(f"expected shape (n_samples, d, d), got {states.shape}")
    if states.shape[0] == 0:
        raise ValueError("empty state array")
    for rho in states:
        check_density_matrix(rho, n_qubits, atol=atol)
    return states


def check_pure_state(psi, n_qubits: int | None = None, *, atol: float = 1e-12) -> np.ndarray:
    """Validate a pure-state amplitude vector (unit norm)."""
    psi = np.asarray(psi, dtype=complex).ravel()
    n = n_qubits_from_dim(psi.shape[0])
    if n_qubits is not None and n != n_qubits:
        raise ValueError(f"expected {n_qubits} qubits, got a {psi.shape[0]}-dimensional vector")
    norm_err = abs(np.linalg.norm(psi) - 1.0)
    if norm_err > atol:
        raise ValueError(f"state vector is not normalized: |norm - 1| = {norm_err:.3e}")
    return psi


def check_weights(weights, n: int | None = None, *, atol: float = ATOL) -> np.ndarray:
    """Validate a probability-weight vector: non-negative, summing to one."""
    weights = np.asarray(weights, dtype=float).ravel()
    if n is not None and weights.shape[0] != n:
        raise ValueError(f"expected {n} weights, got {weights.shape[0]}")
    if np.any(weights < -atol):
        raise ValueError("weights must be non-negative")
    total = weights.sum()
    if abs(total - 1.0) > atol:
        raise ValueError(f"weights must sum to one, got {total!r}")
    return weights
