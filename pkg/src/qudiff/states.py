"""Dense linear algebra for multi-qubit density matrices.

States are plain complex ndarrays.  Qubit 0 occupies the most significant
index position, so ``tensor_product(rho, sigma)`` appends the qubits of
``sigma`` as the least significant block.  Everything here is a pure function
of its inputs (plus an explicit random generator where sampling is involved).
"""

from __future__ import annotations

import numpy as np

from .validation import n_qubits_from_dim

__all__ = [
    "MAX_TOTAL_QUBITS",
    "hermitize",
    "pure_state_density",
    "maximally_mixed",
    "tensor_product",
    "partial_trace",
    "purity",
    "trace_product",
    "superfidelity",
    "uhlmann_fidelity",
    "haar_random_pure",
    "bloch_coordinates",
]

# Largest register a single circuit may act on.  Dense simulation of anything
# bigger than this is out of scope; closed-form tooling covers wider systems.
MAX_TOTAL_QUBITS = 10


def hermitize(mat: np.ndarray) -> np.ndarray:
    """Project onto the Hermitian part, (M + M^dagger)/2.

    Applied after every channel or unitary application to keep floating-point
    drift from accumulating across long compositions.
    """
    return (mat + mat.conj().T) / 2.0


def pure_state_density(psi) -> np.ndarray:
    """Rank-1 projector |psi><psi| for a normalized amplitude vector."""
    psi = np.asarray(psi, dtype=complex).ravel()
    return np.outer(psi, psi.conj())


def maximally_mixed(n_qubits: int) -> np.ndarray:
    """The maximally mixed state I/d on ``n_qubits`` qubits."""
    if n_qubits < 1:
        raise ValueError("n_qubits must be >= 1")
    d = 2**n_qubits
    return np.eye(d, dtype=complex) / d


def tensor_product(rho: np.ndarray, sigma: np.ndarray) -> np.ndarray:
    """Kronecker product; the first factor keeps the most significant qubits."""
    n_total = n_qubits_from_dim(rho.shape[0]) + n_qubits_from_dim(sigma.shape[0])
    if n_total > MAX_TOTAL_QUBITS:
        raise ValueError(
            f"combined register of {n_total} qubits exceeds the {MAX_TOTAL_QUBITS}-qubit cap"
        )
    return np.kron(rho, sigma)


def partial_trace(rho: np.ndarray, keep) -> np.ndarray:
    """Reduced state on the qubits in ``keep`` (indices counted from the most
    significant position).

    The remaining qubits are traced out; the kept qubits retain their relative
    order.
    """
    n = n_qubits_from_dim(rho.shape[0])
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise ValueError("keep must be a nonempty set of qubit indices")
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError(f"qubit indices {keep} out of range for {n} qubits")
    traced = [i for i in range(n) if i not in keep]
    tensor = rho.reshape((2,) * (2 * n))
    for offset, idx in enumerate(traced):
        ax = idx - offset  # earlier traces shift the remaining axes left
        n_left = n - offset
        tensor = np.trace(tensor, axis1=ax, axis2=ax + n_left)
    d_keep = 2 ** len(keep)
    return tensor.reshape(d_keep, d_keep)


def purity(rho: np.ndarray) -> float:
    """Tr(rho^2); 1 for pure states, 1/d for the maximally mixed state."""
    return float(np.real(np.einsum("ij,ji->", rho, rho)))


def trace_product(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Tr(rho sigma) for two equal-dimension Hermitian operators.

    The product trace of Hermitian matrices is real; the imaginary part is
    checked to be numerical noise and then discarded.
    """
    if rho.shape != sigma.shape:
        raise ValueError(f"dimension mismatch: {rho.shape} vs {sigma.shape}")
    value = np.einsum("ij,ji->", rho, sigma)
    if abs(value.imag) > 1e-10:
        raise FloatingPointError(f"trace product has non-negligible imaginary part {value.imag:.3e}")
    return float(value.real)


def superfidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Superfidelity G(rho, sigma) = Tr(rho sigma) + sqrt((1-Tr rho^2)(1-Tr sigma^2)).

    An upper bound on the Uhlmann fidelity that needs only product traces.
    The purity deficits are clamped at zero before the square root so that
    floating-point overshoot on pure states cannot produce NaN.
    """
    tp = trace_product(rho, sigma)
    return tp + np.sqrt(max(0.0, 1.0 - purity(rho)) * max(0.0, 1.0 - purity(sigma)))


def uhlmann_fidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Uhlmann fidelity [Tr sqrt(sqrt(rho) sigma sqrt(rho))]^2.

    Evaluated through Hermitian eigendecompositions; small negative
    eigenvalues from rounding are clamped at zero before square roots.
    """
    if rho.shape != sigma.shape:
        raise ValueError(f"dimension mismatch: {rho.shape} vs {sigma.shape}")
    vals, vecs = np.linalg.eigh(hermitize(rho))
    sqrt_rho = (vecs * np.sqrt(np.clip(vals, 0.0, None))) @ vecs.conj().T
    inner = hermitize(sqrt_rho @ sigma @ sqrt_rho)
    inner_vals = np.linalg.eigvalsh(inner)
    return float(np.sum(np.sqrt(np.clip(inner_vals, 0.0, None))) ** 2)


def haar_random_pure(n_qubits: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random pure state: a normalized vector of standard complex Gaussians."""
    if n_qubits < 1:
        raise ValueError("n_qubits must be >= 1")
    d = 2**n_qubits
    z = rng.normal(size=d) + 1j * rng.normal(size=d)
    return z / np.linalg.norm(z)


_PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
_PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def bloch_coordinates(rho: np.ndarray) -> np.ndarray:
    """Bloch vector (Tr rho X, Tr rho Y, Tr rho Z) of a single-qubit state."""
    if rho.shape != (2, 2):
        raise ValueError(f"bloch_coordinates requires a single-qubit state, got shape {rho.shape}")
    return np.array(
        [trace_product(rho, _PAULI_X), trace_product(rho, _PAULI_Y), trace_product(rho, _PAULI_Z)]
    )
