"""Depolarizing channels and forward trajectory generation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .schedules import NoiseSchedule
from .states import hermitize, purity
from .validation import n_qubits_from_dim

__all__ = ["depolarize", "pswap_stochastic", "ForwardTrajectory", "forward_trajectory"]


def _check_strength(q: float) -> float:
    q = float(q)
    if not 0.0 < q <= 1.0:
        raise ValueError(f"depolarizing strength must lie in (0, 1], got {q}")
    return q


def depolarize(rho: np.ndarray, q: float) -> np.ndarray:
    """Exact depolarizing channel (1-q) rho + q I/d."""
    q = _check_strength(q)
    d = rho.shape[0]
    out = (1.0 - q) * rho + q * np.eye(d, dtype=complex) / d
    return hermitize(out)


def pswap_stochastic(rho: np.ndarray, q: float, rng: np.random.Generator) -> np.ndarray:
    """One-shot realization of the channel via a probabilistic swap.

    Swaps the register with a fresh maximally mixed one with probability q,
    otherwise leaves it untouched.  Reduced to the data register this equals
    the exact channel in expectation; generation uses the exact channel, this
    realization exists to demonstrate the equivalence.
    """
    q = _check_strength(q)
    d = rho.shape[0]
    if rng.random() < q:
        return np.eye(d, dtype=complex) / d
    return rho.copy()


@dataclass
class ForwardTrajectory:
    """Ensembles {rho_0}..{rho_T} produced by composing the per-step channels."""

    ensembles: list[np.ndarray]  # T+1 arrays of shape (n_samples, d, d)
    schedule: NoiseSchedule

    def mean_purities(self) -> np.ndarray:
        return np.array([np.mean([purity(r) for r in ens]) for ens in self.ensembles])


def forward_trajectory(
    states: np.ndarray,
    schedule: NoiseSchedule,
    *,
    rng: np.random.Generator | None = None,
    q_jitter: float = 0.0,
) -> ForwardTrajectory:
    """Apply the scheduled channels step by step to every ensemble member.

    ``q_jitter`` optionally randomizes the per-sample strength uniformly in
    ``q_t ± q_jitter`` (clipped to (0, 1], never applied to the final step, so
    the trajectory still ends exactly maximally mixed).  The default of zero
    shares one q_t across the ensemble.
    """
    states = np.asarray(states, dtype=complex)
    if states.ndim != 3 or states.shape[1] != states.shape[2]:
        raise ValueError(f"expected states of shape (n_samples, d, d), got {states.shape}")
    n_qubits_from_dim(states.shape[1])
    if q_jitter and rng is None:
        raise ValueError("q_jitter requires an explicit rng")

    ensembles = [states.copy()]
    current = states
    for t, q in enumerate(schedule.q, start=1):
        if q_jitter and t < schedule.steps:
            qs = rng.uniform(
                max(np.nextafter(0.0, 1.0), q - q_jitter),
                min(1.0, q + q_jitter),
                size=current.shape[0],
            )
            current = np.array([depolarize(r, qi) for r, qi in zip(current, qs)])
        else:
            current = np.array([depolarize(r, q) for r in current])
        ensembles.append(current)
    return ForwardTrajectory(ensembles=ensembles, schedule=schedule)
