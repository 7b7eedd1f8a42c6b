"""Noise schedules for the depolarizing forward process.

A schedule is the sequence ``q_1..q_T`` of depolarizing strengths.  Two
families are provided:

* linear: ``q_t = t/T`` (so the final step fully mixes);
* cosine-exponent: ``q_t = (1 - abar_t/abar_{t-1})**k`` where
  ``abar_t = f(t)/f(0)`` and ``f(t) = cos(((t/T + eps)/(1 + eps)) * pi/2)**2``.
  ``k = 1`` gives the familiar cosine schedule, larger ``k`` slows the early
  purity loss.  ``f(T) = 0``, so ``q_T = 1`` in every case.

The cumulative mixing weight ``a_t = prod_{s<=t}(1 - q_s)`` determines the
state after ``t`` steps in closed form, ``rho_t = a_t rho_0 + (1 - a_t) I/d``,
which gives the purity of any trajectory point without simulating matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "DEFAULT_COSINE_OFFSET",
    "NoiseSchedule",
    "linear_schedule",
    "cosine_exponent_schedule",
    "make_schedule",
    "cumulative_mixing",
    "mixing_profile",
    "closed_form_purity",
    "schedule_table",
]

DEFAULT_COSINE_OFFSET = 0.008


@dataclass(frozen=True)
class NoiseSchedule:
    """Schedule kind plus the derived per-step depolarizing strengths."""

    kind: str
    steps: int
    q: np.ndarray
    exponent: int | None = None
    offset: float | None = None

    def __post_init__(self):
        q = np.asarray(self.q, dtype=float)
        if self.steps < 1 or q.shape != (self.steps,):
            raise ValueError("schedule must provide one q value per step")
        if np.any(q <= 0.0) or np.any(q > 1.0):
            raise ValueError("each q_t must lie in (0, 1]")
        object.__setattr__(self, "q", q)


def linear_schedule(steps: int) -> NoiseSchedule:
    """q_t = t/T for t = 1..T."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    q = np.arange(1, steps + 1, dtype=float) / steps
    return NoiseSchedule(kind="linear", steps=steps, q=q)


def cosine_exponent_schedule(
    steps: int, exponent: int = 1, offset: float = DEFAULT_COSINE_OFFSET
) -> NoiseSchedule:
    """Cosine schedule raised to an integer exponent."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if exponent < 1:
        raise ValueError("exponent must be >= 1")
    if offset <= 0:
        raise ValueError("offset must be positive")

    def f(t: float) -> float:
        return np.cos(((t / steps + offset) / (1.0 + offset)) * np.pi / 2.0) ** 2

    abar = np.array([f(t) / f(0) for t in range(steps + 1)])
    q = (1.0 - abar[1:] / abar[:-1]) ** exponent
    kind = "cosine" if exponent == 1 else f"cosine^{exponent}"
    return NoiseSchedule(kind=kind, steps=steps, q=q, exponent=exponent, offset=offset)


_SCHEDULE_NAMES = {
    "linear": lambda steps, offset: linear_schedule(steps),
    "cosine": lambda steps, offset: cosine_exponent_schedule(steps, 1, offset),
    "cosine-square": lambda steps, offset: cosine_exponent_schedule(steps, 2, offset),
}


def make_schedule(name: str, steps: int, offset: float = DEFAULT_COSINE_OFFSET) -> NoiseSchedule:
    """Build a schedule from a config name: linear, cosine, or cosine-square."""
    try:
        factory = _SCHEDULE_NAMES[name]
    except KeyError:
        raise ValueError(
            f"unknown schedule {name!r}; expected one of {sorted(_SCHEDULE_NAMES)}"
        ) from None
    return factory(steps, offset)


def cumulative_mixing(schedule: NoiseSchedule, t: int) -> float:
    """a_t = prod_{s=1..t}(1 - q_s); a_0 = 1."""
    if t < 0 or t > schedule.steps:
        raise ValueError(f"step {t} out of range 0..{schedule.steps}")
    return float(np.prod(1.0 - schedule.q[:t])) if t else 1.0


def mixing_profile(schedule: NoiseSchedule) -> np.ndarray:
    """All cumulative mixing weights a_0..a_T as one array."""
    return np.concatenate([[1.0], np.cumprod(1.0 - schedule.q)])


def closed_form_purity(p0: float, a: float, dim: int) -> float:
    """Purity of ``a*rho_0 + (1-a)*I/d`` given the initial purity ``p0``.

    Expanding Tr(rho_t^2) gives ``a^2 p0 + 2a(1-a)/d + (1-a)^2/d``.
    """
    if not 1.0 / dim - 1e-12 <= p0 <= 1.0 + 1e-12:
        raise ValueError(f"initial purity {p0} outside [1/d, 1]")
    if not -1e-12 <= a <= 1.0 + 1e-12:
        raise ValueError(f"mixing weight {a} outside [0, 1]")
    return a * a * p0 + 2.0 * a * (1.0 - a) / dim + (1.0 - a) ** 2 / dim


def schedule_table(schedule: NoiseSchedule, dim: int, p0: float = 1.0) -> list[tuple]:
    """Rows (t, q_t, a_t, closed-form purity) for dumping; q is 0 at t = 0."""
    a = mixing_profile(schedule)
    rows = [(0, 0.0, 1.0, closed_form_purity(p0, 1.0, dim))]
    for t in range(1, schedule.steps + 1):
        rows.append((t, float(schedule.q[t - 1]), float(a[t]), closed_form_purity(p0, a[t], dim)))
    return rows
