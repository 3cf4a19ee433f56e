"""
Free and kick-controlled evolution.

A kicked schedule evolves freely for ``offset`` and then repeats the cycle

    free(T) -> A -> free(T) -> A

which is the identity whenever ``A`` anti-commutes with ``H``. Kicks are
instantaneous and right-continuous: the state reported at a kick instant
already includes the kick.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from . import hilbert
from .entanglement import pairwise_concurrences
from .errors import AnticommutationError, ContractViolation, DimensionError, ValidationError
from .pauli import PauliString, PauliSum, offending_term, to_matrix

#: Maximum entry-wise deviation of the cycle operator from identity.
CYCLE_TOL = 1e-10
#: Relative tolerance on the matrix-level anti-commutator.
ANTICOMM_TOL = 1e-12
#: Times closer than this (relative) to a kick instant are treated as on it.
SNAP_TOL = 1e-12

FREE = "free"
FIRST_HALF = "cycle_first_half"
SECOND_HALF = "cycle_second_half"


def _as_kick(kick: PauliString | str) -> PauliString:
    if isinstance(kick, str):
        kick = PauliString.from_label(kick)
    if kick.k != 0:
        raise ValidationError(f"kick {kick} must carry phase +1")
    if kick.is_identity:
        raise ValidationError("identity cannot serve as a kick")
    return kick


def check_kick(model: PauliSum, kick: PauliString | str) -> np.ndarray:
    """Verify ``A H = -A H`` termwise and at matrix level; return the matrix of ``A``."""
    kick = _as_kick(kick)
    if kick.n != model.n:
        raise DimensionError(f"kick acts on {kick.n} qubits, model on {model.n}")
    bad = offending_term(model, kick)
    if bad is not None:
        c, s = bad
        raise AnticommutationError(
            f"kick {kick.label} commutes with Hamiltonian term {c:g}*{s.label}", term=bad
        )
    a = to_matrix(kick)
    h = to_matrix(model)
    resid = np.linalg.norm(a @ h + h @ a, 2)
    if resid > ANTICOMM_TOL * max(1.0, np.linalg.norm(h, 2)):
        raise AnticommutationError(f"||AH + HA|| = {resid:.3e} for kick {kick.label}")
    return a


def cyclic_operator(model: PauliSum, kick: PauliString | str, T: float, spectrum=None) -> np.ndarray:
    """``A U(T) A U(T)``; raises ContractViolation unless it is the identity."""
    a = check_kick(model, kick)
    if spectrum is None:
        spectrum = hilbert.eigensolve(to_matrix(model))
    u = hilbert.propagator(spectrum, T)
    out = a @ u @ a @ u
    dev = np.abs(out - np.eye(out.shape[0])).max()
    if dev >= CYCLE_TOL:
        raise ContractViolation(f"cycle operator deviates from identity by {dev:.3e}")
    return out


@dataclass(frozen=True, eq=False)
class KickSchedule:
    """Evolution plan for ``model``.

    ``kick=None`` gives plain free evolution over ``[0, total_time]``.
    Otherwise the kicked cycle with half period ``half_period`` starts after
    ``offset`` of free evolution.
    """

    model: PauliSum
    total_time: float
    kick: PauliString | None = None
    half_period: float | None = None
    offset: float = 0.0
    samples: int = 2000

    def __post_init__(self):
        if not np.isfinite(self.total_time) or self.total_time < 0:
            raise ValidationError(f"total_time must be finite and >= 0, got {self.total_time!r}")
        if not np.isfinite(self.offset) or self.offset < 0:
            raise ValidationError(f"offset must be finite and >= 0, got {self.offset!r}")
        if self.total_time < self.offset:
            raise ValidationError("total_time must be at least the offset")
        if self.samples < 2:
            raise ValidationError("samples must be >= 2")
        if self.kick is not None:
            object.__setattr__(self, "kick", _as_kick(self.kick))
            if self.half_period is None or not np.isfinite(self.half_period) or self.half_period <= 0:
                raise ValidationError("a kicked schedule needs a positive half_period")
            check_kick(self.model, self.kick)

    @property
    def kicked(self) -> bool:
        return self.kick is not None

    @property
    def n(self) -> int:
        return self.model.n

    @cached_property
    def spectrum(self) -> hilbert.Spectrum:
        return hilbert.eigensolve(to_matrix(self.model))

    @cached_property
    def kick_matrix(self) -> np.ndarray | None:
        return None if self.kick is None else to_matrix(self.kick)

    def boundaries(self) -> np.ndarray:
        """Offset and every kick instant ``offset + kT`` up to ``total_time``."""
        if not self.kicked:
            return np.empty(0)
        T = self.half_period
        kmax = math.floor((self.total_time - self.offset) / T * (1 + SNAP_TOL) + SNAP_TOL)
        return self.offset + T * np.arange(kmax + 1)

    def locate(self, t: float) -> tuple[str, int | None, float]:
        """``(phase_label, cycle_index, local_time)`` for time ``t``.

        ``local_time`` is measured from the start of the active cycle, or
        from 0 for free evolution.
        """
        if not self.kicked:
            return FREE, None, t
        T = self.half_period
        tau = t - self.offset
        scale = SNAP_TOL * max(1.0, abs(t))
        if tau < -scale:
            return FREE, None, t
        k = round(tau / T)
        if abs(tau - k * T) <= scale:
            k = max(k, 0)
            n, half = divmod(k, 2)
            return (SECOND_HALF if half else FIRST_HALF), n + 1, half * T
        n = math.floor(tau / (2 * T))
        local = tau - 2 * n * T
        return (SECOND_HALF if local >= T else FIRST_HALF), n + 1, local

    def grid(self, extra_times: Iterable[float] = ()) -> np.ndarray:
        """Uniform grid over ``[0, total_time]`` merged with kick instants and ``extra_times``.

        Points within SNAP_TOL of an exact instant are replaced by it.
        """
        exact = [0.0, self.total_time, *self.boundaries()]
        exact += [float(x) for x in extra_times if 0 <= x <= self.total_time]
        exact = np.unique(np.asarray(exact, dtype=float))
        uniform = np.linspace(0.0, self.total_time, self.samples)
        tol = SNAP_TOL * max(1.0, self.total_time)
        idx = np.searchsorted(exact, uniform)
        lo = exact[np.clip(idx - 1, 0, None)]
        hi = exact[np.clip(idx, None, exact.size - 1)]
        uniform = uniform[np.minimum(np.abs(uniform - lo), np.abs(uniform - hi)) > tol]
        pts = np.sort(np.concatenate([exact, uniform]))
        keep = np.concatenate([[True], np.diff(pts) > tol])
        return pts[keep]


class _Evolver:
    """Caches the states at the offset and right after the first kick for one initial state."""

    def __init__(self, sched: KickSchedule, psi0: np.ndarray):
        psi0 = hilbert.check_state(psi0)
        if psi0.shape[0] != 1 << sched.n:
            raise DimensionError(f"state has {psi0.shape[0]} amplitudes, model needs {1 << sched.n}")
        self.sched = sched
        self.psi0 = psi0
        s = sched.spectrum
        self.at_offset = hilbert.evolve(s, psi0, sched.offset)
        if sched.kicked:
            self.after_kick = sched.kick_matrix @ hilbert.evolve(s, self.at_offset, sched.half_period)

    def state(self, t: float) -> tuple[np.ndarray, str, int | None]:
        sched = self.sched
        tol = SNAP_TOL * max(1.0, sched.total_time)
        if not (-tol <= t <= sched.total_time + tol):
            raise ValidationError(f"time {t!r} outside [0, {sched.total_time!r}]")
        label, n, local = sched.locate(t)
        s = sched.spectrum
        if label == FREE:
            psi = hilbert.evolve(s, self.psi0, t)
        elif label == FIRST_HALF:
            psi = hilbert.evolve(s, self.at_offset, local)
        else:
            psi = hilbert.evolve(s, self.after_kick, local - sched.half_period)
        nrm = np.linalg.norm(psi)
        if abs(nrm - 1) > hilbert.NORM_TOL:
            raise ContractViolation(f"norm drifted to {nrm!r} at t={t!r}")
        return psi, label, n


def state_at(sched: KickSchedule, psi0: np.ndarray, t: float) -> np.ndarray:
    """State at time ``t`` under ``sched`` starting from ``psi0``.

    Completed cycles are skipped outright: each returns the state exactly to
    its value at the offset.
    """
    return _Evolver(sched, psi0).state(t)[0]


@dataclass(frozen=True)
class TrajectoryRow:
    t: float
    cv: float
    c12: float | None
    c13: float | None
    c23: float | None
    phase: str
    cycle: int | None
    cv_closed: float | None = None
    c12_closed: float | None = None
    c13_closed: float | None = None
    c23_closed: float | None = None
    pairwise: Mapping[tuple[int, int], float] = field(default_factory=dict, repr=False)


Hook = Callable[[float, np.ndarray, TrajectoryRow], Mapping[str, float | None]]


def measure(t: float, psi: np.ndarray, phase: str = FREE, cycle: int | None = None) -> TrajectoryRow:
    pw = pairwise_concurrences(psi)
    cv = math.sqrt(sum(c * c for c in pw.values()))
    return TrajectoryRow(
        t=float(t),
        cv=cv,
        c12=pw.get((1, 2)),
        c13=pw.get((1, 3)),
        c23=pw.get((2, 3)),
        phase=phase,
        cycle=cycle,
        pairwise=pw,
    )


def sample_trajectory(
    sched: KickSchedule,
    psi0: np.ndarray,
    hooks: Sequence[Hook] = (),
    extra_times: Iterable[float] = (),
) -> list[TrajectoryRow]:
    """Measure concurrences on ``sched.grid(extra_times)``.

    Each hook receives ``(t, state, row)`` and returns column updates, e.g.
    closed-form reference values.
    """
    ev = _Evolver(sched, psi0)
    rows = []
    for t in sched.grid(extra_times):
        psi, label, n = ev.state(t)
        row = measure(t, psi, label, n)
        for hook in hooks:
            updates = hook(t, psi, row)
            if updates:
                row = replace(row, **updates)
        rows.append(row)
    return rows
