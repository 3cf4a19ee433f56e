"""
Closed-form entanglement trajectories for the three-qubit Ising chain

    H = J1 Z1 Z2 + J2 Z2 Z3 + h2 X2

started from the GHZ state, under free evolution and under the kicked
cycle with half period ``T``.

With ``b = J1 + J2``, ``omega = sqrt(b**2 + h2**2)`` and
``g(t) = cos(4 omega t) - 4 cos(2 omega t)`` the free pairwise values are

    C12 = C23 = sqrt(r1) / (2 omega**2),  r1 = 2b^4 + (1 - g) h^2 b^2 + 2h^4
    C13       = sqrt(r2) / (2 omega**2),  r2 = 2b^4 + (g + 7) h^2 b^2 + 2h^4

and ``CV = sqrt(2|r1| + |r2|) / (2 omega**2)``. Under control the time
argument of ``g`` is replaced by the local coordinate inside the active cycle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .entanglement import safe_sqrt
from .errors import ValidationError

SQRT_3_2 = math.sqrt(1.5)
SQRT_2_2 = math.sqrt(2) / 2

Pair = Literal["12", "13", "23"]


@dataclass(frozen=True)
class ClosedFormParams:
    J1: float
    J2: float
    h2: float

    def __post_init__(self):
        for name in ("J1", "J2", "h2"):
            if not np.isfinite(getattr(self, name)):
                raise ValidationError(f"{name} must be finite")
        if self.omega == 0:
            raise ValidationError("J1 + J2 = 0 and h2 = 0 gives omega = 0; formulas undefined")

    @property
    def b(self) -> float:
        return self.J1 + self.J2

    @property
    def omega(self) -> float:
        return math.hypot(self.b, self.h2)

    @property
    def free_period(self) -> float:
        """Period of ``g`` (and of every free closed-form quantity): pi / omega."""
        return math.pi / self.omega

    def max_times(self, k: int = 0) -> float:
        """k-th time ``k pi / omega`` where ``g = -3`` (free CV maximum)."""
        return k * math.pi / self.omega

    def min_times(self, k: int = 0) -> float:
        """k-th time ``(2k+1) pi / (2 omega)`` where ``g = 5`` (free CV minimum)."""
        return (2 * k + 1) * math.pi / (2 * self.omega)


def g(p: ClosedFormParams, t):
    """``cos(4 omega t) - 4 cos(2 omega t)``; ranges over [-3, 5]."""
    wt = p.omega * np.asarray(t, dtype=float)
    out = np.cos(4 * wt) - 4 * np.cos(2 * wt)
    return float(out) if out.ndim == 0 else out


def _radicands(p: ClosedFormParams, gv: float) -> tuple[float, float]:
    b2, h2 = p.b**2, p.h2**2
    r1 = 2 * b2 * b2 + (1 - gv) * h2 * b2 + 2 * h2 * h2
    r2 = 2 * b2 * b2 + (gv + 7) * h2 * b2 + 2 * h2 * h2
    return r1, r2


def cv_from_g(p: ClosedFormParams, gv: float) -> float:
    r1, r2 = _radicands(p, gv)
    return math.sqrt(2 * abs(r1) + abs(r2)) / (2 * p.omega**2)


def pairwise_from_g(p: ClosedFormParams, gv: float) -> tuple[float, float, float]:
    """``(C12, C13, C23)`` for a given value of ``g``."""
    r1, r2 = _radicands(p, gv)
    scale = 2 * p.omega**2
    # radicands are O(omega^4); rounding noise relative to that is tolerated
    tol_scale = max(1.0, p.omega**4)
    c12 = safe_sqrt(r1 / tol_scale, "C12 radicand") * math.sqrt(tol_scale) / scale
    c13 = safe_sqrt(r2 / tol_scale, "C13 radicand") * math.sqrt(tol_scale) / scale
    return c12, c13, c12


def _radicands_at(p: ClosedFormParams, t: float) -> tuple[float, float]:
    """Radicands at free time ``t``, with ``r1`` in cancellation-free form.

    ``5 - g = 4 (3 - cos 2wt) cos^2 wt`` gives
    ``r1 = 2(b^2 - h^2)^2 + 4 (3 - cos 2wt) cos^2(wt) h^2 b^2``, which keeps
    full relative precision where ``C12`` vanishes (``h = +-b``, ``g = 5``).
    """
    wt = p.omega * t
    b2, h2 = p.b**2, p.h2**2
    r1 = 2 * (b2 - h2) ** 2 + 4 * (3 - math.cos(2 * wt)) * math.cos(wt) ** 2 * h2 * b2
    _, r2 = _radicands(p, g(p, t))
    return r1, r2


def cv_free_closed(p: ClosedFormParams, t: float) -> float:
    r1, r2 = _radicands_at(p, t)
    return math.sqrt(2 * abs(r1) + abs(r2)) / (2 * p.omega**2)


def pairwise_free_closed(p: ClosedFormParams, t: float) -> tuple[float, float, float]:
    """``(C12, C13, C23)`` under free evolution at time ``t``."""
    r1, r2 = _radicands_at(p, t)
    c12 = math.sqrt(r1) / (2 * p.omega**2)
    return c12, math.sqrt(r2) / (2 * p.omega**2), c12


def cycle_position(T: float, t: float, offset: float = 0.0) -> tuple[int, float]:
    """``(n, local)``: active cycle number (1-based) and time inside it.

    Matches the dynamics bookkeeping: ``t - offset = 2(n-1)T + local`` with
    ``0 <= local < 2T``.
    """
    if T <= 0:
        raise ValidationError(f"half period must be positive, got {T!r}")
    tau = t - offset
    if tau < 0:
        raise ValidationError("time precedes the first cycle")
    n = math.floor(tau / (2 * T))
    local = tau - 2 * n * T
    if local >= 2 * T:
        n, local = n + 1, local - 2 * T
    return n + 1, max(local, 0.0)


def effective_time(T: float, t: float, offset: float = 0.0) -> float:
    """Free-evolution time with the same entanglement as the kicked state at ``t``.

    Inside cycle ``n`` the first half uses ``g1`` (argument ``t - 2(n-1)T``)
    and the second half ``g2`` (argument ``t - 2nT``, equivalently
    ``2nT - t`` since ``g`` is even). With a free-evolution offset ``t0``
    before the first cycle the state at local time ``s`` is the free state at
    ``t0 + s`` in the first half and, up to the local kick, at
    ``t0 + 2T - s`` in the second.
    """
    if t <= offset:
        return t
    _, local = cycle_position(T, t, offset)
    if local <= T:
        return offset + local
    return offset + 2 * T - local


def controlled_g(p: ClosedFormParams, T: float, t: float, offset: float = 0.0) -> float:
    """``g`` along the kicked trajectory (``g1`` or ``g2`` depending on the half cycle)."""
    return g(p, effective_time(T, t, offset))


def cv_controlled_closed(p: ClosedFormParams, T: float, t: float, offset: float = 0.0) -> float:
    return cv_free_closed(p, effective_time(T, t, offset))


def pairwise_controlled_closed(p: ClosedFormParams, T: float, t: float, offset: float = 0.0):
    return pairwise_free_closed(p, effective_time(T, t, offset))


def pairwise_closed(
    p: ClosedFormParams,
    pair: Pair | tuple[int, int],
    t: float,
    mode: Literal["free", "controlled"] = "free",
    T: float | None = None,
    offset: float = 0.0,
) -> float:
    """Closed-form ``C12``, ``C13`` or ``C23`` at time ``t``."""
    key = "".join(map(str, pair)) if isinstance(pair, tuple) else str(pair)
    if key not in ("12", "13", "23"):
        raise ValidationError(f"pair must be one of 12, 13, 23; got {pair!r}")
    if mode == "free":
        c12, c13, c23 = pairwise_free_closed(p, t)
    elif mode == "controlled":
        if T is None:
            raise ValidationError("controlled mode needs the half period T")
        c12, c13, c23 = pairwise_controlled_closed(p, T, t, offset)
    else:
        raise ValidationError(f"unknown mode {mode!r}")
    return {"12": c12, "13": c13, "23": c23}[key]


def cv_controlled_min(p: ClosedFormParams, T: float) -> float:
    """Smallest CV inside a kicked cycle, reached at the first kick.

    Uses ``x = cos(4 omega T) - 4 cos(2 omega T)``; valid while
    ``T <= pi / (2 omega)`` so that ``g`` is still rising on ``[0, T]``.
    """
    if T <= 0:
        raise ValidationError(f"half period must be positive, got {T!r}")
    x = math.cos(4 * p.omega * T) - 4 * math.cos(2 * p.omega * T)
    return cv_from_g(p, x)


def cv_free_min(p: ClosedFormParams) -> float:
    """``sqrt(6b^4 + 6h^4 + 4h^2 b^2) / (2 omega^2)``, at ``g = 5``."""
    b, h = p.b, p.h2
    return math.sqrt(6 * b**4 + 6 * h**4 + 4 * h**2 * b**2) / (2 * p.omega**2)


def c12_bounds(p: ClosedFormParams) -> tuple[float, float]:
    """Range of free ``C12 = C23``: ``[|h^2 - b^2| / (sqrt2 omega^2), sqrt2/2]``."""
    return abs(p.h2**2 - p.b**2) / (math.sqrt(2) * p.omega**2), SQRT_2_2


def c13_bounds(p: ClosedFormParams) -> tuple[float, float]:
    """Range of free ``C13``: ``[sqrt2/2, sqrt(2b^4 + 12h^2 b^2 + 2h^4) / (2 omega^2)]``.

    The upper end is the ``r2`` radicand at ``g = 5``.
    """
    b, h = p.b, p.h2
    return SQRT_2_2, math.sqrt(2 * b**4 + 12 * h**2 * b**2 + 2 * h**4) / (2 * p.omega**2)
