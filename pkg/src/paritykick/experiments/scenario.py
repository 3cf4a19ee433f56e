"""Scenarios, figure presets, runs and half-period sweeps."""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .. import closed_form as cf
from ..dynamics import FREE, KickSchedule, TrajectoryRow, cyclic_operator, sample_trajectory
from ..errors import ValidationError
from ..pauli import PauliString, anticommutant
from .models import InitialState, Model, three_site_ising

OUTPUTS = frozenset({"cv", "pairwise", "closed_forms", "residuals"})
#: Offset token for "free evolution up to the first g = 5 instant".
QUARTER_PERIOD = "pi/(2omega)"

COLUMNS = ("cv", "c12", "c13", "c23")


@dataclass(frozen=True)
class Scenario:
    """Everything needed to reproduce one run.

    ``kick`` is Pauli text, ``"auto"`` (first element of the sorted
    anticommutant) or ``"none"`` (free evolution only). ``offset`` is a time
    or the token ``"pi/(2omega)"``, which needs the closed-form model.
    """

    model: Model
    initial_state: InitialState = InitialState()
    kick: str = "auto"
    half_period: float | None = None
    offset: float | str = 0.0
    total_time: float = 3.0
    samples: int = 2000
    outputs: frozenset[str] = OUTPUTS
    compare_free: bool = True
    name: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "outputs", frozenset(self.outputs))
        unknown = self.outputs - OUTPUTS
        if unknown:
            raise ValidationError(f"unknown outputs {sorted(unknown)}; valid: {sorted(OUTPUTS)}")
        if isinstance(self.offset, str) and self.offset != QUARTER_PERIOD:
            raise ValidationError(f"offset must be a number or {QUARTER_PERIOD!r}, got {self.offset!r}")
        if self.kick != "none" and (self.half_period is None or not self.half_period > 0):
            raise ValidationError("schedule.half_period must be positive for a kicked run")
        if not isinstance(self.samples, int) or self.samples < 2:
            raise ValidationError("schedule.samples must be an integer >= 2")

    @property
    def hamiltonian(self):
        return self.model.hamiltonian()

    @property
    def closed_form_params(self) -> cf.ClosedFormParams | None:
        """Set only for the three-site chain (field on site 2) started in GHZ."""
        if self.initial_state.kind != "ghz":
            return None
        return self.model.closed_form_params()

    def resolved_kick(self) -> PauliString | None:
        if self.kick == "none":
            return None
        if self.kick == "auto":
            found = anticommutant(self.hamiltonian)
            if not found:
                raise ValidationError("model has no anti-commuting Pauli kick; 'auto' cannot resolve")
            return found[0]
        kick = PauliString.from_label(self.kick)
        if kick.n != self.model.n:
            raise ValidationError(f"kick {self.kick!r} has {kick.n} sites, model has {self.model.n}")
        return kick

    def resolved_offset(self) -> float:
        if self.offset == QUARTER_PERIOD:
            p = self.closed_form_params
            if p is None:
                raise ValidationError(f"offset {QUARTER_PERIOD!r} needs the three-site closed-form model")
            return p.min_times(0)
        return float(self.offset)

    def describe(self) -> dict:
        return {
            "name": self.name,
            "model": self.model.describe(),
            "initial_state": self.initial_state.describe(),
            "schedule": {
                "kick": self.kick,
                "half_period": self.half_period,
                "offset": self.offset,
                "total_time": self.total_time,
                "samples": self.samples,
            },
            "outputs": sorted(self.outputs),
            "compare_free": self.compare_free,
        }


@dataclass
class RunReport:
    scenario: Scenario
    kick: str | None
    offset: float
    rows: list[TrajectoryRow]
    free_rows: list[TrajectoryRow] | None = None
    summary: dict = field(default_factory=dict)

    @property
    def closed_forms(self) -> bool:
        return self.scenario.closed_form_params is not None


def _closed_hook(p: cf.ClosedFormParams, sched: KickSchedule):
    def hook(t, psi, row):
        tau = cf.effective_time(sched.half_period, t, sched.offset) if sched.kicked else t
        c12, c13, c23 = cf.pairwise_free_closed(p, tau)
        return {"cv_closed": cf.cv_free_closed(p, tau), "c12_closed": c12, "c13_closed": c13, "c23_closed": c23}

    return hook


def extremum_times(p: cf.ClosedFormParams, total_time: float, offset: float = 0.0) -> list[float]:
    """Instants ``k pi / (2 omega)`` (free CV extrema) in ``[0, total_time]``, plus the same shifted by ``offset``."""
    step = math.pi / (2 * p.omega)
    ks = np.arange(math.floor(total_time / step) + 1)
    out = list(ks * step)
    if offset:
        out += [offset + x for x in out if offset + x <= total_time]
    return out


def summarize(rows: Sequence[TrajectoryRow], residuals: bool) -> dict:
    t = np.array([r.t for r in rows])
    out: dict = {}
    for col in COLUMNS:
        vals = [getattr(r, col) for r in rows]
        if any(v is None for v in vals):
            continue
        v = np.array(vals)
        i_min, i_max = int(np.argmin(v)), int(np.argmax(v))
        out[col] = {"min": float(v[i_min]), "t_min": float(t[i_min]), "max": float(v[i_max]), "t_max": float(t[i_max])}
    if residuals and rows and rows[0].cv_closed is not None:
        res = {}
        for col in COLUMNS:
            num = np.array([getattr(r, col) for r in rows], dtype=float)
            ref = np.array([getattr(r, col + "_closed") for r in rows], dtype=float)
            res[col] = float(np.abs(num - ref).max())
        out["max_residual"] = res
    return out


def _trajectory(s: Scenario, kick, offset, psi0, p) -> list[TrajectoryRow]:
    sched = KickSchedule(
        s.hamiltonian,
        total_time=s.total_time,
        kick=kick,
        half_period=s.half_period if kick is not None else None,
        offset=offset if kick is not None else 0.0,
        samples=s.samples,
    )
    if kick is not None:
        cyclic_operator(sched.model, kick, sched.half_period, sched.spectrum)
    hooks, extra = (), ()
    if p is not None:
        hooks = (_closed_hook(p, sched),)
        extra = extremum_times(p, s.total_time, sched.offset)
    return sample_trajectory(sched, psi0, hooks, extra)


def run_scenario(s: Scenario) -> RunReport:
    """Run the scenario's schedule (and the free reference if requested).

    Raises ValidationError on bad input and ContractViolation if the kick
    fails anti-commutation or the cycle operator is not the identity.
    """
    if s.total_time < 0:
        raise ValidationError("schedule.total_time must be >= 0")
    kick = s.resolved_kick()
    offset = s.resolved_offset() if kick is not None else 0.0
    if offset > s.total_time:
        raise ValidationError("schedule.total_time must be at least the offset")
    p = s.closed_form_params
    psi0 = s.initial_state.vector(s.model.n)
    rows = _trajectory(s, kick, offset, psi0, p)
    free_rows = None
    if kick is not None and s.compare_free:
        free_rows = _trajectory(s, None, 0.0, psi0, p)
    residuals = "residuals" in s.outputs
    summary = {"controlled" if kick is not None else "free": summarize(rows, residuals)}
    if free_rows is not None:
        summary["free"] = summarize(free_rows, residuals)
    return RunReport(s, kick.label if kick is not None else None, offset, rows, free_rows, summary)


def _fig(name, J1, J2, h2, T, total=None, offset=0.0) -> Scenario:
    model = three_site_ising(J1, J2, h2)
    if total is None:
        total = 3 * 2 * math.pi / model.closed_form_params().omega
    return Scenario(model, InitialState("ghz"), "YZY", T, offset, total, 2000, name=name)


PRESETS: dict[str, Scenario] = {
    "fig1": _fig("fig1", 2, 4, 6, 1 / 10, total=3.0),
    "fig2": _fig("fig2", 2, 4, 6, 1 / 15, total=3.0),
    "fig3a": _fig("fig3a", 2, 1, 5, 1 / 8),
    "fig3b": _fig("fig3b", 2, 1, 3, 1 / 8),
    "fig4": _fig("fig4", 2, 1, 3, 1 / 30, offset=QUARTER_PERIOD),
}


def list_presets() -> dict[str, dict]:
    return {name: s.describe() for name, s in PRESETS.items()}


def get_preset(name: str) -> Scenario:
    try:
        return PRESETS[name]
    except KeyError:
        raise ValidationError(f"unknown preset {name!r}; valid presets: {', '.join(PRESETS)}") from None


@dataclass(frozen=True)
class SweepRow:
    T: float
    achieved_min: float
    predicted_min: float | None


def sweep_min_cv(base: Scenario, T_values: Sequence[float], cycles: int = 2, samples: int = 200) -> list[SweepRow]:
    """Smallest CV reached under kicking for each half period in ``T_values``.

    Each run covers ``cycles`` full cycles after the offset; the prediction
    is the closed-form first-kick value when the model and state admit it
    and there is no offset.
    """
    if len(T_values) < 1:
        raise ValidationError("sweep needs at least one T value")
    if base.kick == "none":
        raise ValidationError("sweep needs a kicked scenario")
    p = base.closed_form_params
    out = []
    for T in T_values:
        T = float(T)
        s0 = replace(base, half_period=T, compare_free=False)
        offset = s0.resolved_offset()
        s = replace(s0, total_time=offset + 2 * cycles * T, samples=samples)
        report = run_scenario(s)
        achieved = min(r.cv for r in report.rows if r.phase != FREE)
        predicted = cf.cv_controlled_min(p, T) if p is not None and offset == 0 else None
        out.append(SweepRow(T, achieved, predicted))
    return out
