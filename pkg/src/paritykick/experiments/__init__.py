"""Scenario registry, figure presets, sweeps and file output."""
from .models import HeisenbergDM, InitialState, IsingChain, three_site_ising
from .scenario import (
    PRESETS,
    RunReport,
    Scenario,
    SweepRow,
    get_preset,
    list_presets,
    run_scenario,
    sweep_min_cv,
)

__all__ = [
    "HeisenbergDM",
    "InitialState",
    "IsingChain",
    "PRESETS",
    "RunReport",
    "Scenario",
    "SweepRow",
    "get_preset",
    "list_presets",
    "run_scenario",
    "sweep_min_cv",
    "three_site_ising",
]
