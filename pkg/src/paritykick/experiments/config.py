"""
TOML scenario files.

Schema (every key optional unless marked; unknown keys are errors)::

    name = "my-run"

    [model]                      # required
    kind = "ising_chain"         # or "heisenberg_dm"
    J = [2.0, 4.0]               # ising_chain: n-1 couplings
    h = [0.0, 6.0, 0.0]          # ising_chain: n fields
    n = 3                        # ising_chain: optional cross-check
    J1 = 1.0                     # heisenberg_dm
    J2 = 0.5                     # heisenberg_dm
    D = 0.2                      # heisenberg_dm

    [initial_state]
    kind = "ghz"                 # or "basis" / "custom"
    bits = "010"                 # basis
    amplitudes = [[1, 0], [0, 0], ...]   # custom: [re, im] pairs or reals

    [schedule]
    kick = "YZY"                 # Pauli text, "auto" or "none"
    half_period = 0.1
    offset = 0.0                 # or "pi/(2omega)"
    total_time = 3.0
    samples = 2000

    [outputs]
    cv = true
    pairwise = true
    closed_forms = true
    residuals = true
    compare_free = true
"""
from __future__ import annotations

import sys
from pathlib import Path
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from ..errors import ValidationError
from .models import HeisenbergDM, InitialState, IsingChain
from .scenario import OUTPUTS, Scenario

_TOP = {"name", "model", "initial_state", "schedule", "outputs"}
_MODEL_KEYS = {"ising_chain": {"kind", "J", "h", "n"}, "heisenberg_dm": {"kind", "J1", "J2", "D"}}
_STATE_KEYS = {"kind", "bits", "amplitudes"}
_SCHEDULE_KEYS = {"kick", "half_period", "offset", "total_time", "samples"}
_OUTPUT_KEYS = set(OUTPUTS) | {"compare_free"}


def _reject_unknown(section: str, data: dict, allowed: set) -> None:
    extra = set(data) - allowed
    if extra:
        raise ValidationError(f"unknown key(s) in [{section}]: {', '.join(sorted(extra))}")


def _table(data: dict, key: str) -> dict:
    val = data.get(key, {})
    if not isinstance(val, dict):
        raise ValidationError(f"{key} must be a table")
    return val


def _number(section: str, key: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{section}.{key} must be a number, got {value!r}")
    return float(value)


def _numbers(section: str, key: str, value: Any) -> list[float]:
    if not isinstance(value, list):
        raise ValidationError(f"{section}.{key} must be a list of numbers")
    return [_number(section, key, v) for v in value]


def _model(data: dict):
    kind = data.get("kind")
    if kind not in _MODEL_KEYS:
        raise ValidationError(f"model.kind must be one of {sorted(_MODEL_KEYS)}, got {kind!r}")
    _reject_unknown("model", data, _MODEL_KEYS[kind])
    if kind == "ising_chain":
        for key in ("J", "h"):
            if key not in data:
                raise ValidationError(f"model.{key} is required for ising_chain")
        model = IsingChain(tuple(_numbers("model", "J", data["J"])), tuple(_numbers("model", "h", data["h"])))
        if "n" in data and data["n"] != model.n:
            raise ValidationError(f"model.n = {data['n']} but h has {model.n} entries")
        return model
    for key in ("J1", "J2", "D"):
        if key not in data:
            raise ValidationError(f"model.{key} is required for heisenberg_dm")
    return HeisenbergDM(*(_number("model", k, data[k]) for k in ("J1", "J2", "D")))


def _state(data: dict) -> InitialState:
    _reject_unknown("initial_state", data, _STATE_KEYS)
    amps = data.get("amplitudes")
    if amps is not None:
        parsed = []
        for a in amps:
            if isinstance(a, list):
                if len(a) != 2:
                    raise ValidationError("initial_state.amplitudes entries must be numbers or [re, im]")
                parsed.append(complex(_number("initial_state", "amplitudes", a[0]),
                                      _number("initial_state", "amplitudes", a[1])))
            else:
                parsed.append(complex(_number("initial_state", "amplitudes", a)))
        amps = tuple(parsed)
    return InitialState(data.get("kind", "ghz"), data.get("bits"), amps)


def scenario_from_dict(data: dict) -> Scenario:
    _reject_unknown("top level", data, _TOP)
    if "model" not in data:
        raise ValidationError("[model] section is required")
    sched = _table(data, "schedule")
    _reject_unknown("schedule", sched, _SCHEDULE_KEYS)
    outs = _table(data, "outputs")
    _reject_unknown("outputs", outs, _OUTPUT_KEYS)
    for k, v in outs.items():
        if not isinstance(v, bool):
            raise ValidationError(f"outputs.{k} must be true or false")

    kwargs: dict[str, Any] = {}
    if "kick" in sched:
        if not isinstance(sched["kick"], str):
            raise ValidationError("schedule.kick must be a string")
        kwargs["kick"] = sched["kick"]
    if "half_period" in sched:
        kwargs["half_period"] = _number("schedule", "half_period", sched["half_period"])
    if "offset" in sched:
        off = sched["offset"]
        kwargs["offset"] = off if isinstance(off, str) else _number("schedule", "offset", off)
    if "total_time" in sched:
        kwargs["total_time"] = _number("schedule", "total_time", sched["total_time"])
    if "samples" in sched:
        if isinstance(sched["samples"], bool) or not isinstance(sched["samples"], int):
            raise ValidationError("schedule.samples must be an integer")
        kwargs["samples"] = sched["samples"]
    return Scenario(
        model=_model(_table(data, "model")),
        initial_state=_state(_table(data, "initial_state")),
        outputs=frozenset(k for k in OUTPUTS if outs.get(k, True)),
        compare_free=outs.get("compare_free", True),
        name=str(data.get("name", "custom")),
        **kwargs,
    )


def load_scenario(path: str | Path) -> Scenario:
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except tomllib.TOMLDecodeError as e:
        raise ValidationError(f"{path}: {e}") from None
    except OSError as e:
        raise ValidationError(f"cannot read {path}: {e.strerror}") from None
    return scenario_from_dict(data)
