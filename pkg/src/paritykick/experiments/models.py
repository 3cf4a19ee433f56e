"""Model registry: Hamiltonians as Pauli sums plus the initial-state specs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .. import hilbert
from ..closed_form import ClosedFormParams
from ..errors import ValidationError
from ..pauli import PauliString, PauliSum


@dataclass(frozen=True)
class IsingChain:
    """``sum_i J_i Z_i Z_{i+1} + sum_i h_i X_i`` on an open chain of ``len(h)`` sites."""

    J: tuple[float, ...]
    h: tuple[float, ...]

    kind = "ising_chain"

    def __post_init__(self):
        object.__setattr__(self, "J", tuple(float(x) for x in self.J))
        object.__setattr__(self, "h", tuple(float(x) for x in self.h))
        n = len(self.h)
        if n < 2:
            raise ValidationError("ising_chain needs at least 2 sites (len(h) >= 2)")
        if len(self.J) != n - 1:
            raise ValidationError(f"ising_chain with n={n} needs {n - 1} couplings, got {len(self.J)}")
        if not all(np.isfinite(self.J + self.h)):
            raise ValidationError("ising_chain parameters must be finite")

    @property
    def n(self) -> int:
        return len(self.h)

    def hamiltonian(self) -> PauliSum:
        n = self.n
        terms = []
        for i, j in enumerate(self.J, start=1):
            zz = PauliString.single(n, i, "Z") * PauliString.single(n, i + 1, "Z")
            terms.append((j, zz))
        for i, hx in enumerate(self.h, start=1):
            terms.append((hx, PauliString.single(n, i, "X")))
        if all(c == 0 for c, _ in terms):
            raise ValidationError("all couplings and fields are zero")
        return PauliSum(terms, n=n)

    def closed_form_params(self) -> ClosedFormParams | None:
        """Parameters for the three-site chain with field on the middle site only."""
        if self.n != 3 or self.h[0] != 0 or self.h[2] != 0:
            return None
        if self.J[0] + self.J[1] == 0 and self.h[1] == 0:
            return None
        return ClosedFormParams(self.J[0], self.J[1], self.h[1])

    def describe(self) -> dict:
        return {"kind": self.kind, "n": self.n, "J": list(self.J), "h": list(self.h)}


@dataclass(frozen=True)
class HeisenbergDM:
    """``J1 XX + J2 YY + D (XY - YX)`` on two qubits."""

    J1: float
    J2: float
    D: float

    kind = "heisenberg_dm"
    n = 2

    def __post_init__(self):
        if not all(np.isfinite([self.J1, self.J2, self.D])):
            raise ValidationError("heisenberg_dm parameters must be finite")
        if self.J1 == self.J2 == self.D == 0:
            raise ValidationError("all couplings are zero")

    def hamiltonian(self) -> PauliSum:
        return PauliSum([(self.J1, "XX"), (self.J2, "YY"), (self.D, "XY"), (-self.D, "YX")])

    def closed_form_params(self) -> None:
        return None

    def describe(self) -> dict:
        return {"kind": self.kind, "J1": self.J1, "J2": self.J2, "D": self.D}


Model = Union[IsingChain, HeisenbergDM]


def three_site_ising(J1: float, J2: float, h2: float) -> IsingChain:
    return IsingChain((J1, J2), (0.0, h2, 0.0))


@dataclass(frozen=True)
class InitialState:
    """``kind`` is ``ghz``, ``basis`` (with ``bits``) or ``custom`` (with ``amplitudes``)."""

    kind: str = "ghz"
    bits: str | None = None
    amplitudes: tuple[complex, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("ghz", "basis", "custom"):
            raise ValidationError(f"initial_state.kind must be ghz, basis or custom; got {self.kind!r}")
        if self.kind == "basis" and not self.bits:
            raise ValidationError("initial_state.kind = basis needs 'bits'")
        if self.kind == "custom":
            if not self.amplitudes:
                raise ValidationError("initial_state.kind = custom needs 'amplitudes'")
            object.__setattr__(self, "amplitudes", tuple(complex(a) for a in self.amplitudes))

    def vector(self, n: int) -> np.ndarray:
        if self.kind == "ghz":
            return hilbert.ghz_state(n)
        if self.kind == "basis":
            if len(self.bits) != n:
                raise ValidationError(f"bits {self.bits!r} do not match {n} qubits")
            return hilbert.basis_state(self.bits)
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape[0] != 1 << n:
            raise ValidationError(f"custom state needs {1 << n} amplitudes, got {amps.shape[0]}")
        return hilbert.normalize(amps)

    def describe(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == "basis":
            out["bits"] = self.bits
        if self.kind == "custom":
            out["amplitudes"] = [[a.real, a.imag] for a in self.amplitudes]
        return out


def parse_terms(specs: Sequence[str]) -> PauliSum:
    """Pauli sum from ``"COEF*LABEL"`` strings, e.g. ``["2*ZZI", "4*IZZ", "6*IXI"]``."""
    terms = []
    for spec in specs:
        coeff, sep, label = spec.partition("*")
        if not sep:
            coeff, label = "1", spec
        try:
            c = float(coeff)
        except ValueError:
            raise ValidationError(f"bad coefficient in term {spec!r}") from None
        terms.append((c, PauliString.from_label(label)))
    if not terms:
        raise ValidationError("no terms given")
    return PauliSum(terms)
