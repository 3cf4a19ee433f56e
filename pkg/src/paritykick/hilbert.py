"""
Dense linear algebra on the 2**n dimensional qubit Hilbert space.

States are complex 1-D arrays of length ``2**n`` and operators are complex
``2**n x 2**n`` arrays; basis index bits read ``|b1 b2 ... bn>`` with site 1
most significant. Units have hbar = 1.
"""
from __future__ import annotations

import math
import warnings
from functools import reduce
from typing import NamedTuple, Sequence

import numpy as np

from .errors import CapacityError, DimensionError, ValidationError
from .pauli import MAX_QUBITS

#: Tolerance on unit norm and unitarity.
NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


class NormDriftWarning(RuntimeWarning):
    """A state left the unit sphere by more than NORM_TOL and was renormalized."""


class Spectrum(NamedTuple):
    """Eigen-decomposition ``H = V diag(eigenvalues) V^dagger``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def num_qubits(dim: int) -> int:
    n = dim.bit_length() - 1
    if dim < 1 or (1 << n) != dim:
        raise DimensionError(f"dimension {dim} is not a power of two")
    return n


def kron_all(ops: Sequence[np.ndarray]) -> np.ndarray:
    return reduce(np.kron, ops)


def embed(op: np.ndarray, site: int, n: int) -> np.ndarray:
    """Single-site ``op`` at 1-based ``site`` of an n-qubit register."""
    if not 1 <= site <= n:
        raise ValidationError(f"site {site} outside 1..{n}")
    return kron_all([op if s == site else I2 for s in range(1, n + 1)])


def _check_n(n: int) -> None:
    if n > MAX_QUBITS:
        raise CapacityError(f"{n} qubits exceeds the cap of {MAX_QUBITS}")


def ghz_state(n: int) -> np.ndarray:
    """(|0...0> + |1...1>) / sqrt(2)."""
    if n < 2:
        raise ValidationError(f"GHZ state needs n >= 2, got {n}")
    _check_n(n)
    psi = np.zeros(1 << n, dtype=complex)
    psi[0] = psi[-1] = 1 / math.sqrt(2)
    return psi


def basis_state(bits: str) -> np.ndarray:
    """Computational basis ket from a bit string, site 1 first (``"010"``)."""
    if not bits or any(b not in "01" for b in bits):
        raise ValidationError(f"invalid bit string {bits!r}")
    _check_n(len(bits))
    psi = np.zeros(1 << len(bits), dtype=complex)
    psi[int(bits, 2)] = 1.0
    return psi


def w_state(n: int) -> np.ndarray:
    if n < 2:
        raise ValidationError(f"W state needs n >= 2, got {n}")
    psi = np.zeros(1 << n, dtype=complex)
    psi[[1 << k for k in range(n)]] = 1 / math.sqrt(n)
    return psi


def normalize(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    nrm = np.linalg.norm(psi)
    if nrm == 0 or not np.isfinite(nrm):
        raise ValidationError("cannot normalize a zero or non-finite vector")
    return psi / nrm


def check_state(psi: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1:
        raise DimensionError("state must be a 1-D amplitude vector")
    num_qubits(psi.shape[0])
    if abs(np.linalg.norm(psi) - 1) > tol:
        raise ValidationError(f"state is not normalized (norm {np.linalg.norm(psi)!r})")
    return psi


def is_hermitian(h: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    scale = max(1.0, float(np.abs(h).max(initial=0.0)))
    return bool(np.abs(h - h.conj().T).max(initial=0.0) <= tol * scale)


def is_unitary(u: np.ndarray, tol: float = NORM_TOL) -> bool:
    return bool(np.abs(u.conj().T @ u - np.eye(u.shape[0])).max() <= tol)


def eigensolve(h: np.ndarray) -> Spectrum:
    """Full spectral decomposition of a Hermitian matrix (eigenvalues ascending)."""
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {h.shape}")
    if not is_hermitian(h):
        raise ValidationError("matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh(0.5 * (h + h.conj().T))
    return Spectrum(w, v)


def propagator(s: Spectrum, t: float) -> np.ndarray:
    """``exp(-i H t) = V diag(exp(-i lambda t)) V^dagger``."""
    if not np.isfinite(t):
        raise ValidationError(f"time must be finite, got {t!r}")
    v = s.eigenvectors
    return (v * np.exp(-1j * s.eigenvalues * t)) @ v.conj().T


def evolve(s: Spectrum, psi: np.ndarray, t: float) -> np.ndarray:
    """``exp(-i H t) psi`` without forming the propagator."""
    if not np.isfinite(t):
        raise ValidationError(f"time must be finite, got {t!r}")
    v = s.eigenvectors
    return v @ (np.exp(-1j * s.eigenvalues * t) * (v.conj().T @ psi))


def apply(op: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """``op @ psi``; renormalizes with a NormDriftWarning if the norm drifted."""
    op = np.asarray(op)
    psi = np.asarray(psi, dtype=complex)
    if op.ndim != 2 or op.shape[1] != psi.shape[0]:
        raise DimensionError(f"cannot apply {op.shape} operator to length-{psi.shape[0]} state")
    out = op @ psi
    nrm = np.linalg.norm(out)
    if abs(nrm - 1) > NORM_TOL:
        warnings.warn(f"norm drifted to {nrm!r}; renormalizing", NormDriftWarning, stacklevel=2)
        out = out / nrm
    return out


def density_matrix(psi: np.ndarray) -> np.ndarray:
    return np.outer(psi, psi.conj())
