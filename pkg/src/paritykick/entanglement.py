"""
Concurrence-vector entanglement of pure n-qubit states.

The pairwise component for sites ``i < j`` is

    C_ij = sqrt( <psi| M rho^{T_ij} M |psi> ),   rho = |psi><psi|,

with ``rho^{T_ij}`` transposed on both subsystems ``i`` and ``j`` and
``M = S_i S_j``, ``S = i sigma_y``. The norm of the vector of all pairwise
components is the concurrence vector ``CV``.
"""
from __future__ import annotations

import itertools
import math

import numpy as np

from .errors import ContractViolation, ValidationError
from .hilbert import SY, check_state, embed, num_qubits

#: Imaginary parts / negative radicands below this are rounding noise.
REAL_TOL = 1e-10

S = (1j * SY).real.astype(complex)


def so_generators(dim: int) -> list[np.ndarray]:
    """Generators of SO(dim) acting on one subsystem of local dimension ``dim``."""
    if dim == 2:
        return [S]
    raise NotImplementedError(f"only qubits (dim 2) are supported, got local dimension {dim}")


def safe_sqrt(value: complex | float, what: str = "radicand") -> float:
    """Square root of a value that should be real and non-negative up to REAL_TOL."""
    if abs(np.imag(value)) > REAL_TOL:
        raise ContractViolation(f"{what} has imaginary part {np.imag(value)!r}")
    v = float(np.real(value))
    if v < 0:
        if v < -REAL_TOL:
            raise ContractViolation(f"{what} is negative ({v!r})")
        return 0.0
    return math.sqrt(v)


def _check_pair(n: int, i: int, j: int) -> None:
    if i == j:
        raise ValidationError("pair needs two distinct sites")
    if not (1 <= i < j <= n):
        raise ValidationError(f"pair ({i}, {j}) must satisfy 1 <= i < j <= {n}")


def pairwise_concurrence(psi: np.ndarray, i: int, j: int) -> float:
    """Pairwise concurrence ``C_ij`` of a normalized pure state (sites 1-based).

    Expanding the sandwich with ``phi = M psi`` gives
    ``sum_{r,r'} |sum_{ab} psi[a,b,r] phi[a,b,r']|**2`` where ``a, b`` index
    sites ``i, j`` and ``r`` the rest, so the expectation is evaluated as a
    Frobenius norm without forming ``rho``.
    """
    psi = check_state(psi)
    n = num_qubits(psi.shape[0])
    _check_pair(n, i, j)
    t = np.moveaxis(psi.reshape((2,) * n), (i - 1, j - 1), (0, 1)).reshape(2, 2, -1)
    phi = np.einsum("ac,bd,cdr->abr", S, S, t)
    g = t.reshape(4, -1).T @ phi.reshape(4, -1)
    return safe_sqrt(np.vdot(g, g), f"C{i}{j} expectation")


def pairwise_concurrence_dense(psi: np.ndarray, i: int, j: int) -> float:
    """Same quantity built from the explicit density matrix and partial transpose."""
    psi = check_state(psi)
    n = num_qubits(psi.shape[0])
    _check_pair(n, i, j)
    rho = np.outer(psi, psi.conj()).reshape((2,) * (2 * n))
    axes = list(range(2 * n))
    for s in (i - 1, j - 1):
        axes[s], axes[n + s] = axes[n + s], axes[s]
    dim = 1 << n
    rho_t = rho.transpose(axes).reshape(dim, dim)
    m = embed(S, i, n) @ embed(S, j, n)
    value = psi.conj() @ m @ rho_t @ m @ psi
    return safe_sqrt(value, f"C{i}{j} expectation")


def site_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(1, n + 1), 2))


def pairwise_concurrences(psi: np.ndarray) -> dict[tuple[int, int], float]:
    """All ``C_ij`` for ``i < j``, keyed by 1-based site pair."""
    n = num_qubits(np.asarray(psi).shape[0])
    if n < 2:
        raise ValidationError("concurrence needs at least two qubits")
    return {(i, j): pairwise_concurrence(psi, i, j) for i, j in site_pairs(n)}


def concurrence_vector(psi: np.ndarray) -> float:
    """Norm of the concurrence vector, ``sqrt(sum_ij C_ij**2)``."""
    return math.sqrt(sum(c * c for c in pairwise_concurrences(psi).values()))
