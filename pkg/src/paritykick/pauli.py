"""
Pauli-group algebra over n qubits in binary symplectic form.

A string is stored as two n-bit masks plus a phase ``i**k``. Sites are
numbered from 1 (leftmost tensor factor) in every public interface; inside
the masks, site 1 sits at the most significant bit so that the mask bits line
up with computational-basis indices ``|b1 b2 ... bn>``.

Single-site encoding (x, z)::

    (0, 0) -> I    (1, 0) -> X    (0, 1) -> Z    (1, 1) -> Y = i X Z
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import CapacityError, DimensionError, ValidationError

#: Largest qubit count accepted by enumeration and dense conversion.
MAX_QUBITS = 12

_LETTERS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_CODES = {v: k for k, v in _LETTERS.items()}
_PHASES = (1, 1j, -1, -1j)


def _popcount(v: int) -> int:
    return bin(v).count("1")


@dataclass(frozen=True, order=False)
class PauliString:
    """n-qubit Pauli operator ``i**k * P_1 (x) ... (x) P_n``.

    Parameters
    ----------
    n : int
        Number of qubits.
    x_mask, z_mask : int
        Symplectic bits; site ``s`` (1-based) is bit ``n - s``.
    k : int
        Phase exponent, the operator carries the factor ``i**k``.
    """

    n: int
    x_mask: int
    z_mask: int
    k: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"qubit count must be positive, got {self.n}")
        full = (1 << self.n) - 1
        if not (0 <= self.x_mask <= full and 0 <= self.z_mask <= full):
            raise ValidationError("mask does not fit in n bits")
        object.__setattr__(self, "k", self.k % 4)

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Parse text such as ``"YZY"`` or ``"-iXIZ"`` (site 1 first)."""
        s = label.strip()
        k = 0
        if s.startswith("+"):
            s = s[1:]
        elif s.startswith("-"):
            k = 2
            s = s[1:]
        if s.startswith("i"):
            k += 1
            s = s[1:]
        s = s.upper()
        if not s or any(c not in "IXYZ" for c in s):
            raise ValidationError(f"invalid Pauli text {label!r}")
        x = z = 0
        for c in s:
            xb, zb = _CODES[c]
            x = (x << 1) | xb
            z = (z << 1) | zb
        return cls(len(s), x, z, k)

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0, 0)

    @classmethod
    def single(cls, n: int, site: int, letter: str) -> "PauliString":
        """Operator ``letter`` on ``site`` (1-based), identity elsewhere."""
        if not 1 <= site <= n:
            raise ValidationError(f"site {site} outside 1..{n}")
        xb, zb = _CODES[letter.upper()]
        shift = n - site
        return cls(n, xb << shift, zb << shift)

    @property
    def phase(self) -> complex:
        return _PHASES[self.k]

    @property
    def label(self) -> str:
        """Letters only, site 1 first; the phase is dropped."""
        out = []
        for s in range(self.n - 1, -1, -1):
            out.append(_LETTERS[(self.x_mask >> s) & 1, (self.z_mask >> s) & 1])
        return "".join(out)

    def letter(self, site: int) -> str:
        shift = self.n - site
        return _LETTERS[(self.x_mask >> shift) & 1, (self.z_mask >> shift) & 1]

    @property
    def is_hermitian(self) -> bool:
        return self.k in (0, 2)

    @property
    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    @property
    def weight(self) -> int:
        return _popcount(self.x_mask | self.z_mask)

    def support(self) -> tuple[int, ...]:
        """1-based sites carrying a non-identity factor."""
        m = self.x_mask | self.z_mask
        return tuple(s for s in range(1, self.n + 1) if (m >> (self.n - s)) & 1)

    def with_phase(self, k: int = 0) -> "PauliString":
        return PauliString(self.n, self.x_mask, self.z_mask, k)

    def sort_key(self) -> tuple[int, int]:
        return (self.x_mask, self.z_mask)

    def __mul__(self, other: "PauliString") -> "PauliString":
        return multiply(self, other)

    def __neg__(self) -> "PauliString":
        return PauliString(self.n, self.x_mask, self.z_mask, self.k + 2)

    def __str__(self) -> str:
        prefix = ("", "i", "-", "-i")[self.k]
        return prefix + self.label

    def __repr__(self) -> str:
        return f"PauliString({str(self)!r})"


def _check_sizes(p: PauliString, q: PauliString) -> None:
    if p.n != q.n:
        raise DimensionError(f"qubit counts differ: {p.n} vs {q.n}")


def multiply(p: PauliString, q: PauliString) -> PauliString:
    """Group product ``p * q`` with exact phase tracking.

    Uses ``sigma(x, z) = i**|x&z| X^x Z^z`` and ``Z^z X^x = (-1)**|z&x| X^x Z^z``.
    """
    _check_sizes(p, q)
    x = p.x_mask ^ q.x_mask
    z = p.z_mask ^ q.z_mask
    k = (
        p.k
        + q.k
        + _popcount(p.x_mask & p.z_mask)
        + _popcount(q.x_mask & q.z_mask)
        + 2 * _popcount(p.z_mask & q.x_mask)
        - _popcount(x & z)
    )
    return PauliString(p.n, x, z, k)


def symplectic_product(p: PauliString, q: PauliString) -> int:
    """``x_p . z_q + z_p . x_q`` mod 2."""
    _check_sizes(p, q)
    return (_popcount(p.x_mask & q.z_mask) + _popcount(p.z_mask & q.x_mask)) & 1


def anticommutes(p: PauliString, q: PauliString) -> bool:
    return symplectic_product(p, q) == 1


def commutes(p: PauliString, q: PauliString) -> bool:
    return symplectic_product(p, q) == 0


class PauliSum:
    """Real-weighted sum of phase-(+1) Pauli strings (a Hermitian operator).

    Duplicate strings are merged on construction and zero weights dropped.
    Terms are kept in canonical order.
    """

    def __init__(self, terms: Iterable[tuple[float, PauliString | str]], n: int | None = None):
        merged: dict[tuple[int, int], float] = {}
        for coeff, s in terms:
            if isinstance(s, str):
                s = PauliString.from_label(s)
            if not s.is_hermitian:
                raise ValidationError(f"term {s} is not Hermitian")
            c = float(np.real(coeff))
            if np.iscomplexobj(coeff) and np.imag(coeff) != 0:
                raise ValidationError("PauliSum coefficients must be real")
            if not np.isfinite(c):
                raise ValidationError("PauliSum coefficients must be finite")
            if n is None:
                n = s.n
            elif s.n != n:
                raise DimensionError(f"term {s} has {s.n} qubits, expected {n}")
            if s.k == 2:
                c = -c
            key = (s.x_mask, s.z_mask)
            merged[key] = merged.get(key, 0.0) + c
        if n is None:
            raise ValidationError("PauliSum needs at least one term or an explicit n")
        self.n = n
        self._terms = tuple(
            (c, PauliString(n, x, z)) for (x, z), c in sorted(merged.items()) if c != 0.0
        )

    @classmethod
    def from_dict(cls, terms: dict[str, float]) -> "PauliSum":
        return cls((c, s) for s, c in terms.items())

    @property
    def terms(self) -> tuple[tuple[float, PauliString], ...]:
        return self._terms

    @property
    def strings(self) -> tuple[PauliString, ...]:
        return tuple(s for _, s in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, PauliSum) and self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, self._terms))

    def __repr__(self) -> str:
        body = " + ".join(f"{c:g}*{s.label}" for c, s in self._terms)
        return f"PauliSum({body or '0'})"

    def norm_bound(self) -> float:
        """Sum of |weights|; an upper bound on the operator norm."""
        return float(sum(abs(c) for c, _ in self._terms))


def offending_term(h: PauliSum, p: PauliString) -> tuple[float, PauliString] | None:
    """First term of ``h`` commuting with ``p``, or None if ``p`` anti-commutes with all."""
    for c, s in h:
        if commutes(p, s):
            return c, s
    return None


def _check_cap(n: int) -> None:
    if n > MAX_QUBITS:
        raise CapacityError(f"{n} qubits exceeds the cap of {MAX_QUBITS}")


def _parity_table(masks: np.ndarray, others: Iterable[int]) -> np.ndarray:
    """Boolean table ``[popcount(m & o) odd]`` with one column per ``o``."""
    cols = [np.bitwise_count(masks & np.uint64(o)) & 1 for o in others]
    return np.stack(cols, axis=1).astype(bool)


def anticommutant(h: PauliSum) -> list[PauliString]:
    """All phase-(+1) Pauli strings anti-commuting with every term of ``h``.

    Exhaustive over the 4**n strings. The condition for ``(x, z)`` against
    term ``t`` splits as ``parity(x & z_t) xor parity(z & x_t) == 1``, so
    the x- and z-halves are tabulated separately and joined on their parity
    signatures. Identity never qualifies. Output is sorted by
    ``(x_mask, z_mask)``.
    """
    if len(h) == 0:
        raise ValidationError("anticommutant of an empty PauliSum is undefined")
    _check_cap(h.n)
    masks = np.arange(1 << h.n, dtype=np.uint64)
    strings = h.strings
    px = _parity_table(masks, [s.z_mask for s in strings])
    pz = ~_parity_table(masks, [s.x_mask for s in strings])
    kx = np.packbits(px, axis=1)
    kz = np.packbits(pz, axis=1)

    by_signature: dict[bytes, list[int]] = {}
    for z, row in enumerate(kz):
        by_signature.setdefault(row.tobytes(), []).append(z)
    out = []
    for x, row in enumerate(kx):
        for z in by_signature.get(row.tobytes(), ()):
            if x or z:
                out.append(PauliString(h.n, x, z))
    return out


def commutant(h: PauliSum) -> list[PauliString]:
    """Phase-(+1) Pauli strings commuting with every term of ``h`` (identity included)."""
    _check_cap(h.n)
    out = []
    strings = h.strings
    for x in range(1 << h.n):
        for z in range(1 << h.n):
            p = PauliString(h.n, x, z)
            if all(commutes(p, s) for s in strings):
                out.append(p)
    return out


def to_matrix(op: PauliString | PauliSum) -> np.ndarray:
    """Dense ``2**n x 2**n`` matrix; site 1 is the most significant factor."""
    _check_cap(op.n)
    dim = 1 << op.n
    if isinstance(op, PauliString):
        return _string_matrix(op, dim)
    out = np.zeros((dim, dim), dtype=complex)
    for c, s in op:
        out += c * _string_matrix(s, dim)
    return out


def _string_matrix(p: PauliString, dim: int) -> np.ndarray:
    # sigma(x,z)|r> = i^{|x&z|} (-1)^{|r&z|} |r ^ x>
    r = np.arange(dim, dtype=np.uint64)
    signs = 1 - 2 * (np.bitwise_count(r & np.uint64(p.z_mask)) & 1).astype(np.int64)
    coeff = _PHASES[(p.k + _popcount(p.x_mask & p.z_mask)) % 4]
    out = np.zeros((dim, dim), dtype=complex)
    out[(r ^ np.uint64(p.x_mask)).astype(np.intp), r.astype(np.intp)] = coeff * signs
    return out
