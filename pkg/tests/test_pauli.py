import itertools
from functools import reduce

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paritykick.errors import CapacityError, DimensionError, ValidationError
from paritykick.hilbert import eigensolve
from paritykick.pauli import (
    MAX_QUBITS,
    PauliString,
    PauliSum,
    anticommutant,
    anticommutes,
    commutant,
    multiply,
    to_matrix,
)

SINGLE = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]]),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.diag([1, -1]),
}

EQ5 = PauliSum([(2, "ZZI"), (4, "IZZ"), (6, "IXI")])
PAPER_OPS = ["YZY", "ZYZ", "IYI", "IYZ", "XZY", "ZYI"]


def dense(label: str) -> np.ndarray:
    """Reference matrix built letter by letter with np.kron."""
    return reduce(np.kron, [SINGLE[c] for c in label]).astype(complex)


def pauli_strings(n):
    return st.builds(
        PauliString,
        st.just(n),
        st.integers(0, (1 << n) - 1),
        st.integers(0, (1 << n) - 1),
        st.integers(0, 3),
    )


def test_label_roundtrip():
    p = PauliString.from_label("YZY")
    assert p.label == "YZY"
    assert p.letter(1) == "Y" and p.letter(2) == "Z"
    assert str(PauliString.from_label("-iXZ")) == "-iXZ"
    assert PauliString.from_label("-iXZ").phase == -1j


@pytest.mark.parametrize("bad", ["", "XQZ", "i", "--X"])
def test_label_rejects_garbage(bad):
    with pytest.raises(ValidationError):
        PauliString.from_label(bad)


def test_x_times_y_is_iz():
    p = multiply(PauliString.from_label("X"), PauliString.from_label("Y"))
    assert p.label == "Z" and p.phase == 1j


def test_x_squared_is_identity():
    p = multiply(PauliString.from_label("X"), PauliString.from_label("X"))
    assert p.is_identity and p.phase == 1


def test_zzi_times_iyi_matches_dense():
    p = multiply(PauliString.from_label("ZZI"), PauliString.from_label("IYI"))
    np.testing.assert_allclose(to_matrix(p), dense("ZZI") @ dense("IYI"), atol=1e-15)
    assert p.label == "ZXI" and p.phase == -1j


def test_multiply_size_mismatch():
    with pytest.raises(DimensionError):
        multiply(PauliString.from_label("X"), PauliString.from_label("XX"))
    with pytest.raises(DimensionError):
        anticommutes(PauliString.from_label("X"), PauliString.from_label("XX"))


def test_to_matrix_iyi_explicit():
    expected = np.zeros((8, 8), dtype=complex)
    # I (x) Y (x) I: flips the middle bit with phase +i (0 -> 1) or -i (1 -> 0)
    for r in range(8):
        mid = (r >> 1) & 1
        expected[r ^ 2, r] = 1j if mid == 0 else -1j
    np.testing.assert_array_equal(to_matrix(PauliString.from_label("IYI")), expected)


@pytest.mark.parametrize("label", ["XYZ", "ZIY", "YYX", "I", "Y"])
def test_to_matrix_matches_kron(label):
    np.testing.assert_allclose(to_matrix(PauliString.from_label(label)), dense(label), atol=0)


def test_negative_phase_negates_matrix():
    p = PauliString.from_label("XZY")
    np.testing.assert_array_equal(to_matrix(-p), -to_matrix(p))


def test_multiply_exhaustive_small():
    for n in (1, 2):
        labels = ["".join(c) for c in itertools.product("IXYZ", repeat=n)]
        for a, b in itertools.product(labels, repeat=2):
            for ka, kb in [(0, 0), (1, 2), (3, 1)]:
                p = PauliString.from_label(a).with_phase(ka)
                q = PauliString.from_label(b).with_phase(kb)
                np.testing.assert_allclose(
                    to_matrix(multiply(p, q)), to_matrix(p) @ to_matrix(q), atol=1e-15
                )


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(pauli_strings(n), pauli_strings(n))))
def test_multiply_matches_matrix_product(pq):
    p, q = pq
    np.testing.assert_allclose(to_matrix(p * q), to_matrix(p) @ to_matrix(q), atol=1e-14)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(pauli_strings(n), pauli_strings(n))))
def test_anticommutes_matches_matrices(pq):
    p, q = pq
    a, b = to_matrix(p), to_matrix(q)
    anti = np.abs(a @ b + b @ a).max() < 1e-12
    comm = np.abs(a @ b - b @ a).max() < 1e-12
    assert anti != comm
    assert anticommutes(p, q) == anti


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5).flatmap(pauli_strings))
def test_matrix_unitary_and_hermitian_iff_real_phase(p):
    m = to_matrix(p)
    np.testing.assert_allclose(m.conj().T @ m, np.eye(m.shape[0]), atol=1e-14)
    assert p.is_hermitian == np.allclose(m, m.conj().T)
    if p.is_hermitian:
        np.testing.assert_allclose(m @ m, np.eye(m.shape[0]), atol=1e-14)
    assert not anticommutes(p, p)


def test_x_z_anticommute():
    assert anticommutes(PauliString.from_label("X"), PauliString.from_label("Z"))
    assert anticommutes(PauliString.from_label("ZZI"), PauliString.from_label("IYI"))


def brute_force_anticommutant(h: PauliSum) -> set[str]:
    """All non-identity strings whose dense matrix anti-commutes with the dense Hamiltonian."""
    hm = sum(c * dense(s.label) for c, s in h)
    out = set()
    for letters in itertools.product("IXYZ", repeat=h.n):
        label = "".join(letters)
        if set(label) == {"I"}:
            continue
        a = dense(label)
        if np.abs(a @ hm + hm @ a).max() < 1e-12:
            out.add(label)
    return out


# Golden count from brute_force_anticommutant(EQ5) over all 64 strings.
EQ5_ANTICOMMUTANT_COUNT = 8


def test_anticommutant_eq5_matches_brute_force():
    found = anticommutant(EQ5)
    oracle = brute_force_anticommutant(EQ5)
    assert len(oracle) == EQ5_ANTICOMMUTANT_COUNT
    assert {p.label for p in found} == oracle
    assert len(found) == EQ5_ANTICOMMUTANT_COUNT


def test_anticommutant_contains_paper_operators():
    labels = {p.label for p in anticommutant(EQ5)}
    assert set(PAPER_OPS) <= labels


def test_anticommutant_sorted_and_phase_one():
    found = anticommutant(EQ5)
    assert [p.sort_key() for p in found] == sorted(p.sort_key() for p in found)
    assert all(p.k == 0 for p in found)


def test_anticommutant_dm_model():
    h = PauliSum([(1.0, "XX"), (0.7, "YY"), (0.3, "XY"), (-0.3, "YX")])
    labels = {p.label for p in anticommutant(h)}
    assert {"IZ", "ZI"} <= labels
    assert labels == brute_force_anticommutant(h)


def test_anticommutant_matrix_level(fig1_model):
    hm = to_matrix(fig1_model)
    nrm = np.linalg.norm(hm, 2)
    for p in anticommutant(fig1_model):
        a = to_matrix(p)
        assert np.linalg.norm(a @ hm + hm @ a, 2) <= 1e-12 * nrm
        np.testing.assert_allclose(a, a.conj().T)
        np.testing.assert_allclose(a @ a, np.eye(8), atol=1e-15)


def test_anticommutant_coset_closure():
    anti = set(anticommutant(EQ5))
    comm = commutant(EQ5)
    assert len(comm) > 1
    for c in comm:
        for a in anti:
            prod = (c * a).with_phase(0)
            assert prod in anti


def test_anticommutant_errors():
    with pytest.raises(ValidationError):
        anticommutant(PauliSum([], n=2))
    big = PauliSum([(1.0, PauliString.single(MAX_QUBITS + 1, 1, "X"))])
    with pytest.raises(CapacityError):
        anticommutant(big)
    with pytest.raises(CapacityError):
        to_matrix(big)


def test_anticommutant_at_cap_size():
    n = MAX_QUBITS
    terms = [(1.0, PauliString.single(n, i, "Z") * PauliString.single(n, i + 1, "Z")) for i in range(1, n)]
    terms += [(0.5, PauliString.single(n, i, "X")) for i in range(1, n + 1)]
    found = anticommutant(PauliSum(terms))
    assert {p.label for p in found} == {"YZ" * (n // 2), "ZY" * (n // 2)}


def test_paulisum_merges_and_drops():
    h = PauliSum([(1.0, "XZ"), (2.0, "XZ"), (1.0, "ZZ"), (-1.0, "ZZ"), (3.0, "-YY")])
    assert len(h) == 2
    assert dict((s.label, c) for c, s in h) == {"XZ": 3.0, "YY": -3.0}
    with pytest.raises(ValidationError):
        PauliSum([(1.0, PauliString.from_label("iX"))])
    with pytest.raises(DimensionError):
        PauliSum([(1.0, "X"), (1.0, "XX")])


def test_eq5_matrix_spectrum_symmetric():
    h = to_matrix(PauliSum([(2, "ZZI"), (4, "IZZ"), (6, "IXI")]))
    np.testing.assert_allclose(h, h.conj().T)
    w = eigensolve(h).eigenvalues
    np.testing.assert_allclose(np.sort(w), np.sort(-w), atol=1e-12)
