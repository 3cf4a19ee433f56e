import math

import numpy as np
import pytest
from scipy.linalg import expm

from paritykick.entanglement import concurrence_vector
from paritykick.errors import DimensionError, ValidationError
from paritykick.hilbert import (
    SX,
    SZ,
    NormDriftWarning,
    apply,
    basis_state,
    eigensolve,
    evolve,
    ghz_state,
    is_unitary,
    propagator,
)
from paritykick.pauli import PauliString, to_matrix


def test_ghz3_amplitudes():
    psi = ghz_state(3)
    expected = np.zeros(8)
    expected[[0, 7]] = 1 / math.sqrt(2)
    np.testing.assert_array_equal(psi, expected)


def test_ghz2_is_bell():
    np.testing.assert_allclose(ghz_state(2), np.array([1, 0, 0, 1]) / math.sqrt(2))


def test_ghz3_cv():
    assert concurrence_vector(ghz_state(3)) == pytest.approx(math.sqrt(1.5), abs=1e-12)


def test_ghz_rejects_single_qubit():
    with pytest.raises(ValidationError):
        ghz_state(1)


def test_eigensolve_basic():
    np.testing.assert_allclose(eigensolve(SZ).eigenvalues, [-1, 1])
    np.testing.assert_allclose(eigensolve(np.eye(4)).eigenvalues, np.ones(4))


def test_eigensolve_rejects_non_hermitian():
    with pytest.raises(ValidationError):
        eigensolve(np.array([[0, 1], [0, 0]], dtype=complex))
    with pytest.raises(DimensionError):
        eigensolve(np.ones((2, 3)))


def test_eigensolve_reconstructs(fig1_model):
    h = to_matrix(fig1_model)
    s = eigensolve(h)
    assert np.abs(s.reconstruct() - h).max() <= 1e-10 * np.abs(h).max()
    assert np.all(np.diff(s.eigenvalues) >= 0)
    np.testing.assert_allclose(np.sort(s.eigenvalues), np.sort(-s.eigenvalues), atol=1e-12)


def test_propagator_basics():
    s = eigensolve(SZ)
    np.testing.assert_allclose(propagator(s, 0.0), np.eye(2), atol=1e-15)
    np.testing.assert_allclose(
        propagator(s, math.pi / 2), np.diag([np.exp(-1j * math.pi / 2), np.exp(1j * math.pi / 2)]), atol=1e-15
    )
    with pytest.raises(ValidationError):
        propagator(s, float("nan"))


def test_propagator_matches_expm(fig1_model, rng):
    h = to_matrix(fig1_model)
    s = eigensolve(h)
    for t in rng.uniform(-10, 10, 20):
        np.testing.assert_allclose(propagator(s, t), expm(-1j * h * t), atol=1e-10)


def test_propagator_group_property(fig1_model, rng):
    s = eigensolve(to_matrix(fig1_model))
    for t1, t2 in rng.uniform(-10, 10, (100, 2)):
        u = propagator(s, t1)
        assert is_unitary(u)
        np.testing.assert_allclose(propagator(s, t1) @ propagator(s, -t1), np.eye(8), atol=1e-12)
        np.testing.assert_allclose(propagator(s, t1 + t2), u @ propagator(s, t2), atol=1e-10)


def test_evolve_equals_propagator(fig1_model, rng):
    s = eigensolve(to_matrix(fig1_model))
    psi = ghz_state(3)
    for t in rng.uniform(0, 5, 10):
        out = evolve(s, psi, t)
        np.testing.assert_allclose(out, propagator(s, t) @ psi, atol=1e-13)
        assert abs(np.linalg.norm(out) - 1) < 1e-12


def test_apply():
    psi = ghz_state(3)
    np.testing.assert_array_equal(apply(np.eye(8), psi), psi)
    np.testing.assert_array_equal(apply(SX, basis_state("0")), basis_state("1"))
    kicked = apply(to_matrix(PauliString.from_label("YZY")), psi)
    assert concurrence_vector(kicked) == pytest.approx(concurrence_vector(psi), abs=1e-12)
    with pytest.raises(DimensionError):
        apply(np.eye(4), psi)


def test_apply_flags_norm_drift():
    with pytest.warns(NormDriftWarning):
        out = apply(2 * np.eye(2), basis_state("0"))
    assert np.linalg.norm(out) == pytest.approx(1.0)


def test_basis_state_ordering():
    psi = basis_state("100")
    assert psi[4] == 1
    with pytest.raises(ValidationError):
        basis_state("012")
