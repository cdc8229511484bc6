import numpy as np
import pytest
import scipy.linalg
from hypothesis import given
from hypothesis import strategies as st

from hwpkit.operators import (NotDensityMatrixError, NotUnitaryError, clock_z, displaced_parity,
                              displacement, dp_action, dp_action_momentum, dp_operator, fourier, is_hermitian,
                              is_unitary, momentum_ket, momentum_op, parity, parity_expectation,
                              parity_projectors, position_ket, position_op,
                              principal_log_hamiltonian, shift_x)

DIMS = [3, 5, 7]


def w(a, d):
    return np.exp(2j * np.pi * a / d)


@pytest.mark.parametrize("d", DIMS)
def test_bases(d):
    F = fourier(d)
    assert is_unitary(F)
    for j in range(-(d // 2), d // 2 + 1):
        k = position_ket(d, j)
        assert np.isclose(np.vdot(k, position_op(d) @ k), j)
        m = momentum_ket(d, j)
        assert np.isclose(np.vdot(m, momentum_op(d) @ m), j)
        # clock is diagonal in position, shift diagonal in momentum
        assert np.allclose(clock_z(d) @ k, w(j, d) * k)


@pytest.mark.parametrize("d", DIMS)
def test_weyl_commutation_and_powers(d):
    Z, X = clock_z(d), shift_x(d)
    assert np.allclose(np.linalg.matrix_power(Z, d), np.eye(d))
    assert np.allclose(np.linalg.matrix_power(X, d), np.eye(d))
    for a in range(d):
        for b in range(d):
            assert np.allclose(shift_x(d, b) @ clock_z(d, a), w(-a * b, d) * clock_z(d, a) @ shift_x(d, b))


@pytest.mark.parametrize("d", DIMS)
def test_fourier_intertwines_and_squares_to_parity(d):
    F = fourier(d)
    for a in range(d):
        assert np.allclose(clock_z(d, a), F @ shift_x(d, a) @ F.conj().T)
    assert np.allclose(F @ F, parity(d))
    P = parity(d)
    assert np.allclose(P @ shift_x(d) @ P, shift_x(d, -1))
    assert np.allclose(P @ clock_z(d) @ P, clock_z(d, -1))


@pytest.mark.parametrize("d", DIMS)
def test_displacement_definition(d):
    h = (d + 1) // 2
    for a in range(d):
        for b in range(d):
            expect = clock_z(d, a) @ shift_x(d, b) * w(-h * a * b, d)
            assert np.allclose(displacement(d, a, b), expect)


@pytest.mark.parametrize("d", DIMS)
def test_closed_form_action_on_every_ket(d):
    for a in range(d):
        for b in range(d):
            for g in range(d):
                for n in (0, 1):
                    M = dp_operator(d, a, b, g, n)
                    assert is_unitary(M)
                    for j in range(-(d // 2), d // 2 + 1):
                        ph, t = dp_action(d, a, b, g, n, j)
                        assert np.allclose(M @ position_ket(d, j), w(ph, d) * position_ket(d, t))
                        ph, t = dp_action_momentum(d, a, b, g, n, j)
                        assert np.allclose(M @ momentum_ket(d, j), w(ph, d) * momentum_ket(d, t))


@given(st.sampled_from(DIMS), st.integers(0, 20), st.integers(0, 20), st.integers(0, 20), st.integers(0, 1))
def test_parity_conjugation(d, a, b, g, n):
    P = np.linalg.matrix_power(parity(d), n)
    s = -1 if n else 1
    assert np.allclose(P @ displacement(d, a, b, g) @ P, displacement(d, s * a, s * b, g))


@pytest.mark.parametrize("d", DIMS)
def test_displaced_parity(d):
    for a in range(d):
        for b in range(d):
            M = displaced_parity(d, a, b)
            assert np.allclose(M @ M, np.eye(d))
            assert is_hermitian(M)
            assert np.isclose(np.trace(M), 1)
    assert np.allclose(displaced_parity(d, 0, 0), parity(d))


def test_parity_projectors():
    even, odd = parity_projectors(5)
    assert np.allclose(even @ even, even) and np.allclose(even @ odd, 0)
    assert np.isclose(np.trace(even).real, 3) and np.isclose(np.trace(odd).real, 2)


def test_parity_expectation():
    k = position_ket(3, 0)
    assert parity_expectation(np.outer(k, k)) == pytest.approx(1)
    k = (position_ket(3, 1) - position_ket(3, -1)) / np.sqrt(2)
    assert parity_expectation(np.outer(k, k.conj())) == pytest.approx(-1)
    with pytest.raises(NotDensityMatrixError):
        parity_expectation(np.eye(3))
    with pytest.raises(NotDensityMatrixError):
        parity_expectation(np.diag([1.5, -0.5, 0]))
    with pytest.raises(NotDensityMatrixError):
        parity_expectation(np.array([[0.5, 1, 0], [0, 0.5, 0], [0, 0, 0]]))


def test_parity_time_invariance(rng):
    d = 5
    P = parity(d)
    A = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    h = A + A.conj().T
    h = (h + P @ h @ P) / 2
    assert np.allclose(P @ h, h @ P)
    psi = rng.normal(size=d) + 1j * rng.normal(size=d)
    rho = np.outer(psi, psi.conj()) / np.vdot(psi, psi)
    p0 = parity_expectation(rho)
    for t in (0.3, 1.7, 4.2):
        U = scipy.linalg.expm(-1j * h * t)
        assert parity_expectation(U @ rho @ U.conj().T) == pytest.approx(p0, abs=1e-12)


@pytest.mark.parametrize("d", DIMS)
def test_stroboscopic_hamiltonian(d):
    for a in range(d):
        for b in range(d):
            for n in (0, 1):
                U = dp_operator(d, a, b, 0, n)
                h = principal_log_hamiltonian(U)
                assert is_hermitian(h)
                assert np.allclose(scipy.linalg.expm(2j * np.pi * h / d), U, atol=1e-8)
                # principal branch: eigenvalues of 2 pi h / d lie in (-pi, pi]
                ev = np.linalg.eigvalsh(h) * 2 * np.pi / d
                assert ev.min() > -np.pi + 1e-9 and ev.max() <= np.pi + 1e-9


def test_log_branch_cut_moves_to_plus_pi():
    # parity has eigenvalue -1; its log must use +pi, giving a positive h entry
    h = principal_log_hamiltonian(parity(3))
    assert np.allclose(np.sort(np.linalg.eigvalsh(h)), [0, 0, 1.5])


def test_log_rejects_non_unitary():
    with pytest.raises(NotUnitaryError):
        principal_log_hamiltonian(2 * np.eye(3))
    with pytest.raises(NotUnitaryError):
        principal_log_hamiltonian(np.eye(3)[:2])
