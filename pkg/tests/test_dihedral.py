import itertools

import numpy as np
import pytest
import scipy.linalg

from hwpkit.dihedral import DihedralRep, marginal_rep, rep_element, wx_function, wz_function, x_element_direct
from hwpkit.group import DihedralElement, dihedral_inv
from hwpkit.operators import clock_z, displacement, dp_operator, position_ket, momentum_ket, principal_log_hamiltonian
from hwpkit.wigner import weyl, wigner

DIMS = [3, 5, 7]


@pytest.mark.parametrize("d", DIMS)
@pytest.mark.parametrize("axis", ["Z", "X"])
def test_abstract_law(d, axis):
    rep = DihedralRep(axis, d)
    for a1, n1, a2, n2 in itertools.product(range(d), range(2), range(d), range(2)):
        e = DihedralElement(d, a1, n1) * DihedralElement(d, a2, n2)
        assert np.allclose(rep(a1, n1) @ rep(a2, n2), rep(e.a, e.nu))
    for a, n in itertools.product(range(d), range(2)):
        assert np.allclose(np.linalg.matrix_power(rep(a, n), 2 * d), np.eye(d))
        inv = dihedral_inv(DihedralElement(d, a, n))
        assert np.allclose(rep(inv.a, inv.nu) @ rep(a, n), np.eye(d))


@pytest.mark.parametrize("d", DIMS)
def test_x_axis_cross_check(d):
    for b, n in itertools.product(range(d), range(2)):
        assert np.allclose(rep_element(DihedralRep("X", d), b, n), x_element_direct(d, b, n))


def test_z_axis_is_hwp_embedding():
    d = 5
    for a, n in itertools.product(range(d), range(2)):
        assert np.allclose(DihedralRep("Z", d)(a, n), dp_operator(d, a, 0, 0, n))
        assert np.allclose(DihedralRep("X", d)(a, n), dp_operator(d, 0, a, 0, n))


def test_bad_axis():
    with pytest.raises(ValueError):
        DihedralRep("Y", 3)
    with pytest.raises(ValueError):
        DihedralElement(3, 1).embed("Y")


@pytest.mark.parametrize("d", DIMS)
def test_stroboscopic(d):
    rep = DihedralRep("Z", d)
    for a, n in itertools.product(range(d), range(2)):
        h = principal_log_hamiltonian(rep(a, n))
        assert np.allclose(scipy.linalg.expm(2j * np.pi * h / d), rep(a, n), atol=1e-8)


@pytest.mark.parametrize("d", DIMS)
def test_marginals(d, rng):
    k0 = position_ket(d, 0)
    theta = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    for n in range(2):
        assert np.allclose(marginal_rep(DihedralRep("Z", d), n), np.outer(k0, k0))
        m = momentum_ket(d, 0)
        assert np.allclose(marginal_rep(DihedralRep("X", d), n), np.outer(m, m.conj()))
        total = sum(wz_function(theta, a, n) for a in range(d)) / d
        assert total == pytest.approx(theta[d // 2, d // 2])


@pytest.mark.parametrize("d", DIMS)
def test_restrictions_to_wigner_weyl(d, rng):
    theta = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    h = (d + 1) // 2
    for a in range(d):
        assert wz_function(theta, a, 0) == pytest.approx(weyl(theta, a, 0))
        # Z^a P is the displaced parity at (a/2, 0)
        assert wz_function(theta, a, 1) == pytest.approx(wigner(theta, h * a, 0))
        assert wx_function(theta, a, 0) == pytest.approx(weyl(theta, 0, a))
        assert wx_function(theta, a, 1) == pytest.approx(wigner(theta, 0, h * a))


def test_clock_rep_values():
    assert np.allclose(DihedralRep("Z", 3)(1, 0), clock_z(3))
    assert np.allclose(DihedralRep("Z", 3)(0, 0), displacement(3, 0, 0))
