import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hwpkit.ring import (Dim, DimensionError, ModInt, ModulusMismatch, NotInvertible, Phase,
                         centered, centered_index, check_dim, index_to_residue, inv2, mod_add,
                         mod_inv, mod_mul, mod_neg, omega, omega_table)

odd_d = st.integers(1, 15).map(lambda k: 2 * k + 1)


@pytest.mark.parametrize("bad", [1, 2, 4, 0, -3, 3.0, True, "3"])
def test_dim_rejects(bad):
    with pytest.raises(DimensionError):
        Dim(bad)


def test_dim_basics():
    D = Dim(5)
    assert int(D) == 5 and D.inv2 == 3
    assert list(D.residues(centered=True)) == [-2, -1, 0, 1, 2]
    assert D(7) == ModInt(2, D)
    assert check_dim(np.int64(7)) == 7


def test_ring_examples():
    assert mod_add(ModInt(2, Dim(3)), ModInt(2, Dim(3))).value == 1
    assert mod_mul(ModInt(-1, Dim(5)), ModInt(2, Dim(5))).value == 3
    assert mod_neg(ModInt(3, Dim(7))).value == 4
    assert ModInt(-3, Dim(7)).value == 4


@pytest.mark.parametrize("d", [3, 5, 7, 9, 11])
def test_inverse_of_two(d):
    assert mod_inv(ModInt(2, Dim(d))).value == (d + 1) // 2 == inv2(d)


def test_non_unit():
    with pytest.raises(NotInvertible) as exc:
        mod_inv(ModInt(3, Dim(9)))
    assert exc.value.gcd == 3
    with pytest.raises(NotInvertible):
        ModInt(0, Dim(5)).inverse()


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        ModInt(1, Dim(3)) + ModInt(1, Dim(5))
    with pytest.raises(ModulusMismatch):
        mod_mul(ModInt(1, Dim(3)), ModInt(1, Dim(5)))


def test_operators_mix_ints():
    a = ModInt(4, Dim(5))
    assert (a + 3).value == 2 and (3 - a).value == 4 and (a * 2).value == 3 and (-a).value == 1
    assert a.centered == -1
    assert a == 4 and a == 9


@pytest.mark.parametrize("d", range(3, 26, 2))
def test_inverse_involution_exhaustive(d):
    for a in range(1, d):
        if math.gcd(a, d) == 1:
            x = ModInt(a, Dim(d))
            assert mod_inv(mod_inv(x)) == x
            assert (x * mod_inv(x)).value == 1


def test_omega_values():
    assert abs(omega(1, 3) - complex(-0.5, math.sqrt(3) / 2)) < 1e-15
    assert omega(0, 7) == 1
    assert abs(sum(omega(a, 3) for a in range(3))) / 3 < 1e-15
    with pytest.raises(TypeError):
        omega(1)


@given(odd_d, st.integers(-1000, 1000))
def test_omega_periodic(d, a):
    # centered and canonical representatives give the same root
    assert abs(omega(a, d) - cmath.exp(2j * math.pi * (a % d) / d)) < 1e-12
    assert abs(omega_table(d)[a % d] - omega(a, d)) < 1e-15


def test_omega_table_read_only():
    with pytest.raises(ValueError):
        omega_table(5)[0] = 2


@pytest.mark.parametrize("d,j,idx", [(3, -1, 0), (3, 0, 1), (5, 2, 4), (7, -3, 0)])
def test_centered_index(d, j, idx):
    assert centered_index(j, d) == idx
    assert index_to_residue(idx, d) == j
    assert centered_index(ModInt(j, Dim(d))) == idx


@given(odd_d, st.integers(-500, 500))
def test_centered_range(d, a):
    r = centered(a, d)
    assert -(d - 1) // 2 <= r <= (d - 1) // 2 and (r - a) % d == 0


@given(odd_d, st.lists(st.integers(-50, 50), min_size=1, max_size=30))
def test_phase_exact(d, exps):
    total = Phase.of(0, d)
    value = 1 + 0j
    for e in exps:
        total = total * Phase.of(e, d)
        value *= omega(e, d)
    assert total.exponent.value == sum(exps) % d
    assert abs(total.value - value) <= len(exps) * 1e-15 + 1e-15
    assert (total * total.conjugate()).exponent.value == 0
