import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hwpkit import _backend, _kernels_py
from hwpkit.group import HWPElement, hwp_inv, hwp_mul

BACKENDS = _backend.available()
ids = [k.BACKEND for k in BACKENDS]


def test_selection_prefers_compiled():
    names = [k.BACKEND for k in BACKENDS]
    assert names[0] == "python"
    assert _backend.BACKEND == names[-1]


def test_env_forces_fallback():
    env = dict(os.environ, HWPKIT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import hwpkit; print(hwpkit.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("k", BACKENDS, ids=ids)
@given(st.sampled_from([3, 5, 7]), st.integers(0, 10**6), st.integers(0, 10**6))
def test_mul_matches_group_law(k, d, x, y):
    n = 2 * d ** 3
    x, y = x % n, y % n
    g1, g2 = HWPElement.from_code(x, d), HWPElement.from_code(y, d)
    assert k.mul(x, y, d) == hwp_mul(g1, g2).code
    assert k.inv(x, d) == hwp_inv(g1).code
    assert k.mul(x, k.inv(x, d), d) == 0
    assert k.decode(k.encode(*g1.astuple(), d), d) == g1.astuple()


@pytest.mark.parametrize("d", [3, 5])
def test_set_kernels_agree(d):
    rng = np.random.default_rng(d)
    left = np.unique(rng.integers(0, 2 * d ** 3, size=40))
    right = np.unique(rng.integers(0, 2 * d ** 3, size=40))
    outs = [(k.commutator_set(left, right, d), k.closure(left[:3], d)) for k in BACKENDS]
    for cs, cl in outs[1:]:
        assert np.array_equal(cs, outs[0][0])
        assert np.array_equal(cl, outs[0][1])
    # closure is a subgroup containing the generators
    cl = set(outs[0][1].tolist())
    assert set(left[:3].tolist()) <= cl and 0 in cl
    assert all(_kernels_py.mul(a, b, d) in cl for a in cl for b in cl)


def test_closure_of_nothing_is_trivial():
    for k in BACKENDS:
        assert k.closure(np.array([], dtype=np.int64), 3).tolist() == [0]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(0, 2**32 - 1))
def test_table_kernels_agree(d, seed):
    rng = np.random.default_rng(seed)
    t1 = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    t2 = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    c1 = rng.normal(size=(2, d, d)) + 1j * rng.normal(size=(2, d, d))
    c2 = rng.normal(size=(2, d, d)) + 1j * rng.normal(size=(2, d, d))
    ref, *others = BACKENDS
    for k in others:
        for sign in (1, -1):
            assert np.allclose(k.ww_fourier(t1, sign, d), ref.ww_fourier(t1, sign, d), atol=1e-12)
        assert np.allclose(k.weyl_convolution(t1, t2, d), ref.weyl_convolution(t1, t2, d), atol=1e-12)
        assert np.allclose(k.moyal_star(t1, t2, d), ref.moyal_star(t1, t2, d), atol=1e-12)
        assert np.allclose(k.unified_convolution(c1, c2, d), ref.unified_convolution(c1, c2, d), atol=1e-12)


@pytest.mark.parametrize("k", BACKENDS, ids=ids)
def test_fourier_kernel_is_involution(k):
    d = 5
    t = np.random.default_rng(1).normal(size=(d, d)) + 0j
    assert np.allclose(k.ww_fourier(k.ww_fourier(t, 1, d), 1, d), t)
