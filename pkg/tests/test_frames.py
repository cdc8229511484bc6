import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hwpkit.frames import (BargmannTable, FiducialError, bargmann, build_frame,
                           displacement_closure_check, frame_fourier_check, frame_indices,
                           frame_operator, overlap, overlap_direct, q_function, reconstruct,
                           scalar_product_via_bargmann, sic_overlap, validate_fiducial)
from hwpkit.group import HWPElement
from hwpkit.operators import dp_operator, momentum_ket, position_ket
from hwpkit.sampling import random_fiducial, random_ket, random_operator

DIMS = [3, 5, 7]


def test_fiducial_rejections():
    with pytest.raises(FiducialError) as e:
        validate_fiducial([0.5, 0.4j, 0.77])
    assert e.value.reason == "norm"
    assert validate_fiducial([0.5, 0.4j, 0.77], normalize=True).report["input_norm2"] == pytest.approx(1.0029)
    with pytest.raises(FiducialError) as e:
        validate_fiducial(position_ket(5, 2))
    assert e.value.reason == "position-like"
    with pytest.raises(FiducialError) as e:
        validate_fiducial(momentum_ket(5, 1))
    assert e.value.reason == "momentum-like"
    even = (position_ket(5, 1) + position_ket(5, -1) + position_ket(5, 0)) / np.sqrt(3)
    with pytest.raises(FiducialError) as e:
        validate_fiducial(even)
    assert e.value.reason == "parity-eigenstate"
    with pytest.raises(FiducialError) as e:
        validate_fiducial(np.zeros(3), normalize=True)
    assert e.value.reason == "norm"
    with pytest.raises(FiducialError):
        validate_fiducial(np.eye(3))


def test_frame_indices_order():
    idx = frame_indices(3)
    assert len(idx) == 18 and idx[0] == (-1, -1, 0) and idx[4] == (0, 0, 0) and idx[-1] == (1, 1, 1)
    assert len(frame_indices(5, "HW")) == 25


@pytest.mark.parametrize("d", DIMS)
def test_resolution_of_identity(d, rng):
    for _ in range(20):
        s = random_fiducial(rng, d)
        for kind in ("HW", "HWP"):
            frame = build_frame(kind, s)
            assert len(frame) == (d * d if kind == "HW" else 2 * d * d)
            assert np.abs(frame_operator(frame) - np.eye(d)).max() < 1e-10


@pytest.mark.parametrize("d", DIMS)
def test_general_resolution(d, rng):
    theta = random_operator(rng, d) + 2 * np.eye(d)
    acc = sum(dp_operator(d, a, b, 0, n) @ theta @ dp_operator(d, a, b, 0, n).conj().T
              for n in range(2) for a in range(d) for b in range(d))
    assert np.allclose(acc / (2 * d * np.trace(theta)), np.eye(d))


def test_subframe_and_states(rng):
    s = random_fiducial(rng, 5)
    hwp, hw = build_frame("HWP", s), build_frame("HW", s)
    assert np.array_equal(hwp.states[0], hw.states[0])
    assert np.allclose(hwp.state(2, -1, 1), dp_operator(5, 2, -1, 0, 1) @ s.state)
    with pytest.raises(ValueError):
        build_frame("XYZ", s)


@pytest.mark.parametrize("kind", ["HW", "HWP"])
@pytest.mark.parametrize("d", DIMS)
def test_bargmann_identities(kind, d, rng):
    frame = build_frame(kind, random_fiducial(rng, d))
    f, g = random_ket(rng, d), random_ket(rng, d)
    tf, tg = bargmann(frame, f), bargmann(frame, g)
    assert np.allclose(reconstruct(frame, tf), f)
    assert tf.weight * q_function(tf).sum() == pytest.approx(1)
    assert scalar_product_via_bargmann(tg, tf) == pytest.approx(np.vdot(g, f))
    # linearity
    assert np.allclose(bargmann(frame, 2 * f + g).values, 2 * tf.values + tg.values)


def test_table_access_and_shape_errors(rng):
    frame = build_frame("HWP", random_fiducial(rng, 3))
    t = bargmann(frame, random_ket(rng, 3))
    rows = list(t.rows())
    assert len(rows) == 18 and rows[0][:3] == (-1, -1, 0)
    assert t[-1, 1, 1] == t.values[1, 2, 1]
    assert t[0, 0] == t.values[0, 0, 0]
    with pytest.raises(ValueError):
        bargmann(frame, np.ones(5))
    with pytest.raises(ValueError):
        reconstruct(build_frame("HW", frame.fiducial), t)
    with pytest.raises(ValueError):
        scalar_product_via_bargmann(t, BargmannTable("HW", t.values[:1]))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(DIMS), st.integers(0, 2**32 - 1))
def test_overlap_closed_form(d, seed):
    rng = np.random.default_rng(seed)
    frame = build_frame("HWP", random_fiducial(rng, d))
    i1 = (*rng.integers(-d, d, 2), rng.integers(0, 2))
    i2 = (*rng.integers(-d, d, 2), rng.integers(0, 2))
    assert overlap(frame, i1, i2) == pytest.approx(overlap_direct(frame, i1, i2), abs=1e-12)


def test_sic_values():
    assert sic_overlap(3, "HW") == pytest.approx(0.25)
    assert sic_overlap(3, "HWP") == pytest.approx(5 / 17)
    # tight frame: the mean of the distinct overlaps is the SIC value for any fiducial
    frame = build_frame("HWP", random_fiducial(np.random.default_rng(0), 3))
    idx = frame_indices(3)
    vals = [overlap(frame, a, b) for a, b in itertools.product(idx, idx) if a != b]
    assert np.mean(vals) == pytest.approx((2 * 3 * 3 / 3 - 1) / (2 * 9 - 1))


@pytest.mark.parametrize("d", DIMS)
def test_fourier_duality(d, rng):
    frame = build_frame("HWP", random_fiducial(rng, d))
    rep = frame_fourier_check(frame, random_ket(rng, d))
    assert rep["max_deviation"] < 1e-10
    with pytest.raises(ValueError):
        frame_fourier_check(build_frame("HW", frame.fiducial))


@pytest.mark.parametrize("d", [3, 5])
def test_displacement_closure(d, rng):
    frame = build_frame("HWP", random_fiducial(rng, d))
    for code in range(0, 2 * d ** 3, 7):
        assert displacement_closure_check(frame, HWPElement.from_code(code, d))["max_deviation"] < 1e-10
    with pytest.raises(ValueError):
        displacement_closure_check(build_frame("HW", frame.fiducial), HWPElement(d, 0, 0, 0, 1))

