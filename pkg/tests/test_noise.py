import numpy as np
import pytest

from hwpkit import reference
from hwpkit.frames import bargmann, build_frame, validate_fiducial
from hwpkit.noise import (NoiseConfig, noisy_reconstruct, run_experiment, run_frame, summary,
                          thread_count, trial_noise)


def unit(v):
    v = np.asarray(v, dtype=complex)
    return v / np.linalg.norm(v)


@pytest.fixture
def frames3():
    fid = validate_fiducial(reference.FIDUCIAL_3, normalize=True)
    return build_frame("HW", fid), build_frame("HWP", fid)


@pytest.mark.parametrize("kwargs", [dict(amplitude=-1), dict(trials=0), dict(kind="gaussian"),
                                    dict(seed=-1)])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        NoiseConfig(**kwargs)


def test_zero_noise_is_exact(frames3):
    f = unit(reference.KET_3)
    for frame in frames3:
        r = noisy_reconstruct(frame, f, NoiseConfig(amplitude=0.0), 0)
        assert r.error < 1e-14 and r.closed_form == 0
        assert np.allclose(r.ket, f)


def test_rejects_unnormalised(frames3):
    with pytest.raises(ValueError):
        noisy_reconstruct(frames3[0], reference.KET_3, NoiseConfig(), 0)


@pytest.mark.parametrize("kind", ["real-uniform", "complex-uniform"])
def test_direct_matches_closed_form(frames3, kind):
    f = unit(reference.KET_3)
    cfg = NoiseConfig(trials=200, seed=11, kind=kind)
    for frame in frames3:
        rep = run_frame(frame, f, cfg)
        assert rep.max_disagreement < 1e-12


def test_single_trial_bound(frames3):
    # |w sum eps F| <= w E sum |F|
    f = unit(reference.KET_3)
    cfg = NoiseConfig(trials=1, seed=5)
    for frame in frames3:
        r = noisy_reconstruct(frame, f, cfg, 0)
        t = bargmann(frame, f)
        assert 0 <= r.error <= t.weight * cfg.amplitude * np.abs(t.values).sum() + 1e-15


def test_noise_stream_deterministic():
    cfg = NoiseConfig(seed=123)
    a = trial_noise(cfg, 7, (2, 3, 3), 1)
    assert np.array_equal(a, trial_noise(cfg, 7, (2, 3, 3), 1))
    assert not np.array_equal(a, trial_noise(cfg, 8, (2, 3, 3), 1))
    assert np.abs(a).max() <= 0.1
    c = trial_noise(NoiseConfig(seed=123, kind="complex-uniform"), 7, (3,), 0)
    assert np.iscomplexobj(c)


def test_parallel_equals_serial(frames3, monkeypatch):
    f = unit(reference.KET_3)
    cfg = NoiseConfig(trials=301, seed=9)
    serial = run_frame(frames3[1], f, cfg, threads=1)
    parallel = run_frame(frames3[1], f, cfg, threads=4)
    assert np.array_equal(serial.errors, parallel.errors)
    assert serial.mean == parallel.mean
    monkeypatch.setenv("HWPKIT_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("HWPKIT_THREADS", "zero")
    assert thread_count() == 1


def test_report_statistics(frames3):
    hw, hwp = run_experiment(reference.KET_3, reference.FIDUCIAL_3, NoiseConfig(trials=500, seed=1))
    for rep in (hw, hwp):
        assert (rep.errors >= 0).all()
        assert rep.errors.min() <= rep.mean <= rep.errors.max()
        assert rep.std == pytest.approx(np.std(rep.errors))
    s = summary(hw, hwp)
    assert set(s) == {"mean_e1", "std_e1", "mean_e2", "std_e2", "e2_lt_e1"}
    assert hw.inputs["d"] == 3 and hw.kind == "HW" and hwp.kind == "HWP"


def test_small_amplitude_limit():
    hw, hwp = run_experiment(reference.KET_3, reference.FIDUCIAL_3, NoiseConfig(amplitude=1e-8, trials=200))
    assert hw.mean < 1e-7 and hwp.mean < 1e-7


@pytest.mark.parametrize("s", reference.ALT_FIDUCIALS_3, ids=["s1", "s2"])
def test_weak_fiducial_dependence(s):
    hw, hwp = run_experiment(reference.KET_3, s, NoiseConfig(trials=2000, seed=2))
    assert 0.015 <= hw.mean <= 0.045 and hwp.mean < hw.mean
