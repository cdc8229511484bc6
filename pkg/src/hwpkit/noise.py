"""Robustness of coherent-state expansions to noisy Bargmann coefficients.

Each trial adds uniform noise to the coefficients of a ket in the ``d^2``
(HW) or ``2d^2`` (HWP) frame, rebuilds the ket and records
``|<f_noisy|f> - 1|``.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .frames import CoherentFrame, bargmann, build_frame, reconstruct, validate_fiducial

__all__ = ["NoiseConfig", "NoiseReport", "NoisyState", "trial_noise", "noisy_reconstruct",
           "run_frame", "run_experiment", "summary", "thread_count"]

NOISE_KINDS = ("real-uniform", "complex-uniform")
_STREAM = {"HW": 0, "HWP": 1}


@dataclass(frozen=True)
class NoiseConfig:
    amplitude: float = 0.1
    trials: int = 10_000
    seed: int = 0
    kind: str = "real-uniform"

    def __post_init__(self):
        if not self.amplitude >= 0:
            raise ValueError(f"amplitude must be >= 0, got {self.amplitude}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.kind not in NOISE_KINDS:
            raise ValueError(f"kind must be one of {NOISE_KINDS}, got {self.kind!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class NoiseReport:
    kind: str
    errors: np.ndarray = field(repr=False)
    closed_form: np.ndarray = field(repr=False)
    config: NoiseConfig
    inputs: dict = field(default_factory=dict)

    @property
    def mean(self) -> float:
        # fsum is exact, so the mean does not depend on summation order
        return math.fsum(self.errors) / len(self.errors)

    @property
    def std(self) -> float:
        m = self.mean
        return math.sqrt(math.fsum((e - m) ** 2 for e in self.errors) / len(self.errors))

    @property
    def max_disagreement(self) -> float:
        """Largest per-trial gap between the direct and closed-form errors."""
        return float(np.max(np.abs(self.errors - self.closed_form)))


class NoisyState(NamedTuple):
    ket: np.ndarray
    error: float
    closed_form: float


def trial_noise(cfg: NoiseConfig, trial: int, shape, stream: int = 0) -> np.ndarray:
    """Noise for one trial; a pure function of ``(seed, trial, stream)``."""
    rng = np.random.default_rng([cfg.seed, trial, stream])
    E = cfg.amplitude
    eps = rng.uniform(-E, E, size=shape)
    if cfg.kind == "complex-uniform":
        eps = eps + 1j * rng.uniform(-E, E, size=shape)
    return eps


def noisy_reconstruct(frame: CoherentFrame, f, cfg: NoiseConfig, trial: int,
                      coeffs=None) -> NoisyState:
    """Rebuild ``f`` from noisy coefficients and measure the damage two ways.

    ``error`` comes from the explicit inner product; ``closed_form`` is
    ``|w * sum conj(eps) F|`` with ``w`` the frame weight, which is what the
    inner product reduces to for a unit-norm ``f``.
    """
    f = np.asarray(f, dtype=complex)
    if abs(np.vdot(f, f).real - 1) > 1e-10:
        raise ValueError("ket must be unit norm")
    table = bargmann(frame, f) if coeffs is None else coeffs
    eps = trial_noise(cfg, trial, table.values.shape, _STREAM[frame.kind])
    noisy = type(table)(table.kind, table.values + eps)
    ket = reconstruct(frame, noisy)
    error = abs(np.vdot(ket, f) - 1)
    closed = abs(table.weight * np.sum(np.conj(eps) * table.values))
    return NoisyState(ket, float(error), float(closed))


def thread_count() -> int:
    try:
        n = int(os.environ.get("HWPKIT_THREADS", "1"))
    except ValueError:
        n = 1
    return max(1, n)


def run_frame(frame: CoherentFrame, f, cfg: NoiseConfig, threads: int | None = None) -> NoiseReport:
    f = np.asarray(f, dtype=complex)
    table = bargmann(frame, f)
    errors = np.empty(cfg.trials)
    closed = np.empty(cfg.trials)

    def work(chunk):
        for t in chunk:
            r = noisy_reconstruct(frame, f, cfg, t, coeffs=table)
            errors[t] = r.error
            closed[t] = r.closed_form

    threads = thread_count() if threads is None else max(1, threads)
    chunks = np.array_split(np.arange(cfg.trials), threads)
    if threads == 1:
        work(chunks[0])
    else:
        with ThreadPoolExecutor(threads) as pool:
            list(pool.map(work, chunks))
    return NoiseReport(frame.kind, errors, closed, cfg)


def run_experiment(f, s, cfg: NoiseConfig, normalize: bool = True,
                   threads: int | None = None) -> tuple[NoiseReport, NoiseReport]:
    """Paired HW and HWP runs over the same trial indices.

    With ``normalize`` both ``f`` and the fiducial ``s`` are scaled to unit
    norm first; the error is only meaningful for a unit-norm ``f``.
    """
    f = np.asarray(f, dtype=complex)
    if normalize:
        f = f / np.linalg.norm(f)
    fid = validate_fiducial(s, normalize=normalize)
    inputs = {"d": len(f), "ket": f, "fiducial": fid.state}
    reports = []
    for kind in ("HW", "HWP"):
        rep = run_frame(build_frame(kind, fid), f, cfg, threads)
        reports.append(NoiseReport(kind, rep.errors, rep.closed_form, cfg, inputs))
    return reports[0], reports[1]


def summary(hw: NoiseReport, hwp: NoiseReport) -> dict:
    return {"mean_e1": hw.mean, "std_e1": hw.std, "mean_e2": hwp.mean, "std_e2": hwp.std,
            "e2_lt_e1": bool(hwp.mean < hw.mean)}
