"""Random kets, operators and group elements for property checks."""
from __future__ import annotations

import numpy as np

from .frames import FiducialError, validate_fiducial
from .group import HWPElement

__all__ = ["random_ket", "random_operator", "random_hermitian", "random_density",
           "random_fiducial", "random_element"]


def random_ket(rng: np.random.Generator, d: int) -> np.ndarray:
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    return v / np.linalg.norm(v)


def random_operator(rng: np.random.Generator, d: int) -> np.ndarray:
    return rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))


def random_hermitian(rng: np.random.Generator, d: int) -> np.ndarray:
    A = random_operator(rng, d)
    return (A + A.conj().T) / 2


def random_density(rng: np.random.Generator, d: int) -> np.ndarray:
    A = random_operator(rng, d)
    rho = A @ A.conj().T
    return rho / np.trace(rho).real


def random_fiducial(rng: np.random.Generator, d: int):
    """A validated random fiducial; redraws the (measure-zero) degenerate cases."""
    while True:
        try:
            return validate_fiducial(random_ket(rng, d))
        except FiducialError:  # pragma: no cover
            continue


def random_element(rng: np.random.Generator, d: int, hw_only: bool = False) -> HWPElement:
    a, b, g = rng.integers(0, d, size=3)
    nu = 0 if hw_only else int(rng.integers(0, 2))
    return HWPElement(d, int(a), int(b), int(g), nu)
