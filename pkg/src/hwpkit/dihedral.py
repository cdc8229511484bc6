"""Operator representations of the dihedral group along the Z and X axes."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import clock_z, fourier, parity, shift_x
from .ring import check_dim

__all__ = ["DihedralRep", "rep_element", "wz_function", "wx_function", "marginal_rep"]


@dataclass(frozen=True)
class DihedralRep:
    """``Z**a P**nu`` (axis ``"Z"``) or ``X**a P**nu`` (axis ``"X"``).

    The X-axis representation is obtained from the Z-axis one by Fourier
    conjugation, ``X**a P**nu = F^dag Z**a P**nu F``.
    """

    axis: str
    d: int

    def __post_init__(self):
        if self.axis not in ("Z", "X"):
            raise ValueError(f"axis must be 'Z' or 'X', got {self.axis!r}")
        object.__setattr__(self, "d", check_dim(self.d))

    def __call__(self, a: int, nu: int) -> np.ndarray:
        return rep_element(self, a, nu)


def _z_element(d: int, a: int, nu: int) -> np.ndarray:
    M = clock_z(d, a)
    return M @ parity(d) if nu % 2 else M


def rep_element(rep: DihedralRep, a: int, nu: int) -> np.ndarray:
    z = _z_element(rep.d, a, nu)
    if rep.axis == "Z":
        return z
    F = fourier(rep.d)
    return F.conj().T @ z @ F


def x_element_direct(d: int, b: int, nu: int) -> np.ndarray:
    """``X**b P**nu`` as a plain product, kept for cross-checking."""
    M = shift_x(d, b)
    return M @ parity(d) if nu % 2 else M


def wz_function(theta, a: int, nu: int) -> complex:
    """``Tr[theta Z**a P**nu]``."""
    theta = np.asarray(theta)
    return complex(np.trace(theta @ rep_element(DihedralRep("Z", theta.shape[0]), a, nu)))


def wx_function(theta, b: int, nu: int) -> complex:
    """``Tr[theta X**b P**nu]``."""
    theta = np.asarray(theta)
    return complex(np.trace(theta @ rep_element(DihedralRep("X", theta.shape[0]), b, nu)))


def marginal_rep(rep: DihedralRep, nu: int) -> np.ndarray:
    """``(1/d) sum_a rep(a, nu)``; the projector onto ``|X;0>`` on the Z axis."""
    return sum(rep_element(rep, a, nu) for a in range(rep.d)) / rep.d
