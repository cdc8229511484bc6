"""Wigner, Weyl and unified Wigner-Weyl functions on the discrete torus.

Tables are dense arrays indexed by canonical residues: ``t[alpha, beta]``
for Wigner/Weyl tables and ``t[nu, alpha, beta]`` for the unified table,
whose ``nu = 0`` slice is the Weyl function and whose ``nu = 1`` slice is
the Wigner function at halved arguments.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .operators import displaced_parity, displacement, dp_operator, momentum_ket, parity, position_ket
from .operators import parity_projectors
from .ring import check_dim

__all__ = [
    "WWTable", "wigner", "weyl", "wigner_table", "weyl_table", "unified_ww",
    "ww_fourier", "expand_displacements", "expand_parities", "from_displacements",
    "from_parities", "expand_unified", "from_unified", "weyl_convolution",
    "moyal_star", "unified_product", "marginals", "ww_fourier_table",
    "operator_marginals", "operator_fourier_duality", "orthogonality",
]


def _dim(theta) -> int:
    theta = np.asarray(theta)
    if theta.ndim != 2 or theta.shape[0] != theta.shape[1]:
        raise ValueError("operator must be a square matrix")
    return check_dim(theta.shape[0])


def _flip(t: np.ndarray, sign: int) -> np.ndarray:
    """``out[a, b] = t[sign*a, sign*b]`` on the last two axes."""
    if sign == 1:
        return t
    d = t.shape[-1]
    idx = (-np.arange(d)) % d
    return t[..., idx, :][..., idx]


@dataclass(frozen=True)
class WWTable:
    values: np.ndarray = field(repr=False)
    source: str = ""

    @property
    def d(self) -> int:
        return self.values.shape[-1]

    def __getitem__(self, idx) -> complex:
        a, b, n = idx
        return complex(self.values[n % 2, a % self.d, b % self.d])

    @property
    def weyl(self) -> np.ndarray:
        return self.values[0]

    @property
    def wigner(self) -> np.ndarray:
        """``W(theta; alpha, beta)`` recovered from the ``nu = 1`` slice."""
        d = self.d
        idx = (2 * np.arange(d)) % d
        return self.values[1][np.ix_(idx, idx)]


def wigner(theta, alpha: int, beta: int) -> complex:
    """``Tr[theta P(alpha, beta)]``."""
    d = _dim(theta)
    return complex(np.trace(np.asarray(theta) @ displaced_parity(d, alpha, beta)))


def weyl(theta, alpha: int, beta: int) -> complex:
    """``Tr[theta D(alpha, beta, 0)]``."""
    d = _dim(theta)
    return complex(np.trace(np.asarray(theta) @ displacement(d, alpha, beta)))


def _trace_table(theta, nu: int, scale: int = 1) -> np.ndarray:
    theta = np.asarray(theta, dtype=complex)
    d = _dim(theta)
    out = np.empty((d, d), dtype=complex)
    for a in range(d):
        for b in range(d):
            # Tr[A B] without forming the product
            out[a, b] = np.sum(theta * dp_operator(d, scale * a, scale * b, 0, nu).T)
    return out


def wigner_table(theta) -> np.ndarray:
    return _trace_table(theta, 1, scale=2)


def weyl_table(theta) -> np.ndarray:
    return _trace_table(theta, 0)


def unified_ww(theta, source: str = "") -> WWTable:
    """``Tr[theta D(alpha, beta, 0, nu)]`` over the whole ``(alpha, beta, nu)`` grid."""
    return WWTable(np.stack([_trace_table(theta, 0), _trace_table(theta, 1)]), source)


def ww_fourier(table, nu: int = 0, sign: int = 1) -> np.ndarray:
    """Map the ``nu`` slice of a unified table onto the predicted ``nu + 1`` slice.

    Accepts a :class:`WWTable` or a single ``(d, d)`` slice.  The kernel is
    ``omega(h*(beta*gamma - alpha*delta))`` for both directions: a factor
    ``(-1)**nu`` in the exponent breaks the ``nu = 1 -> 0`` direction, as the
    operator-level check :func:`operator_fourier_duality` shows.
    """
    t = table.values[nu % 2] if isinstance(table, WWTable) else np.asarray(table)
    return kernels.ww_fourier(np.ascontiguousarray(t, dtype=complex), sign, t.shape[-1])


def ww_fourier_table(table: WWTable) -> WWTable:
    """Both slices rebuilt from their Fourier partners."""
    return WWTable(np.stack([ww_fourier(table, 1), ww_fourier(table, 0)]), table.source)


def expand_displacements(theta) -> np.ndarray:
    """Coefficients ``c[a, b] = W~(theta; -a, -b)`` of ``theta = (1/d) sum c D(a, b, 0)``."""
    return _flip(weyl_table(theta), -1)


def from_displacements(coeffs) -> np.ndarray:
    coeffs = np.asarray(coeffs)
    d = coeffs.shape[-1]
    return sum(coeffs[a, b] * displacement(d, a, b) for a in range(d) for b in range(d)) / d


def expand_parities(theta) -> np.ndarray:
    """Coefficients ``W(theta; a, b)`` of ``theta = (1/d) sum W P(a, b)``."""
    return wigner_table(theta)


def from_parities(coeffs) -> np.ndarray:
    coeffs = np.asarray(coeffs)
    d = coeffs.shape[-1]
    return sum(coeffs[a, b] * displaced_parity(d, a, b) for a in range(d) for b in range(d)) / d


def _coefficients(values: np.ndarray) -> np.ndarray:
    """``c[nu, a, b] = WW(theta; (-1)**(nu+1) a, (-1)**(nu+1) b, nu)``; an involution."""
    return np.stack([_flip(values[0], -1), values[1]])


def expand_unified(theta, lam: float = 0.5) -> np.ndarray:
    """Weighted redundant expansion over all ``2d^2`` displacement-parity operators.

    Returns ``k[nu, a, b]`` with ``theta = (1/d) sum k D(a, b, 0, nu)``; the
    ``nu = 0`` half carries weight ``lam`` and the ``nu = 1`` half ``1 - lam``.
    """
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lam must lie in [0, 1], got {lam}")
    c = _coefficients(unified_ww(theta).values)
    return np.stack([lam * c[0], (1 - lam) * c[1]])


def from_unified(coeffs) -> np.ndarray:
    coeffs = np.asarray(coeffs)
    d = coeffs.shape[-1]
    return sum(coeffs[n, a, b] * dp_operator(d, a, b, 0, n)
               for n in range(2) for a in range(d) for b in range(d)) / d


def weyl_convolution(t1, t2) -> np.ndarray:
    """Weyl table of ``theta1 @ theta2`` from the Weyl tables of the factors."""
    t1 = np.ascontiguousarray(t1, dtype=complex)
    return kernels.weyl_convolution(t1, np.ascontiguousarray(t2, dtype=complex), t1.shape[-1])


def moyal_star(w1, w2) -> np.ndarray:
    """Wigner table of ``theta1 @ theta2`` (discrete Moyal star product)."""
    w1 = np.ascontiguousarray(w1, dtype=complex)
    return kernels.moyal_star(w1, np.ascontiguousarray(w2, dtype=complex), w1.shape[-1])


def unified_product(t1: WWTable, t2: WWTable) -> WWTable:
    """Unified table of ``theta1 @ theta2``.

    Works on the expansion coefficients ``c[nu, a, b]`` (see
    :func:`expand_unified` at ``lam = 1/2``).  With ``s1 = (-1)**nu1`` the
    product ``D(a1, b1, 0, nu1) D(a2, b2, 0, nu2)`` is
    ``omega(h*s1*(a1*b2 - a2*b1)) D(a1 + s1*a2, b1 + s1*b2, 0, nu1 + nu2)``.
    Solving for the first factor at output ``(a, b, nu)`` reads it at
    ``(a - s1*a2, b - s1*b2, nu - nu2)`` with phase ``omega(h*s1*(a*b2 - a2*b))``.
    This sign pattern was fixed against the matrix-product oracle.
    """
    c1 = _coefficients(t1.values)
    c2 = _coefficients(t2.values)
    c12 = kernels.unified_convolution(np.ascontiguousarray(c1), np.ascontiguousarray(c2), t1.d)
    return WWTable(_coefficients(c12), "product")


def marginals(theta) -> dict:
    """Every marginal identity of the unified table, as max deviations."""
    theta = np.asarray(theta, dtype=complex)
    d = _dim(theta)
    h = (d + 1) // 2
    T = unified_ww(theta).values
    P = parity(d)
    even, odd = parity_projectors(d)
    dev = {"momentum": 0.0, "position": 0.0, "total": 0.0}
    for nu in range(2):
        # Tr[theta |k><k| P**(nu+1)] = <k|P**(nu+1) theta|k>; P must sit left of theta
        tp = (P if nu == 0 else np.eye(d)) @ theta
        for a in range(d):
            k = momentum_ket(d, h * a)
            dev["momentum"] = max(dev["momentum"], abs(T[nu, a, :].sum() / d - np.vdot(k, tp @ k)))
        for b in range(d):
            k = position_ket(d, h * b)
            dev["position"] = max(dev["position"], abs(T[nu, :, b].sum() / d - np.vdot(k, tp @ k)))
        dev["total"] = max(dev["total"], abs(T[nu].sum() / d - np.trace(tp)))
    dev["even_sector"] = abs(T.sum() / (2 * d) - np.trace(theta @ even))
    dev["odd_sector"] = abs((T[1].sum() - T[0].sum()) / (2 * d) - np.trace(theta @ odd))
    dev = {k: float(v) for k, v in dev.items()}
    dev["max_deviation"] = max(dev.values())
    return dev


def operator_marginals(d: int) -> dict:
    """Operator-level marginal sums of the ``D(a, b, 0, nu)`` family, as max deviations."""
    d = check_dim(d)
    h = (d + 1) // 2
    P = parity(d)
    even, odd = parity_projectors(d)
    ops = np.array([[[dp_operator(d, a, b, 0, n) for b in range(d)] for a in range(d)] for n in range(2)])
    dev = {"momentum": 0.0, "position": 0.0, "total": 0.0}
    for nu in range(2):
        pn = P if nu == 0 else np.eye(d)
        for a in range(d):
            k = momentum_ket(d, h * a)
            dev["momentum"] = max(dev["momentum"], np.abs(ops[nu, a].sum(0) / d - np.outer(k, k.conj()) @ pn).max())
            k = position_ket(d, h * a)
            dev["position"] = max(dev["position"], np.abs(ops[nu, :, a].sum(0) / d - np.outer(k, k.conj()) @ pn).max())
        dev["total"] = max(dev["total"], np.abs(ops[nu].sum((0, 1)) / d - pn).max())
    dev["even_sector"] = np.abs(ops.sum((0, 1, 2)) / (2 * d) - even).max()
    dev["odd_sector"] = np.abs((ops[1].sum((0, 1)) - ops[0].sum((0, 1))) / (2 * d) - odd).max()
    dev = {k: float(v) for k, v in dev.items()}
    dev["max_deviation"] = max(dev.values())
    return dev


def operator_fourier_duality(d: int, sign: int = 1) -> float:
    """Max deviation of the operator-level Fourier map between the two slices.

    ``sign = -1`` flips the kernel exponent; only useful for fault injection.
    """
    d = check_dim(d)
    h = (d + 1) // 2
    ops = np.array([[[dp_operator(d, a, b, 0, n) for b in range(d)] for a in range(d)] for n in range(2)])
    r = np.arange(d)
    worst = 0.0
    for nu in range(2):
        s = sign * h
        for g in range(d):
            for e in range(d):
                ph = np.exp(2j * np.pi * ((s * (r[None, :] * g - r[:, None] * e)) % d) / d)
                lhs = np.tensordot(ph, ops[nu], axes=([0, 1], [0, 1])) / d
                worst = max(worst, float(np.abs(lhs - ops[1 - nu, g, e]).max()))
    return worst


def orthogonality(d: int) -> float:
    """Max deviation of ``(1/2d) sum D_ij(s a, s b, 0, nu) D_kl(a, b, 0, nu)`` from ``delta_il delta_jk``."""
    d = check_dim(d)
    acc = np.zeros((d, d, d, d), dtype=complex)
    for n in range(2):
        s = -1 if n == 0 else 1
        for a in range(d):
            for b in range(d):
                acc += np.einsum("ij,kl->ijkl", dp_operator(d, s * a, s * b, 0, n), dp_operator(d, a, b, 0, n))
    acc /= 2 * d
    eye = np.eye(d)
    return float(np.abs(acc - np.einsum("il,jk->ijkl", eye, eye)).max())
