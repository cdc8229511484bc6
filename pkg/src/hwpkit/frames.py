"""Coherent-state frames of HW(d) (d^2 states) and HWP(d) (2d^2 states).

A frame is stored as an array ``states[nu, alpha, beta]`` of kets, indexed
by canonical residues.  The HW frame has a single ``nu = 0`` slice, which
coincides state by state with the ``nu = 0`` half of the HWP frame.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .group import HWPElement
from .operators import dp_operator, fourier, parity_projectors, position_ket
from .ring import check_dim, omega_table

__all__ = [
    "FiducialError", "Fiducial", "CoherentFrame", "BargmannTable", "GENERICITY_EPS",
    "validate_fiducial", "build_frame", "displacement_closure_check", "bargmann",
    "reconstruct", "scalar_product_via_bargmann", "q_function", "overlap",
    "overlap_direct", "sic_overlap", "frame_operator", "frame_fourier_check",
    "frame_indices",
]

GENERICITY_EPS = 1e-6
KINDS = ("HW", "HWP")


class FiducialError(ValueError):
    def __init__(self, reason: str, message: str):
        self.reason = reason
        super().__init__(message)


@dataclass(frozen=True)
class Fiducial:
    state: np.ndarray = field(repr=False)
    report: dict

    @property
    def d(self) -> int:
        return len(self.state)


def validate_fiducial(s, eps: float = GENERICITY_EPS, normalize: bool = False,
                      tol: float = 1e-10) -> Fiducial:
    """Check that ``s`` is a usable fiducial and collect its genericity figures.

    The state must be unit norm (or ``normalize=True``), overlap no position
    or momentum state completely, and have weight in both parity sectors.
    """
    s = np.array(s, dtype=complex)
    if s.ndim != 1:
        raise FiducialError("shape", "fiducial must be a vector")
    d = check_dim(len(s))
    norm2 = float(np.vdot(s, s).real)
    if normalize:
        if norm2 == 0:
            raise FiducialError("norm", "fiducial is the zero vector")
        s = s / np.sqrt(norm2)
    elif abs(norm2 - 1) > tol:
        raise FiducialError("norm", f"fiducial has norm^2 {norm2:.10g}, expected 1")
    pos = float(np.max(np.abs(s)))
    mom = float(np.max(np.abs(fourier(d).conj().T @ s)))
    even, odd = parity_projectors(d)
    w_even = float(np.linalg.norm(even @ s))
    w_odd = float(np.linalg.norm(odd @ s))
    report = {"input_norm2": norm2, "max_position_overlap": pos,
              "max_momentum_overlap": mom, "even_weight": w_even, "odd_weight": w_odd}
    if pos > 1 - eps:
        raise FiducialError("position-like", f"fiducial is a position state (overlap {pos:.6g})")
    if mom > 1 - eps:
        raise FiducialError("momentum-like", f"fiducial is a momentum state (overlap {mom:.6g})")
    if w_even < eps or w_odd < eps:
        raise FiducialError("parity-eigenstate",
                            f"fiducial is a parity eigenstate (even {w_even:.3g}, odd {w_odd:.3g})")
    s.setflags(write=False)
    return Fiducial(s, report)


def frame_indices(d: int, kind: str = "HWP") -> list[tuple[int, int, int]]:
    """``(alpha, beta, nu)`` in output order: nu-major, then centered alpha, beta."""
    half = (d - 1) // 2
    nus = (0,) if kind == "HW" else (0, 1)
    r = range(-half, half + 1)
    return [(a, b, n) for n in nus for a in r for b in r]


@dataclass(frozen=True)
class CoherentFrame:
    kind: str
    fiducial: Fiducial
    states: np.ndarray = field(repr=False)

    @property
    def d(self) -> int:
        return self.fiducial.d

    @property
    def weight(self) -> float:
        """Normalisation ``1/d`` (HW) or ``1/(2d)`` (HWP) of the resolution of identity."""
        return 1.0 / (self.d * self.states.shape[0])

    def __len__(self):
        return self.states.shape[0] * self.d * self.d

    def state(self, alpha: int, beta: int, nu: int = 0) -> np.ndarray:
        return self.states[nu % 2, alpha % self.d, beta % self.d]

    def flat(self) -> np.ndarray:
        """All states as rows, shape ``(len(frame), d)``."""
        return self.states.reshape(-1, self.d)


def build_frame(kind: str, fiducial) -> CoherentFrame:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if not isinstance(fiducial, Fiducial):
        fiducial = validate_fiducial(fiducial)
    d = fiducial.d
    nus = 1 if kind == "HW" else 2
    states = np.empty((nus, d, d, d), dtype=complex)
    for n in range(nus):
        for a in range(d):
            for b in range(d):
                states[n, a, b] = dp_operator(d, a, b, 0, n) @ fiducial.state
    states.setflags(write=False)
    return CoherentFrame(kind, fiducial, states)


def frame_operator(frame: CoherentFrame) -> np.ndarray:
    S = frame.flat()
    return frame.weight * (S.T @ S.conj())


def displacement_closure_check(frame: CoherentFrame, g: HWPElement) -> dict:
    """Act with ``g`` on every frame state and compare with the predicted state.

    The prediction is ``omega(Gamma) |C; A, B, nu1 + nu2>``.
    """
    d = frame.d
    if g.d != d:
        raise ValueError("element and frame dimensions differ")
    if frame.kind == "HW" and g.nu:
        raise ValueError("the HW frame is only closed under nu = 0 elements")
    w = omega_table(d)
    h = (d + 1) // 2
    s1 = -1 if g.nu else 1
    M = g.matrix()
    worst = 0.0
    for n2 in range(frame.states.shape[0]):
        for a2 in range(d):
            for b2 in range(d):
                A = (g.alpha + s1 * a2) % d
                B = (g.beta + s1 * b2) % d
                phase = (g.gamma + h * s1 * (g.alpha * b2 - a2 * g.beta)) % d
                pred = w[phase] * frame.state(A, B, g.nu + n2)
                worst = max(worst, float(np.max(np.abs(M @ frame.states[n2, a2, b2] - pred))))
    return {"element": g.astuple(), "max_deviation": worst}


@dataclass(frozen=True)
class BargmannTable:
    """Coefficients ``F(alpha, beta, nu) = <C; alpha, beta, nu | f>``."""

    kind: str
    values: np.ndarray = field(repr=False)

    @property
    def d(self) -> int:
        return self.values.shape[1]

    @property
    def weight(self) -> float:
        return 1.0 / (self.d * self.values.shape[0])

    def __getitem__(self, idx) -> complex:
        a, b, *rest = idx
        n = rest[0] if rest else 0
        return complex(self.values[n % 2, a % self.d, b % self.d])

    def rows(self):
        """``(alpha, beta, nu, value)`` in frame output order."""
        for a, b, n in frame_indices(self.d, self.kind):
            yield a, b, n, self[a, b, n]


def bargmann(frame: CoherentFrame, f) -> BargmannTable:
    f = np.asarray(f, dtype=complex)
    if f.shape != (frame.d,):
        raise ValueError(f"ket must have length {frame.d}")
    return BargmannTable(frame.kind, frame.states.conj() @ f)


def reconstruct(frame: CoherentFrame, table: BargmannTable) -> np.ndarray:
    if table.kind != frame.kind or table.values.shape != frame.states.shape[:3]:
        raise ValueError("coefficient table does not match the frame")
    return frame.weight * np.einsum("nab,nabk->k", table.values, frame.states)


def scalar_product_via_bargmann(table_g: BargmannTable, table_f: BargmannTable) -> complex:
    """``<g|f>`` from the two coefficient tables."""
    if table_g.kind != table_f.kind or table_g.values.shape != table_f.values.shape:
        raise ValueError("tables belong to different frames")
    return complex(table_f.weight * np.sum(table_g.values.conj() * table_f.values))


def q_function(table: BargmannTable) -> np.ndarray:
    return np.abs(table.values) ** 2


def _idx3(idx):
    a, b, *rest = idx
    return a, b, (rest[0] if rest else 0) % 2


def overlap(frame: CoherentFrame, idx1, idx2) -> float:
    """``|<C; idx1 | C; idx2>|^2`` from the fiducial components alone."""
    d = frame.d
    a1, b1, n1 = _idx3(idx1)
    a2, b2, n2 = _idx3(idx2)
    s = frame.fiducial.state
    w = omega_table(d)
    sgn1 = -1 if n1 else 1
    sgn2 = -1 if n2 else 1
    half = (d - 1) // 2
    total = 0j
    for m in range(-half, half + 1):
        k = sgn1 * sgn2 * m - sgn1 * b1 + sgn1 * b2
        phase = (sgn2 * (a2 - a1) * m) % d
        total += w[phase] * np.conj(s[(k + half) % d]) * s[m + half]
    return float(abs(total) ** 2)


def overlap_direct(frame: CoherentFrame, idx1, idx2) -> float:
    return float(abs(np.vdot(frame.state(*_idx3(idx1)), frame.state(*_idx3(idx2)))) ** 2)


def sic_overlap(d: int, kind: str = "HWP") -> float:
    """Common value of all distinct overlaps if the frame were equiangular."""
    d = check_dim(d)
    return 1 / (d + 1) if kind == "HW" else (2 * d - 1) / (2 * d * d - 1)


def _fourier_kernel(d: int, sign: int) -> np.ndarray:
    """``K[g, e, a, b] = omega(sign * h * (b*g - a*e))``.

    The same kernel serves both directions ``nu -> nu + 1``; an extra
    ``(-1)**nu`` in the exponent fails for ``nu = 1``.
    """
    w = omega_table(d)
    h = (d + 1) // 2
    s = sign
    r = np.arange(d)
    g, e, a, b = np.ix_(r, r, r, r)
    return w[(s * h * (b * g - a * e)) % d]


def frame_fourier_check(frame: CoherentFrame, f=None) -> dict:
    """Check that the two halves of an HWP frame are Fourier partners.

    Covers the states themselves, the Bargmann coefficients of ``f`` (a
    fixed test ket when omitted) and the round trip back to the start.
    """
    if frame.kind != "HWP":
        raise ValueError("Fourier duality needs the HWP frame")
    d = frame.d
    if f is None:
        f = position_ket(d, 0) + 0.5j * position_ket(d, 1)
    coeffs = bargmann(frame, f).values
    state_dev = coeff_dev = trip_dev = 0.0
    for nu in (0, 1):
        K = _fourier_kernel(d, +1)
        moved = np.einsum("geab,abk->gek", K, frame.states[nu]) / d
        state_dev = max(state_dev, float(np.max(np.abs(moved - frame.states[1 - nu]))))
        Kc = _fourier_kernel(d, -1)
        moved_c = np.einsum("geab,ab->ge", Kc, coeffs[nu]) / d
        coeff_dev = max(coeff_dev, float(np.max(np.abs(moved_c - coeffs[1 - nu]))))
        back = np.einsum("geab,abk->gek", _fourier_kernel(d, +1), moved) / d
        trip_dev = max(trip_dev, float(np.max(np.abs(back - frame.states[nu]))))
    return {"states": state_dev, "coefficients": coeff_dev, "round_trip": trip_dev,
            "max_deviation": max(state_dev, coeff_dev, trip_dev)}
