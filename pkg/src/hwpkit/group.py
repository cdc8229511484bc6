"""Matrix-free algebra of HW(d), the dihedral group and HWP(d).

Elements are exact tuples ``(alpha, beta, gamma, nu)`` with residues in
``[0, d)``; the multiplication law never touches a matrix.  Subgroups are
enumerated exhaustively (``d <= 9``) through the kernels in ``_backend``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from ._backend import kernels
from .ring import Phase, check_dim

__all__ = [
    "HWPElement", "DihedralElement", "LoopArea", "GroupClosure", "ClosureError",
    "MAX_EXHAUSTIVE_D", "hwp_mul", "hwp_inv", "hwp_order", "identity",
    "area", "loop_area", "commutator", "commutator_hw", "commutator_dihedral",
    "commutator_hwp", "commutator2_hwp", "commutator2_literal", "loop_overlap",
    "dihedral_mul", "dihedral_inv", "hwp_group", "hw_group", "dihedral_group",
    "center_group", "clock_group", "shift_group", "commutator_subgroup",
    "derived_series", "lower_central_series", "semidirect_checks",
]

MAX_EXHAUSTIVE_D = 9


class ClosureError(ValueError):
    """Raised when a series is requested for a group that is not enumerated."""


@dataclass(frozen=True, order=True)
class HWPElement:
    """``D(alpha, beta, gamma) P**nu``; ``nu == 0`` elements form HW(d)."""

    d: int
    alpha: int
    beta: int
    gamma: int = 0
    nu: int = 0

    def __post_init__(self):
        d = check_dim(self.d)
        object.__setattr__(self, "d", d)
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, int(getattr(self, name)) % d)
        object.__setattr__(self, "nu", int(self.nu) % 2)

    def __mul__(self, other: "HWPElement") -> "HWPElement":
        return hwp_mul(self, other)

    def inverse(self) -> "HWPElement":
        return hwp_inv(self)

    @property
    def code(self) -> int:
        return kernels.encode(self.alpha, self.beta, self.gamma, self.nu, self.d)

    @classmethod
    def from_code(cls, code: int, d: int) -> "HWPElement":
        a, b, g, n = kernels.decode(code, d)
        return cls(d, a, b, g, n)

    @property
    def in_hw(self) -> bool:
        return self.nu == 0

    def astuple(self) -> tuple[int, int, int, int]:
        return self.alpha, self.beta, self.gamma, self.nu

    def matrix(self) -> np.ndarray:
        from .operators import dp_operator
        return dp_operator(self.d, self.alpha, self.beta, self.gamma, self.nu)


def identity(d: int) -> HWPElement:
    return HWPElement(d, 0, 0, 0, 0)


def _check_same(*elements) -> int:
    ds = {e.d for e in elements}
    if len(ds) != 1:
        raise ValueError(f"elements from different dimensions: {sorted(ds)}")
    return ds.pop()


def hwp_mul(g1: HWPElement, g2: HWPElement) -> HWPElement:
    d = _check_same(g1, g2)
    s = -1 if g1.nu else 1
    h = (d + 1) // 2
    return HWPElement(
        d,
        g1.alpha + s * g2.alpha,
        g1.beta + s * g2.beta,
        g1.gamma + g2.gamma + h * s * (g1.alpha * g2.beta - g2.alpha * g1.beta),
        g1.nu + g2.nu,
    )


def hwp_inv(g: HWPElement) -> HWPElement:
    s = 1 if g.nu else -1
    return HWPElement(g.d, s * g.alpha, s * g.beta, -g.gamma, g.nu)


def hwp_order(g: HWPElement) -> int:
    e = identity(g.d)
    x, n = g, 1
    while x != e:
        x = x * g
        n += 1
    return n


def commutator(g1: HWPElement, g2: HWPElement) -> HWPElement:
    """Literal ``g1 g2 g1^-1 g2^-1`` through the multiplication law."""
    return g1 * g2 * hwp_inv(g1) * hwp_inv(g2)


def area(x1: int, y1: int, x2: int, y2: int, d: int) -> int:
    """``x1*y2 - x2*y1`` reduced mod d."""
    return (x1 * y2 - x2 * y1) % d


@dataclass(frozen=True)
class LoopArea:
    """Displacement and phase picked up by the commutator of two HWP elements."""

    A: int
    B: int
    Gamma: int
    sign: int
    d: int


def loop_area(g1: HWPElement, g2: HWPElement) -> LoopArea:
    d = _check_same(g1, g2)
    sign = 1 if (g1.nu, g2.nu) == (0, 0) else -1
    return LoopArea(
        A=(2 * area(g1.alpha, g1.nu, g2.alpha, g2.nu, d)) % d,
        B=(2 * area(g1.beta, g1.nu, g2.beta, g2.nu, d)) % d,
        Gamma=(sign * area(g1.alpha, g1.beta, g2.alpha, g2.beta, d)) % d,
        sign=sign,
        d=d,
    )


def commutator_hwp(g1: HWPElement, g2: HWPElement) -> HWPElement:
    """Closed-form commutator; always lands in HW(d) and ignores the gammas."""
    la = loop_area(g1, g2)
    return HWPElement(la.d, la.A, la.B, la.Gamma, 0)


def commutator_hw(g1: HWPElement, g2: HWPElement) -> Phase:
    """Commutator of two HW(d) elements, a pure phase ``omega(a1*b2 - a2*b1)``."""
    if g1.nu or g2.nu:
        raise ValueError("commutator_hw takes HW(d) elements (nu = 0)")
    d = _check_same(g1, g2)
    return Phase.of(area(g1.alpha, g1.beta, g2.alpha, g2.beta, d), d)


def commutator2_hwp(loop1: tuple[HWPElement, HWPElement],
                    loop2: tuple[HWPElement, HWPElement]) -> Phase:
    """Commutator of two commutators; a central phase ``omega(Phi)``."""
    (g1, g2), (g3, g4) = loop1, loop2
    d = _check_same(g1, g2, g3, g4)
    phi = 4 * (area(g1.alpha, g1.nu, g2.alpha, g2.nu, d) * area(g3.beta, g3.nu, g4.beta, g4.nu, d)
               - area(g3.alpha, g3.nu, g4.alpha, g4.nu, d) * area(g1.beta, g1.nu, g2.beta, g2.nu, d))
    return Phase.of(phi, d)


def commutator2_literal(loop1, loop2) -> HWPElement:
    """The 16-factor product behind :func:`commutator2_hwp`."""
    (g1, g2), (g3, g4) = loop1, loop2
    inv = hwp_inv
    factors = [g1, g2, inv(g1), inv(g2), g3, g4, inv(g3), inv(g4),
               g2, g1, inv(g2), inv(g1), g4, g3, inv(g4), inv(g3)]
    out = identity(g1.d)
    for f in factors:
        out = out * f
    return out


def loop_overlap(f, g1: HWPElement, g2: HWPElement, tol: float = 1e-10) -> float:
    """``|<f| [g1, g2] |f>|`` for a unit-norm ket ``f``."""
    f = np.asarray(f, dtype=complex)
    norm2 = float(np.vdot(f, f).real)
    if abs(norm2 - 1) > tol:
        raise ValueError(f"ket must be unit-normalized (norm^2 = {norm2:.6g})")
    L = commutator_hwp(g1, g2).matrix()
    return float(abs(np.vdot(f, L @ f)))


@dataclass(frozen=True, order=True)
class DihedralElement:
    """``R(a, nu)``: rotation for ``nu = 0``, reflection for ``nu = 1``."""

    d: int
    a: int
    nu: int = 0

    def __post_init__(self):
        d = check_dim(self.d)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "a", int(self.a) % d)
        object.__setattr__(self, "nu", int(self.nu) % 2)

    def __mul__(self, other):
        return dihedral_mul(self, other)

    def inverse(self):
        return dihedral_inv(self)

    def embed(self, axis: str = "Z") -> HWPElement:
        """The matching element of HWP(d) along the given axis."""
        if axis == "Z":
            return HWPElement(self.d, self.a, 0, 0, self.nu)
        if axis == "X":
            return HWPElement(self.d, 0, self.a, 0, self.nu)
        raise ValueError(f"axis must be 'Z' or 'X', got {axis!r}")


def dihedral_mul(e1: DihedralElement, e2: DihedralElement) -> DihedralElement:
    d = _check_same(e1, e2)
    s = -1 if e1.nu else 1
    return DihedralElement(d, e1.a + s * e2.a, e1.nu + e2.nu)


def dihedral_inv(e: DihedralElement) -> DihedralElement:
    s = 1 if e.nu else -1
    return DihedralElement(e.d, s * e.a, e.nu)


def commutator_dihedral(e1: DihedralElement, e2: DihedralElement) -> DihedralElement:
    """Closed form: a pure rotation by ``2*(a1*nu2 - a2*nu1)``."""
    d = _check_same(e1, e2)
    return DihedralElement(d, 2 * (e1.a * e2.nu - e2.a * e1.nu), 0)


@dataclass(frozen=True)
class GroupClosure:
    """A subgroup of HWP(d) held as a sorted array of element codes."""

    d: int
    codes: np.ndarray = field(repr=False)
    generators: tuple = ()
    closed: bool = True
    name: str = ""

    @classmethod
    def generate(cls, d: int, generators: Iterable[HWPElement], name: str = "") -> "GroupClosure":
        d = check_dim(d)
        gens = tuple(generators)
        if d > MAX_EXHAUSTIVE_D:
            raise ClosureError(f"exhaustive enumeration is capped at d <= {MAX_EXHAUSTIVE_D}")
        codes = kernels.closure(np.array([g.code for g in gens], dtype=np.int64), d)
        return cls(d, codes, gens, True, name)

    @property
    def order(self) -> int:
        return len(self.codes)

    def __len__(self):
        return len(self.codes)

    def __contains__(self, g: HWPElement) -> bool:
        i = np.searchsorted(self.codes, g.code)
        return bool(i < len(self.codes) and self.codes[i] == g.code)

    def elements(self) -> list[HWPElement]:
        return [HWPElement.from_code(c, self.d) for c in self.codes]

    def same_set(self, other: "GroupClosure") -> bool:
        return np.array_equal(self.codes, other.codes)

    def is_trivial(self) -> bool:
        return self.order == 1


def hwp_group(d: int) -> GroupClosure:
    return GroupClosure.generate(d, [HWPElement(d, 1, 0), HWPElement(d, 0, 1),
                                     HWPElement(d, 0, 0, 0, 1)], "HWP")


def hw_group(d: int) -> GroupClosure:
    return GroupClosure.generate(d, [HWPElement(d, 1, 0), HWPElement(d, 0, 1)], "HW")


def dihedral_group(d: int, axis: str = "Z") -> GroupClosure:
    gens = [DihedralElement(d, 1, 0).embed(axis), DihedralElement(d, 0, 1).embed(axis)]
    return GroupClosure.generate(d, gens, f"Delta_{axis}")


def center_group(d: int) -> GroupClosure:
    return GroupClosure.generate(d, [HWPElement(d, 0, 0, 1)], "G1")


def clock_group(d: int) -> GroupClosure:
    return GroupClosure.generate(d, [HWPElement(d, 1, 0)], "GZ")


def shift_group(d: int) -> GroupClosure:
    return GroupClosure.generate(d, [HWPElement(d, 0, 1)], "GX")


def _require_closed(group: GroupClosure) -> None:
    if not group.closed:
        raise ClosureError(f"group {group.name or '?'} is not closed")
    if group.d > MAX_EXHAUSTIVE_D:
        raise ClosureError(f"exhaustive series need d <= {MAX_EXHAUSTIVE_D}")


def commutator_subgroup(a: GroupClosure, b: GroupClosure, name: str = "") -> GroupClosure:
    """``[A, B]``, the subgroup generated by all commutators."""
    _require_closed(a)
    _require_closed(b)
    comms = kernels.commutator_set(a.codes, b.codes, a.d)
    codes = kernels.closure(comms, a.d)
    return GroupClosure(a.d, codes, (), True, name)


def derived_series(group: GroupClosure, max_length: int = 16) -> list[GroupClosure]:
    """``G, [G,G], [[G,G],[G,G]], ...`` down to the trivial group.

    Raises :class:`ClosureError` when the series stalls above the trivial
    group (not solvable).
    """
    _require_closed(group)
    series = [group]
    while not series[-1].is_trivial():
        nxt = commutator_subgroup(series[-1], series[-1])
        if nxt.same_set(series[-1]) or len(series) > max_length:
            raise ClosureError("derived series stabilised above the trivial group")
        series.append(nxt)
    return series


def lower_central_series(group: GroupClosure) -> tuple[list[GroupClosure], bool]:
    """``G, [G,G], [G,[G,G]], ...`` and whether it reaches the trivial group."""
    _require_closed(group)
    series = [group]
    while not series[-1].is_trivial():
        nxt = commutator_subgroup(group, series[-1])
        if nxt.same_set(series[-1]):
            return series, False
        series.append(nxt)
    return series, True


Mul = Callable[[HWPElement, HWPElement], HWPElement]


def _semidirect_report(elements, normal, complement, mul: Mul, inv) -> dict:
    normal_set = set(normal)
    comp_set = set(complement)
    e = identity(elements[0].d)
    bad_conj = sum(1 for g in elements for n in normal if mul(mul(g, n), inv(g)) not in normal_set)
    comp_closed = all(mul(x, y) in comp_set for x in complement for y in complement)
    counts: dict = {}
    for n in normal:
        for p in complement:
            prod = mul(n, p)
            counts[prod] = counts.get(prod, 0) + 1
    unique = set(counts) == set(elements) and all(c == 1 for c in counts.values())
    return {
        "normal": bad_conj == 0,
        "non_normal_conjugates": bad_conj,
        "complement_subgroup": comp_closed and len(complement) == 2,
        "unique_factorization": unique,
        "trivial_intersection": normal_set & comp_set == {e},
    }


def semidirect_checks(d: int, mul: Mul | None = None) -> dict:
    """Verify HWP(d) = HW(d) x| Z(2) and Delta_d = Z(d) x| Z(2) by enumeration.

    ``mul`` overrides the multiplication law (used for fault injection).
    """
    d = check_dim(d)
    if d > MAX_EXHAUSTIVE_D:
        raise ClosureError(f"exhaustive checks need d <= {MAX_EXHAUSTIVE_D}")
    mul = mul or hwp_mul
    rng = range(d)
    hwp = [HWPElement(d, a, b, g, n) for n in (0, 1) for a in rng for b in rng for g in rng]
    hw = [x for x in hwp if x.nu == 0]
    parity_pair = [identity(d), HWPElement(d, 0, 0, 0, 1)]
    dihedral = [HWPElement(d, a, 0, 0, n) for n in (0, 1) for a in rng]
    rotations = [x for x in dihedral if x.nu == 0]
    report = {
        "HWP": _semidirect_report(hwp, hw, parity_pair, mul, hwp_inv),
        "Delta_Z": _semidirect_report(dihedral, rotations, parity_pair, mul, hwp_inv),
    }
    report["passed"] = all(v for sub in report.values() for k, v in sub.items()
                           if k != "non_normal_conjugates")
    return report
