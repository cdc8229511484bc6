"""Named identity checks grouped into suites, with a JSON-ready report.

Every check returns the largest deviation it saw; exact (integer) checks
return the number of mismatches.  A check passes when its deviation is at
most its tolerance.  ``faults`` names checks whose computation should be
sabotaged on purpose, to prove that the harness can fail.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.linalg

from . import dihedral as dh
from . import frames as fr
from . import group as gp
from . import operators as op
from . import wigner as ww
from .sampling import (random_density, random_element, random_fiducial, random_hermitian,
                       random_ket, random_operator)

__all__ = ["Check", "CHECKS", "SUITES", "manifest", "run_suite", "FAULTABLE"]

SUITES = ("operators", "group", "frames", "ww")
ALL_D = (3, 5, 7)
GROUP_D = (3, 5)


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    description: str
    fn: Callable[[int, np.random.Generator, bool], float]
    dims: tuple[int, ...] = ALL_D
    tol: float = 1e-10
    faultable: bool = False


CHECKS: list[Check] = []


def _check(suite, name, description, dims=ALL_D, tol=1e-10, faultable=False):
    def deco(fn):
        CHECKS.append(Check(name, suite, description, fn, dims, tol, faultable))
        return fn
    return deco


def _dev(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


# operators ---------------------------------------------------------------

@_check("operators", "weyl-commutation", "X^b Z^a = omega(-ab) Z^a X^b, phase as exact exponent")
def _weyl_commutation(d, rng, fault):
    bad = 0
    for a in range(d):
        for b in range(d):
            lhs = gp.HWPElement(d, 0, b) * gp.HWPElement(d, a, 0)
            rhs = gp.HWPElement(d, a, 0, -a * b) * gp.HWPElement(d, 0, b)
            bad += lhs != rhs
            M = op.shift_x(d, b) @ op.clock_z(d, a)
            bad += _dev(M, np.exp(-2j * np.pi * a * b / d) * op.clock_z(d, a) @ op.shift_x(d, b)) > 1e-10
    return float(bad)


@_check("operators", "fourier-intertwining", "Z^a = F X^a F^dag")
def _fourier_intertwining(d, rng, fault):
    F = op.fourier(d)
    return max(_dev(op.clock_z(d, a), F @ op.shift_x(d, a) @ F.conj().T) for a in range(d))


@_check("operators", "parity-conjugation", "P^nu D(a, b, g) P^nu = D((-1)^nu a, (-1)^nu b, g)")
def _parity_conjugation(d, rng, fault):
    P = op.parity(d)
    worst = 0.0
    for a, b, g in itertools.product(range(d), repeat=3):
        worst = max(worst, _dev(P @ op.displacement(d, a, b, g) @ P, op.displacement(d, -a, -b, g)))
    return worst


@_check("operators", "closed-form-action",
        "closed-form action of D(a, b, g, nu) on every position and momentum ket")
def _closed_form_action(d, rng, fault):
    worst = 0.0
    for a, b, g, n in itertools.product(range(d), range(d), range(d), range(2)):
        M = op.dp_operator(d, a, b, g, n)
        for j in range(-(d // 2), d // 2 + 1):
            ph, tgt = op.dp_action(d, a, b, g, n, j)
            pred = np.exp(2j * np.pi * ph / d) * op.position_ket(d, tgt)
            worst = max(worst, _dev(M @ op.position_ket(d, j), pred))
            ph, tgt = op.dp_action_momentum(d, a, b, g, n, j)
            pred = np.exp(2j * np.pi * ph / d) * op.momentum_ket(d, tgt)
            worst = max(worst, _dev(M @ op.momentum_ket(d, j), pred))
    return worst


@_check("operators", "parity-time-invariance", "<P> is constant under a parity-symmetric Hamiltonian")
def _parity_time_invariance(d, rng, fault):
    P = op.parity(d)
    A = random_hermitian(rng, d)
    h = (A + P @ A @ P) / 2
    rho = random_density(rng, d)
    p0 = np.trace(rho @ P)
    worst = 0.0
    for t in np.linspace(0.1, 5.0, 7):
        U = scipy.linalg.expm(-1j * h * t)
        worst = max(worst, abs(np.trace(U @ rho @ U.conj().T @ P) - p0))
    return float(worst)


@_check("operators", "stroboscopic-hamiltonian",
        "exp(i h 2pi/d) recovers D(a, b, 0, nu) from its principal-log Hamiltonian", tol=1e-8)
def _stroboscopic(d, rng, fault):
    worst = 0.0
    for a, b, n in itertools.product(range(d), range(d), range(2)):
        U = op.dp_operator(d, a, b, 0, n)
        h = op.principal_log_hamiltonian(U)
        worst = max(worst, _dev(scipy.linalg.expm(1j * h * 2 * np.pi / d), U))
    return worst


@_check("operators", "dihedral-law", "Z- and X-axis dihedral representations obey the abstract law")
def _dihedral_law(d, rng, fault):
    worst = 0.0
    for axis in ("Z", "X"):
        rep = dh.DihedralRep(axis, d)
        for a1, n1, a2, n2 in itertools.product(range(d), range(2), range(d), range(2)):
            e = gp.DihedralElement(d, a1, n1) * gp.DihedralElement(d, a2, n2)
            worst = max(worst, _dev(rep(a1, n1) @ rep(a2, n2), rep(e.a, e.nu)))
    return worst


@_check("operators", "dihedral-x-axis", "Fourier-conjugated X-axis elements equal X^b P^nu")
def _dihedral_x(d, rng, fault):
    rep = dh.DihedralRep("X", d)
    return max(_dev(rep(b, n), dh.x_element_direct(d, b, n)) for b in range(d) for n in range(2))


@_check("operators", "dihedral-order", "every dihedral element satisfies z^(2d) = 1")
def _dihedral_order(d, rng, fault):
    rep = dh.DihedralRep("Z", d)
    I = np.eye(d)
    return max(_dev(np.linalg.matrix_power(rep(a, n), 2 * d), I) for a in range(d) for n in range(2))


@_check("operators", "dihedral-marginal", "(1/d) sum_a z(a, nu) = |X;0><X;0| and the matching trace marginal")
def _dihedral_marginal(d, rng, fault):
    k = op.position_ket(d, 0)
    proj = np.outer(k, k.conj())
    theta = random_operator(rng, d)
    worst = 0.0
    for n in range(2):
        worst = max(worst, _dev(dh.marginal_rep(dh.DihedralRep("Z", d), n), proj))
        s = sum(dh.wz_function(theta, a, n) for a in range(d)) / d
        worst = max(worst, abs(s - np.vdot(k, theta @ k)))
    return float(worst)


# group -------------------------------------------------------------------

@_check("group", "homomorphism", "matrix of a product equals the product of matrices (200 random pairs)",
        faultable=True)
def _homomorphism(d, rng, fault):
    worst = 0.0
    for _ in range(200):
        g1, g2 = random_element(rng, d), random_element(rng, d)
        prod = (g2 * g1) if fault else (g1 * g2)
        worst = max(worst, _dev(prod.matrix(), g1.matrix() @ g2.matrix()))
    return worst


def _tyu_bad(f, g, h) -> int:
    c = gp.commutator
    e = gp.identity(f.d)
    bad = gp.hwp_inv(c(g, h)) != c(h, g)
    bad += c(g, h) * h * g != g * h
    bad += c(f, g * h) * c(g, h * f) * c(h, f * g) != e
    return int(bad)


@_check("group", "commutator-identities",
        "[g,h]^-1 = [h,g], [g,h]hg = gh, [f,gh][g,hf][h,fg] = 1 (exhaustive d=3 dihedral, random otherwise)")
def _commutator_identities(d, rng, fault):
    if d == 3:
        elems = [gp.HWPElement(d, a, 0, 0, n) for a in range(d) for n in range(2)]
        triples = itertools.product(elems, repeat=3)
    else:
        triples = ((random_element(rng, d), random_element(rng, d), random_element(rng, d))
                   for _ in range(300))
    return float(sum(_tyu_bad(*t) for t in triples))


@_check("group", "commutator-closed-form", "closed-form HWP commutator equals the literal product")
def _commutator_closed(d, rng, fault):
    if d == 3:
        elems = [gp.HWPElement.from_code(c, d) for c in range(2 * d ** 3)]
        pairs = itertools.product(elems, repeat=2)
    else:
        pairs = ((random_element(rng, d), random_element(rng, d)) for _ in range(500))
    return float(sum(gp.commutator(g1, g2) != gp.commutator_hwp(g1, g2) for g1, g2 in pairs))


@_check("group", "area-bilinearity", "the symplectic area is bilinear in its first slot (exhaustive)",
        dims=(3,))
def _area_bilinear(d, rng, fault):
    bad = 0
    for x1, y1, u1, v1, x2, y2 in itertools.product(range(d), repeat=6):
        lhs = gp.area(x1 + u1, y1 + v1, x2, y2, d)
        bad += lhs != (gp.area(x1, y1, x2, y2, d) + gp.area(u1, v1, x2, y2, d)) % d
    return float(bad)


@_check("group", "commutator-restriction", "HWP commutator on (a, 0, nu) inputs equals the embedded dihedral one")
def _commutator_restriction(d, rng, fault):
    bad = 0
    for a1, n1, a2, n2 in itertools.product(range(d), range(2), range(d), range(2)):
        lhs = gp.commutator_hwp(gp.HWPElement(d, a1, 0, 0, n1), gp.HWPElement(d, a2, 0, 0, n2))
        rhs = gp.commutator_dihedral(gp.DihedralElement(d, a1, n1), gp.DihedralElement(d, a2, n2))
        bad += lhs != rhs.embed("Z")
    return float(bad)


@_check("group", "double-commutator", "closed-form commutator of commutators equals the 16-factor product",
        dims=GROUP_D)
def _double_commutator(d, rng, fault):
    bad = 0
    for _ in range(100):
        g = [random_element(rng, d) for _ in range(4)]
        lit = gp.commutator2_literal((g[0], g[1]), (g[2], g[3]))
        ph = gp.commutator2_hwp((g[0], g[1]), (g[2], g[3]))
        bad += lit != gp.HWPElement(d, 0, 0, ph.exponent.value, 0)
    return float(bad)


@_check("group", "derived-series", "derived-series sizes of HWP(d), HW(d) and the dihedral group",
        dims=GROUP_D)
def _derived_series(d, rng, fault):
    got = [[g.order for g in gp.derived_series(G)]
           for G in (gp.hwp_group(d), gp.hw_group(d), gp.dihedral_group(d))]
    want = [[2 * d ** 3, d ** 3, d, 1], [d ** 3, d, 1], [2 * d, d, 1]]
    return float(sum(a != b for a, b in zip(got, want)))


@_check("group", "lower-central-series", "HW(d) is nilpotent; the HWP(d) series stalls at size d^3",
        dims=GROUP_D)
def _lower_central(d, rng, fault):
    hw, hw_nil = gp.lower_central_series(gp.hw_group(d))
    hwp, hwp_nil = gp.lower_central_series(gp.hwp_group(d))
    return float((not hw_nil) + hwp_nil + (hwp[-1].order != d ** 3))


def _broken_mul(g1, g2):
    # drops the area phase, so HW(d) is no longer closed under conjugation consistently
    p = gp.hwp_mul(g1, g2)
    return gp.HWPElement(p.d, p.alpha, p.beta, (g1.gamma + g2.gamma + g1.nu) % p.d, p.nu)


@_check("group", "semidirect-product", "normality, factorisation and trivial intersection for both semidirect products",
        dims=GROUP_D, faultable=True)
def _semidirect(d, rng, fault):
    rep = gp.semidirect_checks(d, mul=_broken_mul if fault else None)
    return 0.0 if rep["passed"] else 1.0


# frames ------------------------------------------------------------------

@_check("frames", "frame-resolution", "resolution of identity for both frames, 20 random fiducials")
def _frame_resolution(d, rng, fault):
    worst = 0.0
    for _ in range(20):
        s = random_fiducial(rng, d)
        for kind in fr.KINDS:
            worst = max(worst, _dev(fr.frame_operator(fr.build_frame(kind, s)), np.eye(d)))
    return worst


@_check("frames", "general-resolution", "(1/2d) sum D theta D^dag / Tr theta = 1")
def _general_resolution(d, rng, fault):
    theta = random_operator(rng, d) + d * np.eye(d)
    acc = np.zeros((d, d), dtype=complex)
    for n, a, b in itertools.product(range(2), range(d), range(d)):
        D = op.dp_operator(d, a, b, 0, n)
        acc += D @ theta @ D.conj().T
    return _dev(acc / (2 * d * np.trace(theta)), np.eye(d))


@_check("frames", "subframe", "the nu = 0 half of the HWP frame is the HW frame")
def _subframe(d, rng, fault):
    s = random_fiducial(rng, d)
    return _dev(fr.build_frame("HWP", s).states[0], fr.build_frame("HW", s).states[0])


@_check("frames", "bargmann-identities", "reconstruction, norm and scalar product through Bargmann coefficients")
def _bargmann(d, rng, fault):
    s = random_fiducial(rng, d)
    f, g = random_ket(rng, d), random_ket(rng, d)
    worst = 0.0
    for kind in fr.KINDS:
        frame = fr.build_frame(kind, s)
        tf, tg = fr.bargmann(frame, f), fr.bargmann(frame, g)
        worst = max(worst, _dev(fr.reconstruct(frame, tf), f),
                    abs(tf.weight * fr.q_function(tf).sum() - 1),
                    abs(fr.scalar_product_via_bargmann(tg, tf) - np.vdot(g, f)))
    return float(worst)


@_check("frames", "overlap-closed-form", "closed-form coherent-state overlaps equal direct inner products")
def _overlaps(d, rng, fault):
    frame = fr.build_frame("HWP", random_fiducial(rng, d))
    worst = 0.0
    for _ in range(100):
        i1 = tuple(int(x) for x in (*rng.integers(0, d, 2), rng.integers(0, 2)))
        i2 = tuple(int(x) for x in (*rng.integers(0, d, 2), rng.integers(0, 2)))
        worst = max(worst, abs(fr.overlap(frame, i1, i2) - fr.overlap_direct(frame, i1, i2)))
    return worst


@_check("frames", "frame-fourier", "the two halves of the HWP frame and their coefficients are Fourier partners")
def _frame_fourier(d, rng, fault):
    return fr.frame_fourier_check(fr.build_frame("HWP", random_fiducial(rng, d)), random_ket(rng, d))["max_deviation"]


@_check("frames", "displacement-closure", "HWP elements permute frame states up to a predicted phase")
def _displacement_closure(d, rng, fault):
    frame = fr.build_frame("HWP", random_fiducial(rng, d))
    return max(fr.displacement_closure_check(frame, random_element(rng, d))["max_deviation"] for _ in range(10))


# ww ----------------------------------------------------------------------

@_check("ww", "ww-restriction", "unified table restricts to Weyl, Wigner and both dihedral functions")
def _ww_restriction(d, rng, fault):
    theta = random_operator(rng, d)
    T = ww.unified_ww(theta)
    h = (d + 1) // 2
    worst = max(_dev(T.weyl, ww.weyl_table(theta)), _dev(T.wigner, ww.wigner_table(theta)))
    for x, n in itertools.product(range(d), range(2)):
        worst = max(worst, abs(T[x, 0, n] - dh.wz_function(theta, x, n)),
                    abs(T[0, x, n] - dh.wx_function(theta, x, n)))
        wig = ww.wigner(theta, h * x, 0) if n else ww.weyl(theta, x, 0)
        worst = max(worst, abs(dh.wz_function(theta, x, n) - wig))
    return float(worst)


@_check("ww", "unified-fourier", "operator-level Fourier map between the nu = 0 and nu = 1 operator families",
        faultable=True)
def _unified_fourier(d, rng, fault):
    return ww.operator_fourier_duality(d, sign=-1 if fault else 1)


@_check("ww", "table-fourier", "Fourier map between the two slices of a unified table, and its round trip",
        faultable=True)
def _table_fourier(d, rng, fault):
    T = ww.unified_ww(random_operator(rng, d))
    sign = -1 if fault else 1
    worst = max(_dev(ww.ww_fourier(T, n, sign), T.values[1 - n]) for n in range(2))
    back = ww.ww_fourier(ww.ww_fourier(T, 0, sign), 1, sign)
    return max(worst, _dev(back, T.values[0]))


@_check("ww", "orthogonality", "orthogonality of the 2d^2 operators D(a, b, 0, nu), exhaustive")
def _orthogonality(d, rng, fault):
    return ww.orthogonality(d)


@_check("ww", "operator-marginals", "row, column, total and parity-sector sums of the operator family")
def _operator_marginals(d, rng, fault):
    return ww.operator_marginals(d)["max_deviation"]


@_check("ww", "ww-marginals", "row, column, total and parity-sector sums of the unified table")
def _ww_marginals(d, rng, fault):
    worst = ww.marginals(random_operator(rng, d))["max_deviation"]
    rho = random_density(rng, d)
    T = ww.unified_ww(rho).values[1]
    # at nu = 1 the row and column marginals of a density matrix are probabilities
    for m in (T.sum(0) / d, T.sum(1) / d):
        worst = max(worst, float(np.abs(m.imag).max()), float(max(0.0, -m.real.min())), abs(m.sum() - 1))
    return max(worst, ww.marginals(rho)["max_deviation"])


@_check("ww", "wigner-real", "the Wigner slice of a Hermitian operator is real")
def _wigner_real(d, rng, fault):
    return float(np.abs(ww.unified_ww(random_hermitian(rng, d)).values[1].imag).max())


@_check("ww", "expansions", "displacement, parity and weighted unified expansions reconstruct the operator")
def _expansions(d, rng, fault):
    theta = random_operator(rng, d)
    worst = max(_dev(ww.from_displacements(ww.expand_displacements(theta)), theta),
                _dev(ww.from_parities(ww.expand_parities(theta)), theta))
    for lam in (0.0, 0.3, 0.5, 0.7, 1.0):
        worst = max(worst, _dev(ww.from_unified(ww.expand_unified(theta, lam)), theta))
    return worst


@_check("ww", "weyl-convolution", "Weyl table of a product from the factors' tables", tol=1e-9)
def _weyl_conv(d, rng, fault):
    A, B = random_operator(rng, d), random_operator(rng, d)
    return _dev(ww.weyl_convolution(ww.weyl_table(A), ww.weyl_table(B)), ww.weyl_table(A @ B))


@_check("ww", "moyal-star", "Wigner table of a product via the star product", tol=1e-9)
def _moyal(d, rng, fault):
    A, B = random_hermitian(rng, d), random_hermitian(rng, d)
    return _dev(ww.moyal_star(ww.wigner_table(A), ww.wigner_table(B)), ww.wigner_table(A @ B))


@_check("ww", "moyal-associativity", "the star product is associative", tol=1e-8)
def _moyal_assoc(d, rng, fault):
    W = [ww.wigner_table(random_operator(rng, d)) for _ in range(3)]
    return _dev(ww.moyal_star(ww.moyal_star(W[0], W[1]), W[2]), ww.moyal_star(W[0], ww.moyal_star(W[1], W[2])))


@_check("ww", "unified-product", "unified table of a product via the group convolution", tol=1e-9)
def _unified_prod(d, rng, fault):
    A, B = random_operator(rng, d), random_operator(rng, d)
    return _dev(ww.unified_product(ww.unified_ww(A), ww.unified_ww(B)).values, ww.unified_ww(A @ B).values)


FAULTABLE = tuple(c.name for c in CHECKS if c.faultable)


def manifest() -> list[dict]:
    return [{"name": c.name, "suite": c.suite, "description": c.description,
             "dims": list(c.dims), "tol": c.tol} for c in CHECKS]


def run_suite(suite: str = "all", dims=None, seed: int = 0, faults=()) -> dict:
    """Run every check in ``suite``; ``dims`` restricts the dimensions tried."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    unknown = set(faults) - set(FAULTABLE)
    if unknown:
        raise ValueError(f"cannot inject faults into {sorted(unknown)}; faultable: {list(FAULTABLE)}")
    results = []
    for idx, c in enumerate(CHECKS):
        if suite != "all" and c.suite != suite:
            continue
        for d in c.dims:
            if dims is not None and d not in dims:
                continue
            rng = np.random.default_rng([seed, idx, d])
            dev = float(c.fn(d, rng, c.name in faults))
            results.append({"name": c.name, "suite": c.suite, "d": d, "max_deviation": dev,
                            "tol": c.tol, "passed": bool(dev <= c.tol)})
    selected = [m for m in manifest() if suite == "all" or m["suite"] == suite]
    return {"suite": suite, "seed": seed, "passed": all(r["passed"] for r in results),
            "failures": sorted({r["name"] for r in results if not r["passed"]}),
            "checks": results, "manifest": selected}
