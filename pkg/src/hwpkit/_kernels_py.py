"""Pure-Python/numpy versions of the hot kernels.

Same signatures as the compiled ``_kernels`` module.  Group elements of
HWP(d) are encoded as ``((nu*d + alpha)*d + beta)*d + gamma``; phase-space
tables are indexed by canonical residues ``[0, d)``.
"""
import numpy as np

BACKEND = "python"


def encode(alpha, beta, gamma, nu, d):
    return (((nu % 2) * d + alpha % d) * d + beta % d) * d + gamma % d


def decode(code, d):
    code, g = divmod(int(code), d)
    code, b = divmod(code, d)
    nu, a = divmod(code, d)
    return a, b, g, nu


def mul(x, y, d):
    a1, b1, g1, n1 = decode(x, d)
    a2, b2, g2, n2 = decode(y, d)
    s = -1 if n1 else 1
    h = (d + 1) // 2
    return encode(a1 + s * a2, b1 + s * b2,
                  g1 + g2 + h * s * (a1 * b2 - a2 * b1), n1 + n2, d)


def inv(x, d):
    a, b, g, n = decode(x, d)
    s = 1 if n else -1
    return encode(s * a, s * b, -g, n, d)


def commutator(x, y, d):
    return mul(mul(mul(x, y, d), inv(x, d), d), inv(y, d), d)


def commutator_set(left, right, d):
    """Sorted distinct codes of ``[g, h]`` for ``g`` in left, ``h`` in right."""
    left = [int(v) for v in left]
    right = [int(v) for v in right]
    linv = [inv(x, d) for x in left]
    rinv = [inv(y, d) for y in right]
    out = set()
    for x, xi in zip(left, linv):
        for y, yi in zip(right, rinv):
            out.add(mul(mul(mul(x, y, d), xi, d), yi, d))
    return np.array(sorted(out), dtype=np.int64)


def closure(generators, d):
    """Sorted codes of the subgroup generated by ``generators``."""
    group = {0}
    basis = []
    for g in (int(v) for v in generators):
        if g in group:
            continue
        basis.append(g)
        frontier = list(group)
        while frontier:
            new = []
            for x in frontier:
                for b in basis:
                    y = mul(x, b, d)
                    if y not in group:
                        group.add(y)
                        new.append(y)
            frontier = new
    return np.array(sorted(group), dtype=np.int64)


def _omega(d):
    k = np.arange(d)
    k = np.where(k > (d - 1) // 2, k - d, k)
    return np.exp(2j * np.pi * k / d)


def ww_fourier(table, sign, d):
    """``out[g, e] = (1/d) sum T[a, b] omega(sign*h*(b*g - a*e))``.

    The same kernel maps either slice onto the other; ``sign = -1`` is wrong
    on purpose and exists for fault injection.
    """
    w = _omega(d)
    h = (d + 1) // 2
    s = -1 if sign < 0 else 1
    r = np.arange(d)
    m1 = w[(s * h * np.outer(r, r)) % d]
    m2 = w[(-s * h * np.outer(r, r)) % d]
    return m1 @ np.asarray(table).T @ m2 / d


def weyl_convolution(t1, t2, d):
    """Weyl table of a product from the Weyl tables of the factors."""
    w = _omega(d)
    h = (d + 1) // 2
    t1 = np.asarray(t1)
    t2 = np.asarray(t2)
    r = np.arange(d)
    a2 = r[:, None]
    b2 = r[None, :]
    t2n = t2[(-a2) % d, (-b2) % d]
    out = np.empty((d, d), dtype=complex)
    for a in range(d):
        for b in range(d):
            ph = w[(h * (a * b2 - a2 * b)) % d]
            val = np.sum(ph * t1[(a2 - a) % d, (b2 - b) % d] * t2n) / d
            out[(-a) % d, (-b) % d] = val
    return out


def moyal_star(w1, w2, d):
    """Wigner table of a product from the Wigner tables of the factors."""
    w = _omega(d)
    r = np.arange(d)
    w1 = np.asarray(w1)
    w2 = np.asarray(w2)
    k2 = w[(-2 * np.outer(r, r)) % d]   # [alpha1, beta2]
    k1 = w[(2 * np.outer(r, r)) % d]    # [alpha2, beta1]
    out = np.empty((d, d), dtype=complex)
    for a in range(d):
        for b in range(d):
            s1 = np.roll(np.roll(w1, -a, axis=0), -b, axis=1)
            s2 = np.roll(np.roll(w2, -a, axis=0), -b, axis=1)
            g = k2 @ s2.T @ k1
            out[a, b] = np.sum(s1 * g) / d**2
    return out


def unified_convolution(c1, c2, d):
    """Convolution of expansion-coefficient tables over HWP(d)/Z(d).

    ``c[nu, a, b]`` is the coefficient of ``D(a, b, 0, nu)`` in the
    redundant expansion with weight ``1/(2d)``.
    """
    w = _omega(d)
    h = (d + 1) // 2
    c1 = np.asarray(c1)
    c2 = np.asarray(c2)
    r = np.arange(d)
    a2 = r[:, None]
    b2 = r[None, :]
    out = np.zeros((2, d, d), dtype=complex)
    for nu in range(2):
        for n2 in range(2):
            n1 = (nu - n2) % 2
            s1 = -1 if n1 else 1
            for a in range(d):
                for b in range(d):
                    ph = w[(h * s1 * (a * b2 - a2 * b)) % d]
                    out[nu, a, b] += np.sum(
                        c1[n1, (a - s1 * a2) % d, (b - s1 * b2) % d] * c2[n2] * ph)
    return out / (2 * d)
