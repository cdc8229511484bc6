"""Exact arithmetic in Z(d) for odd d.

Residues are stored canonically in ``[0, d)``; the centered representative
``[-(d-1)/2, (d-1)/2]`` is used for display and for the position/momentum
spectrum.  Phases ``omega(a) = exp(2*pi*i*a/d)`` are carried as integer
exponents and only turned into complex numbers at matrix boundaries.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "Dim", "ModInt", "Phase", "DimensionError", "ModulusMismatch", "NotInvertible",
    "check_dim", "inv2", "mod_add", "mod_mul", "mod_neg", "mod_inv", "omega",
    "omega_table", "centered", "centered_index", "index_to_residue",
]


class DimensionError(ValueError):
    """Raised for a dimension that is not an odd integer >= 3."""


class ModulusMismatch(ValueError):
    pass


class NotInvertible(ArithmeticError):
    def __init__(self, value: int, d: int):
        self.value = value
        self.d = d
        self.gcd = math.gcd(value, d)
        super().__init__(f"{value} is not invertible mod {d} (gcd={self.gcd})")


def check_dim(d) -> int:
    if isinstance(d, Dim):
        return d.d
    if isinstance(d, bool) or not isinstance(d, (int, np.integer)):
        raise DimensionError(f"dimension must be an integer, got {d!r}")
    d = int(d)
    if d < 3 or d % 2 == 0:
        raise DimensionError(f"dimension must be odd and >= 3, got {d}")
    return d


@dataclass(frozen=True)
class Dim:
    """Validated odd dimension ``d >= 3``."""

    d: int

    def __post_init__(self):
        object.__setattr__(self, "d", check_dim(self.d))

    def __int__(self):
        return self.d

    def __index__(self):
        return self.d

    @property
    def half(self) -> int:
        """``(d - 1) // 2``, the largest centered residue."""
        return (self.d - 1) // 2

    @property
    def inv2(self) -> int:
        return (self.d + 1) // 2

    def residues(self, centered: bool = False) -> range:
        if centered:
            return range(-self.half, self.half + 1)
        return range(self.d)

    def __call__(self, value: int) -> "ModInt":
        return ModInt(value, self)


@dataclass(frozen=True)
class ModInt:
    """An element of Z(d), canonical value in ``[0, d)``."""

    value: int
    modulus: Dim

    def __post_init__(self):
        if not isinstance(self.modulus, Dim):
            object.__setattr__(self, "modulus", Dim(self.modulus))
        object.__setattr__(self, "value", int(self.value) % self.modulus.d)

    @property
    def d(self) -> int:
        return self.modulus.d

    @property
    def centered(self) -> int:
        return centered(self.value, self.d)

    def _coerce(self, other) -> "ModInt":
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"moduli differ: {self.d} vs {other.d}")
            return other
        if isinstance(other, (int, np.integer)):
            return ModInt(int(other), self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModInt(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModInt(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModInt(other.value - self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModInt(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.value, self.modulus)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.d
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.d))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def inverse(self) -> "ModInt":
        return mod_inv(self)

    def __repr__(self):
        return f"ModInt({self.value} mod {self.d})"


def _same(a: ModInt, b: ModInt) -> None:
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"moduli differ: {a.d} vs {b.d}")


def mod_add(a: ModInt, b: ModInt) -> ModInt:
    _same(a, b)
    return ModInt(a.value + b.value, a.modulus)


def mod_mul(a: ModInt, b: ModInt) -> ModInt:
    _same(a, b)
    return ModInt(a.value * b.value, a.modulus)


def mod_neg(a: ModInt) -> ModInt:
    return ModInt(-a.value, a.modulus)


def mod_inv(a: ModInt) -> ModInt:
    """Multiplicative inverse; raises :class:`NotInvertible` for non-units."""
    if math.gcd(a.value, a.d) != 1:
        raise NotInvertible(a.value, a.d)
    return ModInt(pow(a.value, -1, a.d), a.modulus)


def inv2(d: int) -> int:
    """The inverse of 2 in Z(d), i.e. ``(d + 1) // 2``."""
    return (check_dim(d) + 1) // 2


def centered(value: int, d: int) -> int:
    r = int(value) % d
    return r - d if r > (d - 1) // 2 else r


def centered_index(j, d: int | None = None) -> int:
    """Storage index of residue ``j`` (centered ordering, ``-(d-1)/2 -> 0``)."""
    if isinstance(j, ModInt):
        d = j.d
        j = j.value
    if d is None:
        raise TypeError("d is required for a plain integer residue")
    return (int(j) + (d - 1) // 2) % d


def index_to_residue(index: int, d: int) -> int:
    """Inverse of :func:`centered_index`; returns the centered residue."""
    if not 0 <= index < d:
        raise IndexError(f"index {index} out of range for d={d}")
    return index - (d - 1) // 2


def omega(a, d: int | None = None) -> complex:
    """``exp(2*pi*i*r/d)`` using the centered representative ``r`` of ``a``."""
    if isinstance(a, ModInt):
        d = a.d
        a = a.value
    if d is None:
        raise TypeError("d is required for a plain integer exponent")
    return cmath.exp(2j * math.pi * centered(a, d) / d)


@lru_cache(maxsize=64)
def _omega_table(d: int) -> np.ndarray:
    table = np.exp(2j * np.pi * np.array([centered(k, d) for k in range(d)]) / d)
    table.setflags(write=False)
    return table


def omega_table(d: int) -> np.ndarray:
    """Read-only array ``t`` with ``t[k] == omega(k)`` for ``k`` in ``[0, d)``."""
    return _omega_table(check_dim(d))


@dataclass(frozen=True)
class Phase:
    """``omega(exponent)``, kept exact as an exponent in Z(d)."""

    exponent: ModInt

    @classmethod
    def of(cls, exponent: int, d: int) -> "Phase":
        return cls(ModInt(exponent, Dim(d)))

    @property
    def d(self) -> int:
        return self.exponent.d

    def __mul__(self, other: "Phase") -> "Phase":
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(mod_add(self.exponent, other.exponent))

    def conjugate(self) -> "Phase":
        return Phase(mod_neg(self.exponent))

    @property
    def value(self) -> complex:
        return omega(self.exponent)

    def __complex__(self):
        return self.value
