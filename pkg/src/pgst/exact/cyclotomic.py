"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are coordinate vectors in the power basis ``1, x, ..., x^{phi(m)-1}``
modulo ``Phi_m(x)``, where ``x`` stands for ``zeta_m = exp(2 pi i / m)``.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Sequence

from .polynomials import IntPoly, cyclotomic_poly, euler_phi


class CycloElement:
    __slots__ = ("m", "coords")

    def __init__(self, m: int, coords: Sequence):
        deg = euler_phi(m)
        coords = list(coords)
        if len(coords) > deg:
            coords = list(IntPoly(coords).mod_monic(cyclotomic_poly(m)).coeffs)
        coords += [0] * (deg - len(coords))
        self.m = m
        self.coords = tuple(
            c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c
            for c in coords
        )

    @classmethod
    def from_poly(cls, m: int, p: IntPoly) -> CycloElement:
        return cls(m, p.mod_monic(cyclotomic_poly(m)).coeffs)

    @classmethod
    def zeta_power(cls, m: int, k: int) -> CycloElement:
        return cls.from_poly(m, IntPoly.monomial(k % m))

    @classmethod
    def rational(cls, m: int, value) -> CycloElement:
        return cls(m, [value])

    def _coerce(self, other) -> CycloElement:
        if isinstance(other, CycloElement):
            if other.m != self.m:
                raise ValueError(f"moduli differ: {self.m} vs {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElement.rational(self.m, other)
        raise TypeError(f"cannot combine CycloElement with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return CycloElement(self.m, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.m, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElement(self.m, [a * other for a in self.coords])
        other = self._coerce(other)
        return CycloElement.from_poly(self.m, IntPoly(self.coords) * IntPoly(other.coords))

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.m, self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coords)

    def embed(self) -> complex:
        """Numerical value under ``zeta_m -> exp(2 pi i / m)``."""
        z = cmath.exp(2j * cmath.pi / self.m)
        acc = 0j
        for c in reversed(self.coords):
            acc = acc * z + float(c)
        return acc

    def __repr__(self):
        return f"CycloElement(m={self.m}, {list(self.coords)})"


def linear_combination(coeffs: Sequence[int], elements: Sequence[CycloElement]) -> CycloElement:
    """``sum_r coeffs[r] * elements[r]``, exact."""
    if len(coeffs) != len(elements):
        raise ValueError("length mismatch")
    if not elements:
        raise ValueError("need at least one element")
    m = elements[0].m
    acc = [0] * euler_phi(m)
    for c, e in zip(coeffs, elements):
        if e.m != m:
            raise ValueError("all elements must share one modulus")
        if c:
            for k, x in enumerate(e.coords):
                acc[k] += c * x
    return CycloElement(m, acc)
