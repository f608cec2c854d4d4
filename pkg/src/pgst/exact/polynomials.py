"""Integer (and rational) polynomials in ascending coefficient order.

``IntPoly((a0, a1, ..., ak))`` is ``a0 + a1 x + ... + ak x^k``; the zero
polynomial has no coefficients.  Coefficients are Python ints (or
``Fraction``), so arithmetic never overflows.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Sequence


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        coeffs = [_normalize(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, k: int, c=1) -> IntPoly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    def __add__(self, other):
        other = _as_poly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[k] + other[k] for k in range(size)])

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other):
        return poly_long_division(self, _as_poly(other))

    def mod_monic(self, modulus: IntPoly) -> IntPoly:
        """Ordinary (high-degree-first) remainder modulo a monic polynomial."""
        if modulus.degree < 0 or modulus.coeffs[-1] != 1:
            raise ValueError("modulus must be monic")
        k = modulus.degree
        rem = list(self.coeffs)
        for top in range(len(rem) - 1, k - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            for j in range(k + 1):
                rem[top - k + j] -= c * modulus.coeffs[j]
        return IntPoly(rem[:k])


def _as_poly(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return IntPoly([p])
    raise TypeError(f"cannot treat {type(p).__name__} as a polynomial")


def poly_long_division(L: IntPoly, phi: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Divide ``L`` by ``phi`` starting from the constant term.

    ``phi`` must have constant term +1 or -1.  Returns ``(q, rem)`` with
    ``L == phi*q + rem``, ``deg q <= deg L - deg phi`` and ``rem`` vanishing
    in degrees ``0..deg L - deg phi``.  ``rem`` is zero exactly when ``phi``
    divides ``L``; it is not the usual high-degree remainder.
    """
    if phi.is_zero() or phi[0] not in (1, -1):
        raise ValueError("divisor must have constant term +1 or -1")
    qdeg = L.degree - phi.degree
    if qdeg < 0:
        return IntPoly(), L
    unit = phi[0]
    q = []
    for i in range(qdeg + 1):
        acc = L[i]
        for j in range(1, min(i, phi.degree) + 1):
            acc -= phi[j] * q[i - j]
        q.append(acc * unit)  # unit is its own inverse
    quotient = IntPoly(q)
    return quotient, L - phi * quotient


def divides(phi: IntPoly, L: IntPoly) -> bool:
    return poly_long_division(L, phi)[1].is_zero()


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial, via ``x^m - 1 = prod_{d|m} Phi_d``."""
    if m < 1:
        raise ValueError("m must be positive")
    num = IntPoly([-1] + [0] * (m - 1) + [1])
    for d in divisors(m)[:-1]:
        num, rem = poly_long_division(num, cyclotomic_poly(d))
        assert rem.is_zero()
    return num


def euler_phi(m: int) -> int:
    return cyclotomic_poly(m).degree
