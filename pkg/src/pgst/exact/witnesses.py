"""Explicit eigenvalue relations for Heisenberg chains, and the
long-division check that certifies them.

Relations are vectors ``(l_1, ..., l_{n-1})`` on the nonzero Laplacian
eigenvalues ``lambda_r = 2 - 2 cos(pi r / n)``.  A relation blocks transfer
between the end vertices when its odd-indexed entries have an odd sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .polynomials import IntPoly, cyclotomic_poly, poly_long_division


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def odd_index_sum(ell: Sequence[int]) -> int:
    """``sum_{r odd} l_r`` for a vector indexed from r = 1."""
    return sum(ell[r - 1] for r in range(1, len(ell) + 1, 2))


def witness_odd_prime(n: int) -> tuple[int, ...]:
    if n < 3 or not is_prime(n):
        raise ValueError(f"{n} is not an odd prime")
    ell = [0] * (n - 1)
    if n % 4 == 3:
        for s in range(1, n, 2):
            ell[s - 1] = n
            ell[n - s - 1] = -(n - 2)
    else:
        for s in range(3, n, 2):
            ell[s - 1] = -(n + 4)
            ell[n - s - 1] = n - 2
        ell[0] = -6
        ell[n - 2] = 2 * (n - 2)
    return tuple(ell)


def witness_composite(n: int, m: int, k: int) -> tuple[int, ...]:
    """Relation from ``1 + 2 sum_{r=1}^{(k-1)/2} (-1)^r cos(pi r / k) = 0``.

    Taking the q = 2 minus q = 1 shifts gives
    ``(l_1 - l_2) + sum (-1)^r (l_{mr+1} - l_{mr+2}) + sum (-1)^r (l_{mr-1} - l_{mr-2})``
    as a combination of eigenvalues.  Coefficients landing on the zero
    eigenvalue (``mr - 2 == 0``) are dropped.
    """
    if n != m * k or k < 3 or k % 2 == 0 or m < 2:
        raise ValueError(f"need n = m*k with k odd > 1 and m >= 2, got n={n}, m={m}, k={k}")
    coef = [0] * n  # index 0 is the zero eigenvalue

    def add(r, c):
        coef[r] += c

    add(1, 1)
    add(2, -1)
    for r in range(1, (k - 1) // 2 + 1):
        sign = (-1) ** r
        add(m * r + 1, sign)
        add(m * r + 2, -sign)
        add(m * r - 1, sign)
        add(m * r - 2, -sign)
    return tuple(coef[1:])


def composite_factorization(n: int) -> tuple[int, int]:
    """``(m, k)`` with k the smallest odd prime factor of n and m = n // k >= 2."""
    for k in range(3, n + 1, 2):
        if n % k == 0 and is_prime(k):
            if n // k >= 2:
                return n // k, k
            break
    raise ValueError(f"{n} has no factorization n = m*k with k odd > 1, m >= 2")


@dataclass(frozen=True)
class Witness:
    n: int
    kind: str            # "odd_prime" or "composite"
    ell: tuple[int, ...]
    m: int | None = None
    k: int | None = None

    @property
    def parity_sum(self) -> int:
        return odd_index_sum(self.ell)

    def to_dict(self) -> dict:
        return {"n": self.n, "kind": self.kind, "m": self.m, "k": self.k,
                "witness": list(self.ell), "odd_index_sum": self.parity_sum}


def blocking_witness(n: int) -> Witness:
    """Blocking relation for any chain length that is not a power of two."""
    if n < 3 or is_power_of_two(n):
        raise ValueError(f"no blocking relation exists for n={n}")
    if is_prime(n):
        return Witness(n, "odd_prime", witness_odd_prime(n))
    m, k = composite_factorization(n)
    return Witness(n, "composite", witness_composite(n, m, k), m, k)


def relation_polynomial(ell: Sequence[int], n: int) -> IntPoly:
    """``L(x) = 2 l_0 + sum_{r<n} l_r x^r + sum_{r>n} l_{2n-r} x^r``
    with ``l_0 = -sum l_r``; zeta_{2n} is a root iff ``ell`` is a relation."""
    if len(ell) != n - 1:
        raise ValueError("relation must have n-1 entries")
    l0 = -sum(ell)
    coeffs = [2 * l0] + list(ell) + [0] + list(reversed(ell))
    return IntPoly(coeffs)


def relation_divides(ell: Sequence[int], n: int) -> bool:
    _, rem = poly_long_division(relation_polynomial(ell, n), cyclotomic_poly(2 * n))
    return rem.is_zero()


def power_of_two_relations(n: int) -> list[tuple[int, ...]]:
    """Spanning family ``e_s + e_{n-s} - 2 e_{n/2}`` (``l_0 = 0``,
    ``l_s = l_{n-s}``) for n a power of two."""
    if not is_power_of_two(n) or n < 2:
        raise ValueError("n must be a power of two >= 2")
    out = []
    for s in range(1, n // 2):
        v = [0] * (n - 1)
        v[s - 1] += 1
        v[n - s - 1] += 1
        v[n // 2 - 1] -= 2
        out.append(tuple(v))
    return out


def decide_by_long_division(n: int) -> bool:
    """Verdict for the end vertices using only explicit relations checked by
    low-degree-first division by ``Phi_{2n}``."""
    if is_power_of_two(n):
        family = power_of_two_relations(n)
        if not all(relation_divides(v, n) for v in family):
            raise ArithmeticError("power-of-two relation family failed to divide")
        return all(odd_index_sum(v) % 2 == 0 for v in family)
    w = blocking_witness(n)
    if not relation_divides(w.ell, n):
        raise ArithmeticError(f"witness for n={n} failed to divide")
    return w.parity_sum % 2 == 0
