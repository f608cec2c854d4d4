"""Exact pretty-good-state-transfer decisions from integer relation lattices.

Pretty good state transfer between strongly cospectral vertices fails exactly
when some integer relation ``sum_r l_r theta_r = 0`` among the supported
eigenvalues has odd sign-weighted sum ``sum_r sigma_r l_r`` and zero plain sum
``sum_r l_r``.  For a Laplacian the zero eigenvalue absorbs the plain-sum
condition, leaving a pure parity test on the relations among the nonzero
eigenvalues.  Parity is linear, so checking a lattice basis suffices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Sequence

from ..spectral import SignPattern
from .cyclotomic import CycloElement, linear_combination
from .lattice import hermite_normal_form, integer_kernel, rational_kernel


class ExactArithmeticError(ArithmeticError):
    """A computed relation failed exact re-verification."""


@dataclass(frozen=True)
class RelationLattice:
    """Integer relations among the eigenvalues labelled by ``indices``.

    ``basis`` rows are in Hermite normal form and span every integer vector
    ``l`` with ``sum_k l[k] * theta[indices[k]] == 0``.
    """

    indices: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.indices)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def combine(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.dimension
        for c, row in zip(coeffs, self.basis):
            for k, x in enumerate(row):
                out[k] += c * x
        return tuple(out)


@dataclass(frozen=True)
class PGSTDecision:
    """Verdict plus a certificate that a consumer can re-check.

    ``basis`` is the lattice whose sign parities decide the verdict (all even
    when ``verdict`` is True).  When ``verdict`` is False, ``witness`` is a
    relation with odd sign-weighted sum (and zero plain sum in the general
    model).  All vectors are indexed by ``indices``.
    """

    verdict: bool
    model: str
    pair: tuple[int, int]
    indices: tuple[int, ...]
    sigma: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]
    witness: tuple[int, ...] | None = None
    n: int | None = None
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "n": self.n,
            "pair": list(self.pair),
            "verdict": self.verdict,
            "indices": list(self.indices),
            "basis": [list(v) for v in self.basis],
            "sigma": list(self.sigma),
            "witness": list(self.witness) if self.witness is not None else None,
        }


def sigma_parity(sigma: Sequence[int], ell: Sequence[int]) -> int:
    return sum(s * x for s, x in zip(sigma, ell)) % 2


def is_relation(ell: Sequence[int], eigenvalues: Sequence[CycloElement]) -> bool:
    return linear_combination(list(ell), list(eigenvalues)).is_zero()


def relation_lattice(eigenvalues: Sequence[CycloElement],
                     indices: Sequence[int] | None = None) -> RelationLattice:
    """Integer kernel of the coordinate matrix of the eigenvalues."""
    eigenvalues = list(eigenvalues)
    if indices is None:
        indices = range(len(eigenvalues))
    indices = tuple(indices)
    if len(indices) != len(eigenvalues):
        raise ValueError("indices and eigenvalues differ in length")
    if not eigenvalues:
        return RelationLattice((), ())
    m = eigenvalues[0].m
    if any(e.m != m for e in eigenvalues):
        raise ValueError("eigenvalues must share one cyclotomic modulus")

    rows = []
    for k in range(len(eigenvalues[0].coords)):
        row = [e.coords[k] for e in eigenvalues]
        den = lcm(*(getattr(x, "denominator", 1) for x in row))
        rows.append([int(x * den) for x in row])
    basis = integer_kernel(rows, ncols=len(eigenvalues))

    if len(basis) != len(rational_kernel(rows)):
        raise ExactArithmeticError("integer and rational kernel ranks disagree")
    for v in basis:
        if not is_relation(v, eigenvalues):
            raise ExactArithmeticError(f"kernel vector {v} is not a relation")
    return RelationLattice(indices, tuple(tuple(v) for v in basis))


def _first_odd(basis, sigma):
    for v in basis:
        if sigma_parity(sigma, v):
            return tuple(v)
    return None


# -- Laplacian of the path ---------------------------------------------------

def exact_path_laplacian_eigenvalues(n: int) -> list[CycloElement]:
    """``lambda_r = 2 - zeta^r - zeta^{2n-r}`` in Q(zeta_{2n}), r = 1..n-1.

    Ascending, equal to ``2 - 2 cos(pi r / n)``.  The zero eigenvalue is not
    included.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    m = 2 * n
    return [
        2 - CycloElement.zeta_power(m, r) - CycloElement.zeta_power(m, m - r)
        for r in range(1, n)
    ]


def path_laplacian_support(n: int, j: int) -> tuple[int, ...]:
    """Nonzero-eigenvalue indices r in the support of vertex j of L(P_n).

    The r-th eigenvector has entries ``cos(pi r (k - 1/2) / n)``, which
    vanish exactly when ``r (2k - 1) = n (mod 2n)``.
    """
    return tuple(r for r in range(1, n) if (r * (2 * j - 1)) % (2 * n) != n)


def _mirror_pair(n: int, pair) -> tuple[int, int]:
    if pair is None:
        return (1, n)
    a, b = (int(v) for v in pair)
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"pair {pair} outside 1..{n}")
    if a + b != n + 1:
        raise ValueError(f"pair {pair} is not a mirror pair (j, n+1-j) of P_{n}")
    return (a, b)


def decide_pgst_laplacian(n: int, pair: tuple[int, int] | None = None) -> PGSTDecision:
    """Exact decision for a mirror pair ``(j, n+1-j)`` of the Heisenberg chain.

    Uses ``sigma_r = r mod 2`` on the support of ``j`` and tests the parity of
    each basis vector of the relation lattice of the nonzero eigenvalues.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    pair = _mirror_pair(n, pair)
    support = path_laplacian_support(n, pair[0])
    eigs = exact_path_laplacian_eigenvalues(n)
    lattice = relation_lattice([eigs[r - 1] for r in support], support)
    sigma = tuple(r % 2 for r in support)
    witness = _first_odd(lattice.basis, sigma)
    return PGSTDecision(
        verdict=witness is None,
        model="laplacian",
        pair=pair,
        indices=support,
        sigma=sigma,
        basis=lattice.basis,
        witness=witness,
        n=n,
    )


# -- general symmetric algebraic matrices -------------------------------------

def decide_pgst_general(lattice: RelationLattice, sigma, eigenvalues: Sequence[CycloElement],
                        pair: tuple[int, int] = (0, 0), n: int | None = None) -> PGSTDecision:
    """Decide transfer from a relation lattice over the common support.

    ``sigma`` is a :class:`SignPattern` (its support must equal the lattice
    indices) or a bare bit sequence aligned with them.  ``eigenvalues`` are
    the exact values for ``lattice.indices``; every basis vector is re-checked
    against them.
    """
    if isinstance(sigma, SignPattern):
        if tuple(sigma.support) != lattice.indices:
            raise ValueError("sign pattern support differs from lattice indices")
        bits = tuple(sigma.sigma)
    else:
        bits = tuple(int(s) for s in sigma)
    if len(bits) != lattice.dimension or len(eigenvalues) != lattice.dimension:
        raise ValueError("sigma, eigenvalues and lattice dimension must agree")
    for v in lattice.basis:
        if not is_relation(v, eigenvalues):
            raise ExactArithmeticError(f"basis vector {v} is not a relation")

    if lattice.basis:
        sums = [sum(v) for v in lattice.basis]
        coeffs = integer_kernel([sums], ncols=len(sums))
        zero_sum = hermite_normal_form([lattice.combine(c) for c in coeffs]) if coeffs else []
    else:
        zero_sum = []
    zero_sum = tuple(tuple(v) for v in zero_sum)
    witness = _first_odd(zero_sum, bits)
    return PGSTDecision(
        verdict=witness is None,
        model="general",
        pair=tuple(pair),
        indices=lattice.indices,
        sigma=bits,
        basis=zero_sum,
        witness=witness,
        n=n,
    )


def laplacian_as_general(n: int, pair: tuple[int, int] | None = None) -> PGSTDecision:
    """The Laplacian chain run through :func:`decide_pgst_general`, with the
    zero eigenvalue (index 0, sigma 0) adjoined."""
    pair = _mirror_pair(n, pair)
    support = (0,) + path_laplacian_support(n, pair[0])
    eigs = [CycloElement.rational(2 * n, 0)] + exact_path_laplacian_eigenvalues(n)
    chosen = [eigs[r] for r in support]
    lattice = relation_lattice(chosen, support)
    return decide_pgst_general(lattice, tuple(r % 2 for r in support), chosen, pair, n)


# -- XY (adjacency) chain, end vertices --------------------------------------

def exact_path_adjacency_eigenvalues(n: int) -> list[CycloElement]:
    """``2 cos(pi r / (n+1)) = zeta^r + zeta^{-r}`` in Q(zeta_{2n+2}),
    ascending (r = n..1)."""
    if n < 1:
        raise ValueError("n must be positive")
    m = 2 * (n + 1)
    return [
        CycloElement.zeta_power(m, r) + CycloElement.zeta_power(m, m - r)
        for r in range(n, 0, -1)
    ]


def decide_pgst_adjacency_path(n: int) -> PGSTDecision:
    """Exact decision between the end vertices of the XY chain ``A(P_n)``.

    Eigenvalue ``2 cos(pi r/(n+1))`` has eigenvector entries
    ``sin(pi k r/(n+1))``, so the end projections agree for odd r and are
    opposite for even r.  Indices follow ascending eigenvalue order.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    eigs = exact_path_adjacency_eigenvalues(n)
    indices = tuple(range(n))
    sigma = tuple(1 - (r % 2) for r in range(n, 0, -1))
    lattice = relation_lattice(eigs, indices)
    d = decide_pgst_general(lattice, sigma, eigs, (1, n), n)
    return PGSTDecision(d.verdict, "adjacency", d.pair, d.indices, d.sigma, d.basis, d.witness, n)
