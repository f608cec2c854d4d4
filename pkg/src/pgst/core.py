"""Graphs, chain constructors and single-excitation Hamiltonians.

Edge weights are kept as :class:`fractions.Fraction` so that matrices built
here are exact (``dtype=object`` arrays of fractions).  Conversion to floating
point is left to :mod:`pgst.spectral`.  Vertices are labelled ``1..n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    """Invalid graph data (self-loop, duplicate edge, bad endpoint, ...)."""


class GraphFormatError(GraphError):
    """Malformed graph text; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class HamiltonianKind(enum.Enum):
    XY = "xy"
    XYZ = "xyz"


@dataclass(frozen=True)
class Graph:
    """Weighted simple graph on vertices ``1..n``.

    ``edges`` holds ``(i, j, weight)`` triples with ``i < j``, sorted.
    """

    n: int
    edges: tuple[tuple[int, int, Fraction], ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        seen = set()
        normalized = []
        for edge in self.edges:
            if len(edge) == 2:
                i, j = edge
                w = Fraction(1)
            else:
                i, j, w = edge
                w = Fraction(w)
            i, j = int(i), int(j)
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise GraphError(f"edge ({i}, {j}) has an endpoint outside 1..{self.n}")
            if w <= 0:
                raise GraphError(f"edge ({i}, {j}) has non-positive weight {w}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            normalized.append((key[0], key[1], w))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def edge_weight_sum(self) -> Fraction:
        return sum((w for _, _, w in self.edges), Fraction(0))

    def degree(self, v: int) -> Fraction:
        return sum((w for i, j, w in self.edges if v in (i, j)), Fraction(0))


def build_path(n: int) -> Graph:
    """Unweighted path ``P_n`` with edges ``(i, i+1)``."""
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def build_weighted_chain(weights: Iterable) -> Graph:
    """Chain with ``len(weights) + 1`` vertices and the given couplings."""
    weights = list(weights)
    return Graph(len(weights) + 1, tuple((i + 1, i + 2, w) for i, w in enumerate(weights)))


def _zeros(n: int) -> np.ndarray:
    M = np.empty((n, n), dtype=object)
    M[...] = Fraction(0)
    return M


def adjacency_matrix(G: Graph) -> np.ndarray:
    A = _zeros(G.n)
    for i, j, w in G.edges:
        A[i - 1, j - 1] = w
        A[j - 1, i - 1] = w
    return A


def laplacian_matrix(G: Graph) -> np.ndarray:
    L = -adjacency_matrix(G)
    for v in range(1, G.n + 1):
        L[v - 1, v - 1] = G.degree(v)
    return L


def single_excitation_hamiltonian(G: Graph, kind: HamiltonianKind | str) -> np.ndarray:
    """Hamiltonian restricted to the one-excitation subspace.

    XY gives ``2 A(G)``; XYZ gives ``|E| I - 2 L(G)`` where ``|E|`` is the
    total edge weight.
    """
    kind = HamiltonianKind(kind)
    if kind is HamiltonianKind.XY:
        return 2 * adjacency_matrix(G)
    H = -2 * laplacian_matrix(G)
    for v in range(G.n):
        H[v, v] += G.edge_weight_sum
    return H


def parse_graph_text(text: str) -> Graph:
    """Parse the plain-text graph format.

    First significant line is ``n``; each further line is ``i j [weight]``.
    ``#`` starts a comment.  Weights may be integers, decimals or ``p/q``.
    """
    n = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise GraphFormatError("expected a single vertex count", lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {fields[0]!r}", lineno) from None
            if n < 1:
                raise GraphFormatError("vertex count must be positive", lineno)
            continue
        if len(fields) not in (2, 3):
            raise GraphFormatError("expected 'i j [weight]'", lineno)
        try:
            i, j = int(fields[0]), int(fields[1])
            w = Fraction(fields[2]) if len(fields) == 3 else Fraction(1)
        except (ValueError, ZeroDivisionError):
            raise GraphFormatError(f"cannot parse edge {line!r}", lineno) from None
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        try:
            Graph(n, ((i, j, w),))
        except GraphError as exc:
            raise GraphFormatError(str(exc), lineno) from None
        edges.append((i, j, w))
    if n is None:
        raise GraphFormatError("empty graph file")
    return Graph(n, tuple(edges))


def format_graph_text(G: Graph) -> str:
    lines = [str(G.n)]
    for i, j, w in G.edges:
        lines.append(f"{i} {j}" if w == 1 else f"{i} {j} {w}")
    return "\n".join(lines) + "\n"
