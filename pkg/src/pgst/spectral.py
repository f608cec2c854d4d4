"""Floating-point spectral decomposition into eigenprojectors.

Eigenvalues of a real symmetric matrix are grouped into distinct values
``theta_0 < ... < theta_d`` and each group contributes one orthogonal
projector ``E_r``.  Vertex arguments are 1-based throughout.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

log = logging.getLogger(__name__)

DEFAULT_COSPECTRAL_TOL = 1e-7


class DecompositionError(RuntimeError):
    pass


@dataclass(frozen=True)
class SpectralDecomposition:
    eigenvalues: np.ndarray      # (d+1,) strictly ascending
    projectors: np.ndarray       # (d+1, n, n)
    group_tol: float
    ill_conditioned: bool = False

    @property
    def n(self) -> int:
        return self.projectors.shape[1]

    def __len__(self):
        return len(self.eigenvalues)

    def reconstruct(self) -> np.ndarray:
        return np.einsum("r,rij->ij", self.eigenvalues, self.projectors)

    def amplitude_weights(self, a: int, b: int) -> np.ndarray:
        """``(E_r)_{a,b}`` for every r."""
        _check_vertex(self, a)
        _check_vertex(self, b)
        return self.projectors[:, a - 1, b - 1]


@dataclass(frozen=True)
class SignPattern:
    """Eigenvalue indices in the common support, with one sign bit each.

    ``sigma[k] == 0`` when ``E_r e_a == E_r e_b`` for ``r = support[k]``,
    and 1 when they are opposite.
    """

    support: tuple[int, ...]
    sigma: tuple[int, ...]

    def __post_init__(self):
        if len(self.support) != len(self.sigma):
            raise ValueError("support and sigma must have equal length")


def _check_vertex(D: SpectralDecomposition, v: int):
    if not 1 <= v <= D.n:
        raise IndexError(f"vertex {v} outside 1..{D.n}")


def decompose(M, group_tol: float | None = None) -> SpectralDecomposition:
    """Spectral decomposition of a real symmetric matrix.

    Eigenvalues closer than ``group_tol`` (chained) share a projector.  The
    default is ``1e-8 * max(1, spectral range)``.  If two resulting clusters
    are closer than ``10 * group_tol`` the decomposition is flagged as
    ill-conditioned.
    """
    M = np.asarray(np.asarray(M, dtype=object).astype(float), dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    if not np.array_equal(M, M.T):
        raise ValueError("matrix is not symmetric")
    try:
        values, vectors = np.linalg.eigh(M)
    except np.linalg.LinAlgError as exc:
        raise DecompositionError(f"eigensolver failed: {exc}") from exc

    if group_tol is None:
        group_tol = 1e-8 * max(1.0, float(values[-1] - values[0]))
    if group_tol <= 0:
        raise ValueError("group_tol must be positive")

    groups = [[0]]
    for k in range(1, len(values)):
        if values[k] - values[k - 1] <= group_tol:
            groups[-1].append(k)
        else:
            groups.append([k])

    thetas = np.array([values[g].mean() for g in groups])
    projectors = np.stack([vectors[:, g] @ vectors[:, g].T for g in groups])
    ill = bool(len(thetas) > 1 and np.min(np.diff(thetas)) < 10 * group_tol)
    if ill:
        log.warning("eigenvalue clusters closer than 10*group_tol=%g", 10 * group_tol)
    return SpectralDecomposition(thetas, projectors, float(group_tol), ill)


def eigenvalue_support(D: SpectralDecomposition, a: int,
                       tol: float = DEFAULT_COSPECTRAL_TOL) -> tuple[int, ...]:
    """Indices r with ``||E_r e_a|| > tol``."""
    _check_vertex(D, a)
    norms = np.linalg.norm(D.projectors[:, :, a - 1], axis=1)
    return tuple(int(r) for r in np.flatnonzero(norms > tol))


def is_cospectral(D: SpectralDecomposition, a: int, b: int,
                  tol: float = DEFAULT_COSPECTRAL_TOL) -> bool:
    _check_vertex(D, a)
    _check_vertex(D, b)
    diag_a = D.projectors[:, a - 1, a - 1]
    diag_b = D.projectors[:, b - 1, b - 1]
    return bool(np.all(np.abs(diag_a - diag_b) <= tol))


def strong_cospectrality(D: SpectralDecomposition, a: int, b: int,
                         tol: float = DEFAULT_COSPECTRAL_TOL) -> SignPattern | None:
    """Sign pattern of ``E_r e_a = +/- E_r e_b``, or None when a and b are
    not strongly cospectral."""
    support = eigenvalue_support(D, a, tol)
    if support != eigenvalue_support(D, b, tol):
        return None
    sigma = []
    for r in support:
        ua = D.projectors[r, :, a - 1]
        ub = D.projectors[r, :, b - 1]
        if np.linalg.norm(ua - ub) <= tol:
            sigma.append(0)
        elif np.linalg.norm(ua + ub) <= tol:
            sigma.append(1)
        else:
            return None
    return SignPattern(support, tuple(sigma))


def transfer_bound(D: SpectralDecomposition, a: int, b: int) -> float:
    """``sum_r |(E_r)_{a,b}|``, an upper bound on ``|U(t)_{a,b}|`` for all t."""
    return float(np.abs(D.amplitude_weights(a, b)).sum())


def path_laplacian_eigenvalues(n: int) -> np.ndarray:
    """Closed form ``2 - 2 cos(pi r / n)``, r = 0..n-1, ascending."""
    r = np.arange(n)
    return 2.0 - 2.0 * np.cos(np.pi * r / n)


def path_adjacency_eigenvalues(n: int) -> np.ndarray:
    """Closed form ``2 cos(pi r / (n+1))``, r = n..1, ascending."""
    r = np.arange(n, 0, -1)
    return 2.0 * np.cos(np.pi * r / (n + 1))
