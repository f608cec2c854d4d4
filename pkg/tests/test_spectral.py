import numpy as np
import pytest

from pgst import (
    adjacency_matrix,
    build_path,
    decompose,
    eigenvalue_support,
    is_cospectral,
    laplacian_matrix,
    strong_cospectrality,
)
from pgst.core import build_weighted_chain
from pgst.spectral import path_laplacian_eigenvalues, transfer_bound

from conftest import random_graph, random_tree


def path_L(n):
    return decompose(laplacian_matrix(build_path(n)))


def closed_form_eigenvectors(n):
    """Columns cos(pi r (k - 1/2) / n), r = 0..n-1, normalized."""
    k = np.arange(1, n + 1)[:, None]
    r = np.arange(n)[None, :]
    V = np.cos(np.pi * r * (k - 0.5) / n)
    return V / np.linalg.norm(V, axis=0)


def test_decompose_p2_by_hand():
    D = path_L(2)
    assert np.allclose(D.eigenvalues, [0, 2], atol=1e-12)
    assert np.allclose(D.projectors[0], 0.5, atol=1e-12)
    assert np.allclose(D.projectors[1], [[0.5, -0.5], [-0.5, 0.5]], atol=1e-12)


def test_decompose_p3_p4_eigenvalues():
    assert np.allclose(path_L(3).eigenvalues, [0, 1, 3], atol=1e-12)
    s = np.sqrt(2)
    assert np.allclose(path_L(4).eigenvalues, [0, 2 - s, 2, 2 + s], atol=1e-12)


@pytest.mark.parametrize("n", range(2, 33))
def test_path_eigenvalues_match_closed_form(n):
    assert np.allclose(path_L(n).eigenvalues, path_laplacian_eigenvalues(n), atol=1e-12)


def test_closed_form_eigenvectors_are_eigenvectors():
    for n in range(2, 9):
        L = np.array(laplacian_matrix(build_path(n)), dtype=float)
        V = closed_form_eigenvectors(n)
        assert np.allclose(L @ V, V * path_laplacian_eigenvalues(n), atol=1e-12)


@pytest.mark.parametrize("n", range(2, 9))
def test_support_of_end_vertex_is_everything(n):
    V = closed_form_eigenvectors(n)
    oracle = tuple(r for r in range(n) if abs(V[0, r]) > 1e-9)
    assert oracle == tuple(range(n))
    assert eigenvalue_support(path_L(n), 1) == oracle


def test_support_examples():
    assert eigenvalue_support(path_L(2), 1) == (0, 1)
    V = closed_form_eigenvectors(4)
    assert eigenvalue_support(path_L(4), 2) == tuple(r for r in range(4) if abs(V[1, r]) > 1e-9)
    assert eigenvalue_support(path_L(4), 2) == (0, 1, 2, 3)
    # middle vertex of P_5 misses the antisymmetric eigenvectors
    assert eigenvalue_support(path_L(5), 3) == (0, 2, 4)


def test_cospectral_examples():
    assert is_cospectral(path_L(4), 1, 4)
    assert not is_cospectral(path_L(4), 1, 2)
    assert is_cospectral(path_L(3), 1, 3)


def test_strong_cospectrality_examples():
    sp = strong_cospectrality(path_L(3), 1, 3)
    assert sp.support == (0, 1, 2) and sp.sigma == (0, 1, 0)
    assert strong_cospectrality(path_L(4), 1, 2) is None


@pytest.mark.parametrize("n", range(2, 13))
def test_mirror_pairs_alternate(n):
    D = path_L(n)
    for j in range(1, n + 1):
        sp = strong_cospectrality(D, j, n + 1 - j)
        assert sp is not None
        assert sp.sigma == tuple(r % 2 for r in sp.support)


def test_projector_algebra(rng):
    for _ in range(25):
        G = random_graph(rng, int(rng.integers(1, 9)), weighted=True)
        M = np.array(laplacian_matrix(G), dtype=float)
        D = decompose(M)
        n = G.n
        assert np.all(np.diff(D.eigenvalues) > 0)
        assert np.abs(D.projectors.sum(axis=0) - np.eye(n)).max() <= 1e-10
        for r in range(len(D)):
            for s in range(len(D)):
                expected = D.projectors[r] if r == s else 0
                assert np.abs(D.projectors[r] @ D.projectors[s] - expected).max() <= 1e-9
        assert np.abs(D.reconstruct() - M).max() <= 1e-9
        # re-decomposing the reconstruction gives the same eigenvalues
        assert np.abs(decompose((D.reconstruct() + D.reconstruct().T) / 2).eigenvalues
                      - D.eigenvalues).max() <= 1e-9


def test_degenerate_eigenvalues_share_projector():
    # star K_{1,3}: Laplacian eigenvalue 1 has multiplicity 2
    from pgst import Graph
    D = decompose(laplacian_matrix(Graph(4, ((1, 2), (1, 3), (1, 4)))))
    assert np.allclose(D.eigenvalues, [0, 1, 4])
    assert round(np.trace(D.projectors[1])) == 2
    sp = strong_cospectrality(D, 2, 3)
    # E_1 e_2 != +-E_1 e_3 for the rank-2 projector
    assert sp is None
    assert is_cospectral(D, 2, 3)


def test_cauchy_schwarz_bound_on_trees(rng):
    seen_equal = seen_strict = 0
    for _ in range(60):
        n = int(rng.integers(2, 9))
        D = decompose(laplacian_matrix(random_tree(rng, n)))
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                s = transfer_bound(D, a, b)
                assert s <= 1 + 1e-9
                sc = strong_cospectrality(D, a, b) is not None
                assert (abs(s - 1) <= 1e-6) == sc
                seen_equal += sc
                seen_strict += not sc
    assert seen_equal and seen_strict


def test_reversal_identity_for_paths():
    for n in range(2, 17):
        D = path_L(n)
        signed = sum((-1) ** r * D.projectors[r] for r in range(n))
        assert np.abs(signed - np.fliplr(np.eye(n))).max() <= 1e-9


def test_mirror_symmetric_chains_are_strongly_cospectral(rng):
    for _ in range(40):
        n = int(rng.integers(2, 9))
        m = n - 1
        half = [int(w) for w in rng.integers(1, 6, size=m // 2)]
        weights = half + [int(rng.integers(1, 6))] * (m % 2) + half[::-1]
        G = build_weighted_chain(weights)
        assert G.n == n
        for M in (laplacian_matrix(G), adjacency_matrix(G)):
            assert strong_cospectrality(decompose(M), 1, n) is not None


def test_ill_conditioned_flag():
    D = decompose(np.diag([0.0, 1.0, 1.0 + 5e-8]), group_tol=1e-8)
    assert D.ill_conditioned
    assert not decompose(np.diag([0.0, 1.0, 2.0])).ill_conditioned


def test_bad_inputs():
    with pytest.raises(ValueError):
        decompose(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        decompose(np.eye(2), group_tol=0)
    with pytest.raises(IndexError):
        eigenvalue_support(path_L(3), 4)
