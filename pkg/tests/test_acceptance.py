"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per criterion is
printed in the terminal summary.
"""

import json
import math
import time

import numpy as np
import pytest

from pgst import (
    build_path,
    decompose,
    evolve_amplitude,
    fidelity_trace,
    laplacian_matrix,
    n3_probability,
    strong_cospectrality,
)
from pgst.cli import main
from pgst.dynamics import evolve_row
from pgst.exact import (
    decide_by_long_division,
    decide_pgst_laplacian,
    exact_path_laplacian_eigenvalues,
    is_power_of_two,
    is_relation,
    odd_index_sum,
    relation_lattice,
    sigma_parity,
    witness_composite,
    witness_odd_prime,
)
from pgst.spectral import transfer_bound

from conftest import random_graph, random_tree


def cli_json(capsys, *argv):
    assert main(list(argv)) == 0
    return [json.loads(line) for line in capsys.readouterr().out.splitlines()]


def path_L(n):
    return decompose(laplacian_matrix(build_path(n)))


@pytest.mark.criterion("1 sweep --max-n 32 reproduces the power-of-two characterization")
def test_c1_sweep_power_of_two(capsys):
    start = time.perf_counter()
    rows = cli_json(capsys, "sweep", "--max-n", "32")
    elapsed = time.perf_counter() - start
    assert elapsed <= 60
    end_rows = {r["n"]: r for r in rows if r["pair"] == [1, r["n"]]}
    assert sorted(end_rows) == list(range(2, 33))
    assert {n for n, r in end_rows.items() if r["verdict"]} == {2, 4, 8, 16, 32}
    for n, r in end_rows.items():
        if r["verdict"]:
            assert r["witness"] is None
            continue
        w = r["witness"]
        eigs = exact_path_laplacian_eigenvalues(n)
        assert is_relation(w["relation"], [eigs[k - 1] for k in w["indices"]])
        assert sum(x for k, x in zip(w["indices"], w["relation"]) if k % 2) % 2 == 1
        assert w["verified"] is True


@pytest.mark.criterion("2 n=3 transfer probability capped at 3/4 and matches closed form")
def test_c2_n3_oracle():
    t = np.linspace(0, 200, 10**5)
    tr = fidelity_trace(path_L(3), 1, 3, 0, 200, 10**5)
    p = tr.probabilities
    assert abs(p.max() - 0.75) <= 1e-6
    assert p.max() <= 0.75 + 1e-9
    assert np.abs(p - n3_probability(t)).max() <= 1e-10


@pytest.mark.criterion("3a peak --epsilon 0.01 finds fidelity >= 0.99 for n=4,8 with |phase| <= 0.3")
def test_c3a_pgst_peaks(capsys):
    start = time.perf_counter()
    for n in (4, 8):
        (r,) = cli_json(capsys, "peak", "--path", str(n), "--epsilon", "0.01")
        assert r["pair"] == [1, n]
        assert r["peak"]["status"] == "found"
        assert r["peak"]["fidelity"] >= 0.99
        assert abs(r["peak"]["phase"]) <= 0.3
    assert time.perf_counter() - start <= 120


# best end-to-end fidelity reported by `peak --epsilon 0.01` within the default horizon
PLATEAU_ANCHORS = {5: 0.951056471309753, 6: 0.7498703511393536, 7: 0.9747908289538564}


@pytest.mark.criterion("3b fidelity stays below 0.95 within the default horizon for n=5,6,7")
def test_c3b_non_pgst_plateaus(capsys):
    start = time.perf_counter()
    best = {}
    for n in (5, 6, 7):
        (r,) = cli_json(capsys, "peak", "--path", str(n), "--epsilon", "0.01")
        assert r["peak"]["status"] == "not_found"
        best[n] = r["peak"]["fidelity"]
        assert best[n] == pytest.approx(PLATEAU_ANCHORS[n], abs=1e-9)
    assert time.perf_counter() - start <= 120
    print("plateau fidelities:", best)
    assert all(f < 0.95 for f in best.values()), best


@pytest.mark.criterion("4 mirror pairs strongly cospectral with alternating sigma; P_4 non-mirror pairs not")
def test_c4_strong_cospectrality():
    for n in range(1, 17):
        D = path_L(n)
        for j in range(1, n + 1):
            sp = strong_cospectrality(D, j, n + 1 - j, tol=1e-7)
            assert sp is not None
            assert sp.sigma == tuple((1 + (-1) ** (r + 1)) // 2 for r in sp.support)
    D4 = path_L(4)
    for a in range(1, 5):
        for b in range(1, 5):
            if a != b and a + b != 5:
                assert strong_cospectrality(D4, a, b, tol=1e-7) is None


@pytest.mark.criterion("5 exact eigenvalues embed to numeric spectrum; three decision routes agree")
def test_c5_exact_numeric_agreement():
    for n in range(2, 65):
        exact = np.array([e.embed() for e in exact_path_laplacian_eigenvalues(n)])
        numeric = path_L(n).eigenvalues
        assert np.abs(exact.imag).max() <= 1e-12
        assert np.abs(exact.real - numeric[1:]).max() <= 1e-12
        assert abs(numeric[0]) <= 1e-12
    for n in range(2, 25):
        assert decide_pgst_laplacian(n).verdict == decide_by_long_division(n) == is_power_of_two(n)


@pytest.mark.criterion("6 odd-prime and composite witnesses are exact relations with odd sign sum")
def test_c6_witness_contracts():
    for n in (3, 5, 7, 11, 13):
        ell = witness_odd_prime(n)
        assert is_relation(ell, exact_path_laplacian_eigenvalues(n))
        assert odd_index_sum(ell) % 2 == 1
    for n, m, k in ((6, 2, 3), (10, 2, 5), (12, 4, 3)):
        ell = witness_composite(n, m, k)
        assert is_relation(ell, exact_path_laplacian_eigenvalues(n))
        assert odd_index_sum(ell) % 2 == 1


@pytest.mark.criterion("7 property suites: unitarity, projector algebra, transfer bound, reversal, parity")
def test_c7_property_suites(rng):
    for _ in range(40):
        n = int(rng.integers(1, 9))
        G = random_graph(rng, n, weighted=True)
        M = np.array(laplacian_matrix(G), dtype=float)
        D = decompose(M)
        t = float(rng.uniform(0, 100))
        for a in range(1, n + 1):
            assert abs(np.sum(np.abs(evolve_row(D, a, t)) ** 2) - 1) <= 1e-9
        assert np.abs(D.projectors.sum(axis=0) - np.eye(n)).max() <= 1e-10
        for r in range(len(D)):
            for s in range(len(D)):
                target = D.projectors[r] if r == s else 0
                assert np.abs(D.projectors[r] @ D.projectors[s] - target).max() <= 1e-9
    for _ in range(40):
        n = int(rng.integers(2, 9))
        D = decompose(laplacian_matrix(random_tree(rng, n)))
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                assert transfer_bound(D, a, b) <= 1 + 1e-9
    for n in range(2, 17):
        D = path_L(n)
        R = sum((-1) ** r * D.projectors[r] for r in range(n))
        assert np.abs(R - np.fliplr(np.eye(n))).max() <= 1e-9
    checks = 0
    for n in (6, 10, 12, 15, 20):
        d = decide_pgst_laplacian(n)
        eigs = exact_path_laplacian_eigenvalues(n)
        lat = relation_lattice([eigs[r - 1] for r in d.indices], d.indices)
        parities = [sigma_parity(d.sigma, v) for v in lat.basis]
        for _ in range(20):
            c = [int(x) for x in rng.integers(-9, 10, size=lat.rank)]
            v = lat.combine(c)
            assert sigma_parity(d.sigma, v) == sum(a * b for a, b in zip(c, parities)) % 2
            checks += 1
    assert checks == 100


@pytest.mark.criterion("8 L(P_2) transfers perfectly at t = pi/2")
def test_c8_pst_sanity():
    amp = evolve_amplitude(path_L(2), 1, 2, math.pi / 2)
    assert abs(abs(amp) ** 2 - 1) <= 1e-9
