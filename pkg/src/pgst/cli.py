"""Command-line interface: ``pgst decide|trace|peak|sweep|witness``.

Exit status is 0 whenever the analysis ran, whatever the verdict, and 2 for
usage or input errors.  Set ``PGST_LOG`` (e.g. ``DEBUG``) for log output on
stderr.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .core import (
    GraphError,
    HamiltonianKind,
    adjacency_matrix,
    build_path,
    laplacian_matrix,
    parse_graph_text,
)
from .dynamics import fidelity_trace, find_peak, phase_at_peak
from .exact import (
    blocking_witness,
    decide_pgst_adjacency_path,
    decide_pgst_laplacian,
    is_power_of_two,
    is_relation,
    exact_path_laplacian_eigenvalues,
)
from .report import AnalysisReport, dumps, header
from .spectral import decompose, is_cospectral, strong_cospectrality

log = logging.getLogger("pgst")

SWEEP_HORIZON = 1000.0


class UsageError(Exception):
    pass


def _graph_input(args):
    if getattr(args, "graph", None):
        path = Path(args.graph)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read graph file {path}: {exc.strerror}") from None
        try:
            G = parse_graph_text(text)
        except GraphError as exc:
            raise UsageError(f"{path}: {exc}") from None
        return G, {"kind": "file", "path": str(path), "n": G.n}
    if args.path is None:
        raise UsageError("one of --graph or --path is required")
    if args.path < 1:
        raise UsageError("--path must be positive")
    return build_path(args.path), {"kind": "path", "n": args.path}


def _operator(G, model: str):
    """Matrix whose exponential is evaluated, with its label.

    XYZ dynamics use L(G) itself: the shift and factor -2 in the Heisenberg
    Hamiltonian only rescale time and add a global phase.
    """
    if HamiltonianKind(model) is HamiltonianKind.XYZ:
        return laplacian_matrix(G), "L"
    return 2 * adjacency_matrix(G), "2A"


def _pair(args, n):
    pair = args.pair if args.pair is not None else (1, n)
    a, b = pair
    if not (1 <= a <= n and 1 <= b <= n):
        raise UsageError(f"pair ({a}, {b}) outside 1..{n}")
    return a, b


def _exact_decision(G, input_desc, model, pair):
    n = G.n
    if input_desc["kind"] != "path":
        return {"status": "unavailable", "reason": "exact decisions are implemented for paths only"}
    if n < 2:
        return {"status": "unavailable", "reason": "n must be at least 2"}
    if pair[0] + pair[1] != n + 1:
        return {"status": "unavailable", "reason": "pair is not a mirror pair (j, n+1-j)"}
    if model == "xyz":
        d = decide_pgst_laplacian(n, pair)
    elif pair == (1, n) or pair == (n, 1):
        d = decide_pgst_adjacency_path(n)
    else:
        return {"status": "unavailable", "reason": "XY internal pairs are not supported"}
    return {"status": "exact", **d.to_dict()}


def _analysis(command, args, G, input_desc, pair):
    M, op = _operator(G, args.model)
    D = decompose(M)
    a, b = pair
    sc = strong_cospectrality(D, a, b)
    report = AnalysisReport(
        command=command,
        input=input_desc,
        model=args.model.upper(),
        operator=op,
        pair=[a, b],
        cospectral=is_cospectral(D, a, b),
        strongly_cospectral=sc is not None,
        support=list(sc.support) if sc else None,
        sigma=list(sc.sigma) if sc else None,
        decision=_exact_decision(G, input_desc, args.model, pair),
    )
    return report, D


def cmd_decide(args):
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    G = build_path(args.n)
    report, _ = _analysis("decide", args, G, {"kind": "path", "n": args.n}, _pair(args, args.n))
    report.parameters = {"n": args.n, "model": args.model}
    print(report.to_json())


def cmd_peak(args):
    if not 0 < args.epsilon < 1:
        raise UsageError("--epsilon must lie in (0, 1)")
    if args.horizon is not None and args.horizon <= 0:
        raise UsageError("--horizon must be positive")
    G, desc = _graph_input(args)
    pair = _pair(args, G.n)
    report, D = _analysis("peak", args, G, desc, pair)
    pk = find_peak(D, *pair, 1 - args.epsilon, horizon=args.horizon, budget=args.budget,
                   mode="global" if args.global_ else "first")
    peak = pk.to_dict()
    peak["phase"] = phase_at_peak(D, *pair, pk)
    report.peak = peak
    report.parameters = {"epsilon": args.epsilon, "horizon": args.horizon,
                         "budget": args.budget, "mode": "global" if args.global_ else "first"}
    print(report.to_json())


def cmd_trace(args):
    if not args.t0 < args.t1:
        raise UsageError("--t0 must be below --t1")
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    G, desc = _graph_input(args)
    pair = _pair(args, G.n)
    M, op = _operator(G, args.model)
    tr = fidelity_trace(decompose(M), *pair, args.t0, args.t1, args.steps)
    csv_text = tr.to_csv()
    if args.out:
        try:
            Path(args.out).write_text(csv_text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
    elif args.format == "csv":
        sys.stdout.write(csv_text)
        return
    t_max, p_max = tr.argmax()
    print(dumps({**header("trace"), "input": desc, "model": args.model.upper(), "operator": op,
                 "pair": list(pair), "t0": args.t0, "t1": args.t1, "steps": args.steps,
                 "max_prob": p_max, "argmax_t": t_max, "out": args.out}))


def sweep_rows(max_n: int, epsilon: float, model: str = "xyz", horizon: float = SWEEP_HORIZON):
    """Rows for ``sweep``: every n up to ``max_n``, plus every mirror pair for
    powers of two.  Deterministic order (n, then j)."""
    rows = []
    for n in range(2, max_n + 1):
        pairs = [(1, n)]
        if is_power_of_two(n):
            pairs += [(j, n + 1 - j) for j in range(2, n // 2 + 1)]
        M = laplacian_matrix(build_path(n)) if model == "xyz" else 2 * adjacency_matrix(build_path(n))
        D = decompose(M)
        for pair in pairs:
            if model == "xyz":
                d = decide_pgst_laplacian(n, pair)
                eigs = exact_path_laplacian_eigenvalues(n)
                chosen = [eigs[r - 1] for r in d.indices]
            else:
                if pair != (1, n):
                    continue
                d = decide_pgst_adjacency_path(n)
                chosen = None
            witness = None
            if d.witness is not None:
                witness = {"indices": list(d.indices), "relation": list(d.witness),
                           "verified": chosen is None or is_relation(d.witness, chosen)}
                if model == "xyz" and pair == (1, n):
                    bw = blocking_witness(n)
                    witness.update(construction=bw.kind, m=bw.m, k=bw.k)
            pk = find_peak(D, *pair, 1 - epsilon, horizon=horizon, mode="first")
            sc = strong_cospectrality(D, *pair)
            rows.append({**header("sweep"), "model": model.upper(), "n": n, "pair": list(pair),
                         "strongly_cospectral": sc is not None, "verdict": d.verdict,
                         "witness": witness, "best_fidelity": pk.fidelity, "tau": pk.tau,
                         "found": pk.found, "horizon": horizon, "epsilon": epsilon})
    return rows


def cmd_sweep(args):
    if args.max_n < 2:
        raise UsageError("--max-n must be at least 2")
    if not 0 < args.epsilon < 1:
        raise UsageError("--epsilon must lie in (0, 1)")
    for row in sweep_rows(args.max_n, args.epsilon, args.model, args.horizon):
        print(dumps(row))


def cmd_witness(args):
    n = args.n
    if n < 3 or is_power_of_two(n):
        raise UsageError(f"n={n} is a power of two (or < 3): no blocking relation exists")
    w = blocking_witness(n)
    eigs = exact_path_laplacian_eigenvalues(n)
    print(dumps({**header("witness"), **w.to_dict(), "verified": is_relation(w.ell, eigs)}))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pgst", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"pgst {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def pair_arg(p):
        p.add_argument("--pair", nargs=2, type=int, metavar=("A", "B"),
                       help="1-based vertex pair (default: 1 n)")

    def model_arg(p):
        p.add_argument("--model", choices=["xyz", "xy"], default="xyz")

    def graph_args(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--graph", help="graph file: 'n' then 'i j [weight]' lines")
        src.add_argument("--path", type=int, help="unweighted path on N vertices")

    p = sub.add_parser("decide", help="exact transfer decision for a chain")
    p.add_argument("--n", type=int, required=True)
    pair_arg(p)
    model_arg(p)
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("trace", help="sample |U(t)_{a,b}| on a uniform grid")
    graph_args(p)
    pair_arg(p)
    model_arg(p)
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, required=True)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--out", help="CSV output file")
    p.add_argument("--format", choices=["json", "csv"], default="json",
                   help="stdout format when --out is not given")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("peak", help="search for a time with fidelity >= 1 - epsilon")
    graph_args(p)
    pair_arg(p)
    model_arg(p)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--horizon", type=float, default=None,
                   help="search window (default: 1e3 * 2pi / min eigenvalue gap, capped at 1e6)")
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--global", dest="global_", action="store_true",
                   help="best fidelity over the whole horizon instead of the first hit")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_peak)

    p = sub.add_parser("sweep", help="decisions and peak searches for n = 2..N")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=0.01)
    model_arg(p)
    p.add_argument("--horizon", type=float, default=SWEEP_HORIZON)
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("witness", help="explicit blocking relation for n not a power of two")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None) -> int:
    level = os.environ.get("PGST_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"pgst {args.command}: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
