"""Command-line interface: ``mixspec <command> ...``.

Output is line oriented; machine-readable lines start with a stable key and
a colon.  Input files hold one or more graphs in the core text format,
separated by blank lines.
"""

from __future__ import annotations

import argparse
import os
import sys

from ..classify.radius import small_radius_classify
from ..classify.rank import rank2_recognize, rank3_recognize, rank_exact
from ..core import GraphFormatError, MixedGraph, iter_graphs, serialize_graph
from ..nmatrix import charpoly, charpoly_subgraphs, eigenvalues
from ..switching import switching_equivalent
from .cospectral import find_cospectral
from .orientations import SweepSpec, connected_graphs, enumerate_orientations
from .suites import SUITES, verify_suite


def _read_graphs(path: str) -> list[MixedGraph]:
    with open(path, encoding="utf-8") as fh:
        graphs = list(iter_graphs(fh.read()))
    if not graphs:
        raise GraphFormatError(f"{path}: no graph found")
    return graphs


def _cmd_spectrum(args, out) -> int:
    for M in _read_graphs(args.file):
        spec = eigenvalues(M, args.tol)
        out.write("eigenvalues: " + " ".join(f"{x:.12g}" for x in spec) + "\n")
        out.write(charpoly(M).machine_line() + "\n")
    return 0


def _cmd_charpoly(args, out) -> int:
    for M in _read_graphs(args.file):
        if args.method in ("exact", "both"):
            P = charpoly(M)
            out.write(P.machine_line() + "\n")
        if args.method in ("subgraph", "both"):
            Q = charpoly_subgraphs(M)
            if args.method == "both" and Q != P:
                raise AssertionError(f"routes disagree: {P} vs {Q}")
            key = "charpoly-subgraph: " if args.method == "both" else "charpoly: "
            out.write(key + " ".join(map(str, Q.coeffs)) + "\n")
    return 0


def _cmd_rank(args, out) -> int:
    for M in _read_graphs(args.file):
        r = rank_exact(M)
        line = f"rank: {r.rank} nullity={r.nullity}"
        m2 = rank2_recognize(M)
        if m2 is not None:
            line += f" tag=K_{{{m2.a},{m2.b}}}+{m2.t}K1"
        elif M.is_connected():
            tag = rank3_recognize(M)
            if tag is not None:
                line += f" tag={tag}"
        out.write(line + "\n")
    return 0


def _cmd_classify(args, out) -> int:
    for M in _read_graphs(args.file):
        out.write(small_radius_classify(M, args.alpha2).render() + "\n")
    return 0


def _cmd_switch_equiv(args, out) -> int:
    M1 = _read_graphs(args.file1)[0]
    M2 = _read_graphs(args.file2)[0]
    verdict = switching_equivalent(M1, M2)
    if verdict:
        out.write("equivalent: yes\n")
    out.write(verdict.render() + "\n")
    return 0


def _cmd_enumerate(args, out) -> int:
    if args.all_n is not None:
        bases = list(connected_graphs(args.all_n))
    else:
        bases = []
        for M in _read_graphs(args.underlying):
            if M.underlying() not in bases:
                bases.append(M.underlying())
    first = True
    for G in bases:
        for M in enumerate_orientations(G, args.dedupe):
            if not first:
                out.write("\n")
            out.write(serialize_graph(M))
            first = False
    return 0


def _cmd_cospectral(args, out) -> int:
    paths: list[str] = []
    for item in args.inputs:
        if os.path.isdir(item):
            paths.extend(os.path.join(item, f) for f in sorted(os.listdir(item)) if not f.startswith("."))
        else:
            paths.append(item)
    graphs = [M for p in paths for M in _read_graphs(p)]
    out.write(find_cospectral(graphs, args.relation).render())
    return 0


def _cmd_verify(args, out) -> int:
    spec = SweepSpec(n_max=args.nmax, alpha2=args.alpha2, workers=args.workers, seed=args.seed)
    report = verify_suite(args.suite, spec)
    out.write(report.render())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mixspec", description="Exact spectra of mixed graphs under the N-matrix.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", help="eigenvalues and characteristic polynomial")
    s.add_argument("file")
    s.add_argument("--tol", type=float, default=1e-12)
    s.set_defaults(run=_cmd_spectrum)

    s = sub.add_parser("charpoly", help="characteristic polynomial coefficients")
    s.add_argument("file")
    s.add_argument("--method", choices=("exact", "subgraph", "both"), default="exact")
    s.set_defaults(run=_cmd_charpoly)

    s = sub.add_parser("rank", help="rank, nullity and rank-2/rank-3 tags")
    s.add_argument("file")
    s.set_defaults(run=_cmd_rank)

    s = sub.add_parser("classify", help="spectral radius below sqrt(alpha2), with catalog tag")
    s.add_argument("file")
    s.add_argument("--alpha2", type=int, choices=(2, 3, 4), required=True)
    s.set_defaults(run=_cmd_classify)

    s = sub.add_parser("switch-equiv", help="switching equivalence with a witness")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(run=_cmd_switch_equiv)

    s = sub.add_parser("enumerate", help="all orientations of underlying graphs")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--underlying")
    src.add_argument("--all-n", type=int)
    s.add_argument("--dedupe", choices=("none", "switching"), default="none")
    s.set_defaults(run=_cmd_enumerate)

    s = sub.add_parser("cospectral", help="group graphs by characteristic polynomial")
    s.add_argument("--inputs", nargs="+", required=True)
    s.add_argument("--relation", choices=("labelled", "isomorphism"), default="labelled")
    s.set_defaults(run=_cmd_cospectral)

    s = sub.add_parser("verify", help="run an invariant suite; exit status 0 iff it passes")
    s.add_argument("--suite", choices=SUITES, required=True)
    s.add_argument("--nmax", type=int, required=True)
    s.add_argument("--alpha2", type=int, choices=(2, 3, 4), default=4)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(run=_cmd_verify)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.run(args, out)
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
