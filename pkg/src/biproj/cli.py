"""Command-line interface: ``biproj {project,stats,verify,gen,bench}``.

Exit status: 0 success, 1 verification failure, 2 usage or parse error,
3 I/O error. Diagnostics go to stderr, data to stdout or ``--output``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import io as gio
from .bench import run_bench
from .errors import BiprojError, UnsatisfiableSpec
from .generator import Blocks, Complete, FixedM, GenSpec, Gnp, WithPendantPair, generate
from .graph import BipartiteGraph, degree_sums, density_stats, is_connected
from .projection import Side, project, project_sparse, project_weighted
from .verify import Status, verify_all

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

log = logging.getLogger("biproj")


class _IOFailure(Exception):
    pass


def _read_input(path: str, fmt: str | None) -> BipartiteGraph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror or exc}") from exc
    return gio.parse_graph(text, fmt)


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc.strerror or exc}") from exc


def _model_from_args(args, n1: int, n2: int):
    if args.model == "gnp":
        return Gnp(args.p)
    if args.model == "fixedm":
        return FixedM(args.m if args.m is not None else 2 * (n1 + n2))
    if args.model == "complete":
        return Complete()
    if args.model == "blocks":
        return Blocks()
    raise ValueError(f"unknown model {args.model!r}")


def cmd_project(args) -> int:
    g = _read_input(args.input, args.format)
    proj = project(g, Side(args.side), weighted=args.weighted, algo=args.algo)
    text = gio.format_adjacency_matrix(proj) if args.dense else gio.format_projection(proj)
    _write_output(text, args.output)
    return EXIT_OK


def stats_record(g: BipartiteGraph) -> dict:
    sums = degree_sums(g)
    dens = density_stats(g)
    deg_u = [len(a) for a in g.adj_u]
    deg_s = [len(a) for a in g.adj_s]
    return {
        "n1": g.n1,
        "n2": g.n2,
        "m": g.m,
        "sum_deg_u": sums.sum_u,
        "sum_deg_s": sums.sum_s,
        "min_deg_u": min(deg_u),
        "max_deg_u": max(deg_u),
        "min_deg_s": min(deg_s),
        "max_deg_s": max(deg_s),
        "max_edges": dens.max_edges,
        "density": dens.density,
        "density_fraction": f"{g.m}/{dens.max_edges}",
        "linear_budget": dens.linear_budget,
        "connected": is_connected(g),
    }


def cmd_stats(args) -> int:
    g = _read_input(args.input, args.format)
    rec = stats_record(g)
    if args.json:
        text = json.dumps(rec, indent=2) + "\n"
    else:
        lines = []
        for k, v in rec.items():
            if isinstance(v, bool):
                v = str(v).lower()
            elif isinstance(v, float):
                v = f"{v:.6g}"
            lines.append(f"{k}={v}")
        text = "\n".join(lines) + "\n"
    _write_output(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_input(args.input, args.format)
    proj, wproj = project_sparse(g), project_weighted(g)
    if args.debug_corrupt and proj.edges:
        i, j = proj.sorted_edges()[0]
        log.warning("debug: removing projected edge (%d, %d) before checking", i, j)
        proj, wproj = proj.without_edge(i, j), wproj.without_edge(i, j)
    reports = verify_all(g, proj, wproj)
    if args.json:
        text = json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    else:
        text = "\n".join(r.to_line() for r in reports) + "\n"
    _write_output(text, args.output)
    failed = any(r.status is Status.FAIL for r in reports)
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_gen(args) -> int:
    model = _model_from_args(args, args.n1, args.n2)
    if args.pendant_pair:
        model = WithPendantPair(model)
    g = generate(GenSpec(args.n1, args.n2, model, seed=args.seed, require_connected=args.connected))
    text = gio.format_biadjacency(g) if args.out_format == "biadj" else gio.format_edge_list(g)
    _write_output(text, args.output)
    return EXIT_OK


def _parse_size(text: str) -> tuple[int, int]:
    try:
        a, b = text.lower().split("x")
        n1, n2 = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"size must look like N1xN2, got {text!r}") from None
    if n1 < 1 or n2 < 1:
        raise argparse.ArgumentTypeError(f"sizes must be positive, got {text!r}")
    return n1, n2


def cmd_bench(args) -> int:
    sizes = [size for group in args.sizes for size in group]
    run = run_bench(
        sizes,
        lambda n1, n2: _model_from_args(args, n1, n2),
        reps=args.reps,
        seed=args.seed,
        algorithms=args.algo or ("MatrixScan", "SparseWedge"),
    )
    _write_output(run.to_csv(), args.output)
    for n1, n2, msg in run.errors:
        print(f"error\t{n1}x{n2}\t{msg}", file=sys.stderr)
    for r in run.records:
        dense_cells = r.n1 * r.n1
        print(
            f"memory\t{r.algorithm}\t{r.n1}x{r.n2}\tdense_cells={dense_cells}\tsparse_edges={r.peak_edges_out}",
            file=sys.stderr,
        )
    for n2, slope in run.loglog_slopes("MatrixScan").items():
        print(f"slope\tMatrixScan\tn2={n2}\tlog-log slope vs n1={slope:.3f}", file=sys.stderr)
    return EXIT_OK


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="input graph file, '-' for stdin")
    p.add_argument("--format", choices=gio.FORMATS, help="input format (auto-detected by default)")
    p.add_argument("--output", "-o", help="write data here instead of stdout")


def _add_model(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", choices=("gnp", "fixedm", "complete", "blocks"), default="gnp")
    p.add_argument("--p", type=float, default=0.5, help="edge probability for gnp")
    p.add_argument("--m", type=int, help="edge count for fixedm (bench default: 2*(n1+n2))")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="biproj", description="One-mode projections of bipartite graphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("project", help="compute a one-mode projection")
    _add_input(p)
    p.add_argument("--side", choices=("u", "s"), default="u", help="vertex set that survives")
    p.add_argument("--weighted", action="store_true", help="emit common-neighbour counts")
    p.add_argument("--algo", choices=("matrix", "sparse"), default="sparse")
    p.add_argument("--dense", action="store_true", help="emit an n x n 0/1 adjacency matrix")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("stats", help="degree, density and connectivity statistics")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="check the projection properties on one graph")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--debug-corrupt", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a seeded random bipartite graph")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    _add_model(p)
    p.add_argument("--connected", action="store_true", help="rejection-sample until connected")
    p.add_argument("--pendant-pair", action="store_true", help="append an isolated pendant edge")
    p.add_argument("--out-format", choices=gio.FORMATS, default="edgelist")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time MatrixScan against SparseWedge, CSV output")
    p.add_argument(
        "--sizes",
        type=lambda t: [_parse_size(x) for x in t.split(",") if x],
        action="append",
        required=True,
        help="comma-separated N1xN2 sizes; may be repeated",
    )
    _add_model(p)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--algo", action="append", choices=("MatrixScan", "SparseWedge"))
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except _IOFailure as exc:
        print(f"biproj: {exc}", file=sys.stderr)
        return EXIT_IO
    except (BiprojError, ValueError) as exc:
        kind = "generator" if isinstance(exc, UnsatisfiableSpec) else "input"
        print(f"biproj: {kind} error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
