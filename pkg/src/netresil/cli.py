"""Command-line front end.

Subcommands: stats, centrality, attack, fit, generate, aggregate.  Every
command is a pure function of its input files, flags, and seed; each run
writes its result files plus a manifest.json recording the command, tool
version, seed, parameter map, and content digests of the inputs, so a
repeated invocation with the same manifest reproduces the outputs byte for
byte.  Outputs are staged and atomically renamed, so a failed run leaves
nothing behind.

Exit codes: 0 success, 1 usage error, 2 input parse error, 3 computation
error.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
from pathlib import Path

from . import __version__, attack, generators, metrics, powerlaw
from .graph import ParseError, aggregate_union, edge_file_text, load_graph, overlap_edges, role_file_text
from .serialize import csv_text, render_json


class _Parser(argparse.ArgumentParser):
    """argparse variant that exits 1 (not 2) on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _manifest(command: str, seed: int, inputs: dict[str, Path], params: dict[str, object]) -> bytes:
    doc = {
        "command": command,
        "version": __version__,
        "seed": seed,
        "inputs": {
            name: {"path": str(p), "sha256": _sha256(p)} for name, p in sorted(inputs.items())
        },
        "params": {k: str(v) for k, v in sorted(params.items())},
    }
    return render_json(doc).encode()


def _atomic_write_all(outdir: Path, files: dict[str, bytes]) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for name, data in files.items():
        tmp = outdir / f".{name}.tmp"
        tmp.write_bytes(data)
        os.replace(tmp, outdir / name)


def _load(args) -> tuple:
    g, report = load_graph(args.edges, args.roles)
    if report.duplicates_collapsed:
        print(
            f"note: collapsed {report.duplicates_collapsed} duplicate edge record(s)",
            file=sys.stderr,
        )
    return g, report


def _inputs(args) -> dict[str, Path]:
    inputs = {"edges": Path(args.edges)}
    if getattr(args, "roles", None):
        inputs["roles"] = Path(args.roles)
    return inputs


# -- command handlers ----------------------------------------------------


def _cmd_stats(args):
    g, _ = _load(args)
    summary = metrics.summarize(g)
    files = {}
    if args.format == "csv":
        files["summary.csv"] = csv_text(
            ["field", "value"], [[k, v] for k, v in summary.to_dict().items()]
        ).encode()
    else:
        files["summary.json"] = render_json(summary.to_dict()).encode()
    files["degrees.csv"] = csv_text(
        ["node", "degree"], [[v, g.degree(v)] for v in g.nodes]
    ).encode()
    files["ccdf.csv"] = csv_text(
        ["k", "prob"], [[pt.k, pt.prob] for pt in metrics.degree_ccdf(g)]
    ).encode()
    files["degree_rank.csv"] = csv_text(
        ["rank", "node", "degree"], [list(row) for row in metrics.degree_rank(g)]
    ).encode()
    files["clustering_by_degree.csv"] = csv_text(
        ["degree", "mean_clustering"],
        [[k, acc] for k, acc in metrics.clustering_by_degree(g).items()],
    ).encode()
    params = {"format": args.format}
    files["manifest.json"] = _manifest("stats", args.seed, _inputs(args), params)
    return files, []


def _cmd_centrality(args):
    g, _ = _load(args)
    if args.kind == "dc":
        scores = metrics.degree_centrality(g)
    elif args.kind == "bc":
        scores = metrics.betweenness_centrality(g)
    else:
        scores = metrics.closeness_centrality(g)
    rows = [[v, float(scores.scores[v])] for v in scores.ranking]
    files = {
        f"centrality_{args.kind}.csv": csv_text(["node", "score"], rows).encode(),
        "manifest.json": _manifest(
            "centrality", args.seed, _inputs(args), {"kind": args.kind}
        ),
    }
    return files, []


def _build_grid(f_max: float, f_step: float) -> list[float]:
    count = int(round(f_max / f_step))
    grid = [round(j * f_step, 10) for j in range(1, count + 1)]
    return [f for f in grid if f < 1.0]


def _cmd_attack(args):
    g, _ = _load(args)
    include_apl = not args.no_apl
    if args.mode == "parallel":
        f_max = args.f_max if args.f_max is not None else 0.25
        grid = _build_grid(f_max, args.f_step)
        curve = attack.parallel_attack(
            g, args.selector, grid, args.trials, args.seed, include_apl
        )
    else:
        f_max = args.f_max if args.f_max is not None else attack.DEFAULT_SEQUENTIAL_FMAX
        curve = attack.sequential_attack(g, args.selector, f_max, args.seed, include_apl)
    params = {
        "selector": args.selector,
        "mode": args.mode,
        "f_max": f_max,
        "f_step": args.f_step,
        "trials": args.trials if args.trials is not None else "default",
        "apl": include_apl,
    }
    files = {
        f"attack_{args.selector}_{args.mode}.csv": attack.curve_csv(curve).encode(),
        "manifest.json": _manifest("attack", args.seed, _inputs(args), params),
    }
    return files, []


def _cmd_fit(args):
    g, _ = _load(args)
    degrees = [g.degree(v) for v in g.nodes]
    fit = powerlaw.fit_discrete_powerlaw(degrees)
    if args.bootstrap_reps is not None:
        fit.p_value = powerlaw.bootstrap_pvalue(degrees, fit, args.bootstrap_reps, args.seed)
    params = {"bootstrap_reps": args.bootstrap_reps if args.bootstrap_reps else "none"}
    files = {
        "fit.json": render_json(fit.to_dict()).encode(),
        "manifest.json": _manifest("fit", args.seed, _inputs(args), params),
    }
    return files, []


def _cmd_generate(args):
    kind = args.kind
    params: dict[str, object] = {"kind": kind}
    if kind == "er":
        if args.p is None:
            raise ValueError("--p is required for kind 'er'")
        g = generators.erdos_renyi(args.n, args.p, args.seed)
        params.update(n=args.n, p=args.p)
    elif kind == "pa":
        if args.m is None:
            raise ValueError("--m is required for kind 'pa'")
        g = generators.preferential_attachment(args.n, args.m, args.seed)
        params.update(n=args.n, m=args.m)
    elif kind == "powerlaw":
        if args.alpha is None:
            raise ValueError("--alpha is required for kind 'powerlaw'")
        g = generators.config_powerlaw(args.n, args.alpha, args.kmin, args.seed)
        params.update(n=args.n, alpha=args.alpha, kmin=args.kmin)
    else:  # two-clan
        g = generators.dense_two_clan(
            args.n, args.density, args.liaisons, args.bosses, args.seed
        )
        params.update(
            n=args.n, density=args.density, liaisons=args.liaisons, bosses=args.bosses
        )
    files = {"edges.csv": edge_file_text(g).encode()}
    if g.roles:
        files["roles.csv"] = role_file_text(g).encode()
    files["manifest.json"] = _manifest("generate", args.seed, {}, params)
    return files, []


def _cmd_aggregate(args):
    g1, _ = load_graph(args.edges)
    g2, _ = load_graph(args.edges2)
    shared = overlap_edges(g1, g2)
    merged = aggregate_union(g1, g2)
    inputs = {"edges": Path(args.edges), "edges2": Path(args.edges2)}
    files = {
        "edges.csv": edge_file_text(merged).encode(),
        "manifest.json": _manifest("aggregate", args.seed, inputs, {}),
    }
    return files, [f"overlap_edges: {shared}"]


# -- parser --------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="netresil", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, edges=True):
        if edges:
            p.add_argument("--edges", required=True, help="edge-list CSV (src,dst per line)")
            p.add_argument("--roles", default=None, help="optional role CSV (node,role)")
        p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
        p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--format", choices=("csv", "json"), default="json")

    p = sub.add_parser("stats", help="structural summary and degree statistics")
    common(p)
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("centrality", help="per-node centrality score table")
    common(p)
    p.add_argument("--kind", required=True, choices=("dc", "bc", "cc"))
    p.set_defaults(handler=_cmd_centrality)

    p = sub.add_parser("attack", help="vertex-removal degradation curve")
    common(p)
    p.add_argument("--selector", required=True, choices=attack.SELECTORS)
    p.add_argument("--mode", required=True, choices=attack.MODES)
    p.add_argument("--f-max", type=float, default=None,
                   help="largest removal fraction (default 0.25 parallel, 0.30 sequential)")
    p.add_argument("--f-step", type=float, default=0.01,
                   help="grid step for parallel mode (default 0.01)")
    p.add_argument("--trials", type=int, default=None,
                   help="random-attack trials (default 100 for random)")
    p.add_argument("--no-apl", action="store_true", help="skip APL computation")
    p.set_defaults(handler=_cmd_attack)

    p = sub.add_parser("fit", help="discrete power-law fit of the degree sequence")
    common(p)
    p.add_argument("--bootstrap-reps", type=int, default=None,
                   help="bootstrap replicates for the goodness-of-fit p-value")
    p.set_defaults(handler=_cmd_fit)

    p = sub.add_parser("generate", help="write a synthetic network as edge/role files")
    common(p, edges=False)
    p.add_argument("--kind", required=True, choices=("er", "pa", "powerlaw", "two-clan"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=None, help="er: edge probability")
    p.add_argument("--m", type=int, default=None, help="pa: edges per new node")
    p.add_argument("--alpha", type=float, default=None, help="powerlaw: exponent (> 2)")
    p.add_argument("--kmin", type=int, default=1, help="powerlaw: minimum degree")
    p.add_argument("--density", type=float, default=0.97, help="two-clan: within-clan density")
    p.add_argument("--liaisons", type=int, default=4, help="two-clan: liaison count")
    p.add_argument("--bosses", type=int, default=5, help="two-clan: boss count")
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("aggregate", help="edge-wise union of two layers")
    common(p)
    p.add_argument("--edges2", required=True, help="second edge-list CSV")
    p.set_defaults(handler=_cmd_aggregate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    try:
        files, stdout_lines = args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    _atomic_write_all(Path(args.out), files)
    for line in stdout_lines:
        print(line)
    return 0


def entry() -> None:
    raise SystemExit(main(sys.argv[1:]))
