"""Simulated removal campaigns against a network.

Two protocols are provided.  A parallel attack ranks vertices once on the
intact graph (or draws them uniformly at random), deletes the top fraction
f in one sweep, and records what is left, for every f on a grid.  A
sequential attack removes one vertex at a time and re-ranks the remnant
after every removal, so it adapts to the damage it has already done.

Both record, per point, the size of the largest connected component (as a
fraction of the ORIGINAL vertex count) and the average path length of the
remnant; APL is recorded as absent once no connected pair survives.
Random attacks average these observables over independent trials.  Every
stochastic choice derives from the caller's seed, so curves are
reproducible bit for bit regardless of internal scheduling.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from . import metrics
from .graph import Graph, remove_nodes
from .seeds import derive_seed
from .serialize import fmt_float

SELECTORS = ("random", "dc", "bc", "cc")
MODES = ("parallel", "sequential")
DEFAULT_PARALLEL_GRID = tuple(j / 100 for j in range(1, 26))
DEFAULT_SEQUENTIAL_FMAX = 0.30


@dataclass(frozen=True)
class AttackStrategy:
    selector: str  # one of SELECTORS
    mode: str  # one of MODES
    trials: int  # 1 unless selector == "random"
    seed: int


@dataclass
class CurvePoint:
    f: float
    scc_abs: float  # integral for deterministic strategies, a mean for random
    scc_fraction: float
    apl: float | None
    apl_defined_trials: int


@dataclass
class AttackCurve:
    strategy: AttackStrategy
    f_grid: tuple[float, ...]
    points: list[CurvePoint]


def _validate_selector(selector: str) -> None:
    if selector not in SELECTORS:
        raise ValueError(f"unknown selector {selector!r}; expected one of {SELECTORS}")


def _resolve_trials(selector: str, trials: int | None) -> int:
    if trials is None:
        return 100 if selector == "random" else 1
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    if selector != "random" and trials != 1:
        raise ValueError("trials > 1 is only meaningful for the random selector")
    return trials


def _ranking(g: Graph, selector: str) -> tuple[int, ...]:
    if selector == "dc":
        return metrics.degree_centrality(g).ranking
    if selector == "bc":
        return metrics.betweenness_centrality(g).ranking
    if selector == "cc":
        return metrics.closeness_centrality(g).ranking
    raise ValueError(f"selector {selector!r} has no centrality ranking")


def _victims_count(f: float, n: int) -> int:
    return math.floor(f * n + 1e-9)


def _remnant_stats(remnant: Graph, n_original: int, include_apl: bool):
    scc_abs = metrics._largest_component_size(remnant)
    apl = None
    if include_apl:
        try:
            apl = metrics.average_path_length(remnant)
        except ValueError:
            apl = None
    return scc_abs, scc_abs / n_original, apl


def parallel_attack(
    g: Graph,
    selector: str,
    f_grid: Iterable[float] | None = None,
    trials: int | None = None,
    seed: int = 0,
    include_apl: bool = True,
) -> AttackCurve:
    """One-shot removal of the top floor(f * |V|) vertices for every f.

    Targeted selectors rank the intact graph once and take prefixes of that
    ranking; the random selector averages over ``trials`` independent
    uniform victim sets per fraction.
    """
    _validate_selector(selector)
    n = g.node_count
    if n == 0:
        raise ValueError("cannot attack an empty graph")
    grid = tuple(sorted(DEFAULT_PARALLEL_GRID if f_grid is None else f_grid))
    for f in grid:
        if not 0.0 <= f < 1.0:
            raise ValueError(f"fractions must lie in [0, 1), got {f}")
    trials = _resolve_trials(selector, trials)
    strategy = AttackStrategy(selector=selector, mode="parallel", trials=trials, seed=seed)

    intact_abs, intact_frac, intact_apl = _remnant_stats(g, n, include_apl)
    points = [
        CurvePoint(
            f=0.0,
            scc_abs=float(intact_abs),
            scc_fraction=intact_frac,
            apl=intact_apl,
            apl_defined_trials=trials if intact_apl is not None else 0,
        )
    ]

    if selector == "random":
        scc_sums = [0.0] * len(grid)
        apl_sums = [0.0] * len(grid)
        apl_counts = [0] * len(grid)
        ids = np.array(g.nodes)
        for t in range(trials):
            rng = np.random.default_rng(derive_seed(seed, "trial", t))
            for gi, f in enumerate(grid):
                k = _victims_count(f, n)
                victims = rng.choice(ids, size=k, replace=False)
                scc_abs, _, apl = _remnant_stats(
                    remove_nodes(g, (int(v) for v in victims)), n, include_apl
                )
                scc_sums[gi] += scc_abs
                if apl is not None:
                    apl_sums[gi] += apl
                    apl_counts[gi] += 1
        for gi, f in enumerate(grid):
            mean_abs = scc_sums[gi] / trials
            points.append(
                CurvePoint(
                    f=f,
                    scc_abs=mean_abs,
                    scc_fraction=mean_abs / n,
                    apl=(apl_sums[gi] / apl_counts[gi]) if apl_counts[gi] else None,
                    apl_defined_trials=apl_counts[gi],
                )
            )
    else:
        ranking = _ranking(g, selector)
        for f in grid:
            k = _victims_count(f, n)
            scc_abs, frac, apl = _remnant_stats(
                remove_nodes(g, ranking[:k]), n, include_apl
            )
            points.append(
                CurvePoint(
                    f=f,
                    scc_abs=float(scc_abs),
                    scc_fraction=frac,
                    apl=apl,
                    apl_defined_trials=1 if apl is not None else 0,
                )
            )
    return AttackCurve(strategy=strategy, f_grid=grid, points=points)


def sequential_attack(
    g: Graph,
    selector: str,
    f_max: float = DEFAULT_SEQUENTIAL_FMAX,
    seed: int = 0,
    include_apl: bool = True,
) -> AttackCurve:
    """Adaptive one-at-a-time removal until floor(f_max * |V|) are gone.

    Targeted selectors recompute their centrality on the current remnant
    before every removal; the random selector deletes one uniform surviving
    vertex per step.  Fractions are relative to the original vertex count.
    """
    _validate_selector(selector)
    n = g.node_count
    if n == 0:
        raise ValueError("cannot attack an empty graph")
    if not 0.0 < f_max < 1.0:
        raise ValueError(f"f_max must lie in (0, 1), got {f_max}")
    steps = _victims_count(f_max, n)
    strategy = AttackStrategy(selector=selector, mode="sequential", trials=1, seed=seed)
    rng = np.random.default_rng(derive_seed(seed, "sequential"))

    intact_abs, intact_frac, intact_apl = _remnant_stats(g, n, include_apl)
    points = [
        CurvePoint(
            f=0.0,
            scc_abs=float(intact_abs),
            scc_fraction=intact_frac,
            apl=intact_apl,
            apl_defined_trials=1 if intact_apl is not None else 0,
        )
    ]
    current = g
    fs = []
    for j in range(1, steps + 1):
        if selector == "random":
            survivors = current.nodes
            victim = survivors[int(rng.integers(len(survivors)))]
        else:
            victim = _ranking(current, selector)[0]
        current = remove_nodes(current, (victim,))
        scc_abs, frac, apl = _remnant_stats(current, n, include_apl)
        f = j / n
        fs.append(f)
        points.append(
            CurvePoint(
                f=f,
                scc_abs=float(scc_abs),
                scc_fraction=frac,
                apl=apl,
                apl_defined_trials=1 if apl is not None else 0,
            )
        )
    return AttackCurve(strategy=strategy, f_grid=tuple(fs), points=points)


def attack_sweep(
    g: Graph,
    selectors: Sequence[str],
    modes: Sequence[str],
    f_grid: Iterable[float] | None = None,
    f_max: float = DEFAULT_SEQUENTIAL_FMAX,
    trials: int | None = None,
    seed: int = 0,
    include_apl: bool = True,
) -> list[AttackCurve]:
    """One curve per (selector, mode) pair, all from the same intact graph.

    Each curve derives its own child seed from the master seed and its
    labels, so the curves are independent and insensitive to the order in
    which they are produced.
    """
    selectors = list(selectors)
    modes = list(modes)
    if not selectors or not modes:
        raise ValueError("selectors and modes must be non-empty")
    for mode in modes:
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    curves = []
    for selector in selectors:
        per_curve_trials = trials if selector == "random" else None
        for mode in modes:
            child = derive_seed(seed, selector, mode)
            if mode == "parallel":
                curves.append(
                    parallel_attack(g, selector, f_grid, per_curve_trials, child, include_apl)
                )
            else:
                curves.append(
                    sequential_attack(g, selector, f_max, child, include_apl)
                )
    return curves


def curve_csv(curve: AttackCurve) -> str:
    """CSV rendering: selector,mode,f,scc_fraction,scc_abs,apl,apl_defined_trials."""
    lines = ["selector,mode,f,scc_fraction,scc_abs,apl,apl_defined_trials"]
    for p in curve.points:
        scc_abs = (
            str(int(p.scc_abs)) if float(p.scc_abs).is_integer() else fmt_float(p.scc_abs)
        )
        apl = "" if p.apl is None else fmt_float(p.apl)
        lines.append(
            f"{curve.strategy.selector},{curve.strategy.mode},{fmt_float(p.f)},"
            f"{fmt_float(p.scc_fraction)},{scc_abs},{apl},{p.apl_defined_trials}"
        )
    return "\n".join(lines) + "\n"
