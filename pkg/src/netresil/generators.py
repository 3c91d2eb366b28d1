"""Seeded synthetic-network generators.

Four families cover the reference topologies used by the resilience
experiments: Erdos-Renyi (homogeneous baseline), preferential attachment
and a power-law configuration model (heterogeneous, heavy-tailed), and a
dense two-clan construction that stands in for a small, tightly knit
organization with liaison hubs and a handful of low-degree bosses.

All generators are pure functions of their parameters and seed.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, Role
from .powerlaw import _sample_with_rng
from .seeds import derive_seed


def _graph_over_range(n: int, edges: list[tuple[int, int]], roles=None) -> Graph:
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return Graph._unchecked(adj, roles or {})


def erdos_renyi(n: int, p: float, seed: int = 0) -> Graph:
    """Each of the C(n,2) unordered pairs is an edge independently with probability p."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    edges: list[tuple[int, int]] = []
    for i in range(n - 1):
        hits = np.nonzero(rng.random(n - 1 - i) < p)[0]
        edges.extend((i, int(i + 1 + j)) for j in hits)
    return _graph_over_range(n, edges)


def preferential_attachment(n: int, m: int, seed: int = 0) -> Graph:
    """Degree-proportional growth from an m-clique; each new node adds m edges.

    Target selection resamples on collision, so the graph stays simple.
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if m >= n:
        raise ValueError(f"m must be smaller than n, got m={m}, n={n}")
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    # every endpoint occurrence in `bag` gives its node one unit of selection mass
    bag: list[int] = [v for edge in edges for v in edge]
    if m == 1:
        bag = [0]  # a single seed node has no clique edges to seed the bag
    for v in range(m, n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(bag[int(rng.integers(len(bag)))])
        for t in sorted(targets):
            edges.append((t, v))
            bag.append(t)
            bag.append(v)
    return _graph_over_range(n, edges)


def draw_degree_sequence(n: int, alpha: float, kmin: int, seed: int = 0) -> np.ndarray:
    """Power-law degree sequence with an even total (last draw resampled if odd)."""
    if alpha <= 2:
        raise ValueError(f"alpha must exceed 2 for a finite mean, got {alpha}")
    if kmin < 1:
        raise ValueError(f"kmin must be a positive integer, got {kmin}")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if kmin > n - 1:
        raise ValueError(f"kmin={kmin} exceeds the maximum simple-graph degree {n - 1}")
    rng = np.random.default_rng(seed)
    seq = _sample_with_rng(alpha, kmin, n, rng)
    while True:  # a node cannot have more than n-1 distinct neighbors
        over = seq > n - 1
        if not over.any():
            break
        seq[over] = _sample_with_rng(alpha, kmin, int(over.sum()), rng)
    while int(seq.sum()) % 2:
        seq[-1] = min(int(_sample_with_rng(alpha, kmin, 1, rng)[0]), n - 1)
    return seq


def _pair_stubs(degrees: np.ndarray, seed: int) -> list[tuple[int, int]]:
    """Uniform stub matching; the returned multigraph realizes `degrees` exactly."""
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(len(degrees), dtype=np.int64), degrees)
    stubs = rng.permutation(stubs)
    return list(zip(stubs[0::2].tolist(), stubs[1::2].tolist()))


def config_powerlaw(n: int, alpha: float, kmin: int = 1, seed: int = 0) -> Graph:
    """Configuration-model wiring of a drawn power-law degree sequence.

    Self-loops are deleted and multi-edges collapsed afterwards, which
    perturbs the realized degrees slightly.
    """
    seq = draw_degree_sequence(n, alpha, kmin, derive_seed(seed, "degrees"))
    raw = _pair_stubs(seq, derive_seed(seed, "wiring"))
    edges = [(u, v) for u, v in raw if u != v]
    return _graph_over_range(n, edges)


def dense_two_clan(
    n: int,
    clan_density: float,
    liaison_count: int,
    boss_count: int,
    seed: int = 0,
) -> Graph:
    """Two dense clans bridged by liaison hubs, plus low-degree bosses.

    Ordinary members split into two near-equal clans with no direct edges
    between them; each within-clan pair is present with probability
    ``clan_density``.  Liaison nodes (labeled Lieutenant) connect to both
    clans, and to each other, at the same density; they are the visible
    high-degree bridges.  Bosses (labeled Boss) keep exactly five contacts
    each, all inside their own clan and disjoint from other bosses'
    contacts; a boss's men lower their own profile, so every boss edge
    displaces two of the contact's within-clan edges.  Whenever bosses are
    present the two clans also hold one discreet courier line open: a
    single edge between one deliberately thin-profiled member of each clan.
    The courier line is invisible to rankings taken on the intact network
    (all short routes run through the liaisons) but becomes the critical
    cut once the liaisons are gone.  Everyone outside the hierarchy is
    labeled Associate.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 0.0 < clan_density <= 1.0:
        raise ValueError(f"clan_density must lie in (0, 1], got {clan_density}")
    if liaison_count < 1:
        raise ValueError(f"liaison_count must be at least 1, got {liaison_count}")
    if boss_count < 0:
        raise ValueError(f"boss_count must be non-negative, got {boss_count}")
    members = n - liaison_count - boss_count
    if members < 2:
        raise ValueError("liaison_count + boss_count leaves fewer than 2 clan members")
    half = (members + 1) // 2
    clan1 = list(range(half))
    clan2 = list(range(half, members))
    liaisons = list(range(members, members + liaison_count))
    bosses = list(range(members + liaison_count, n))
    contacts_per_boss = 5
    if boss_count:
        need1 = contacts_per_boss * len(bosses[0::2]) + 1
        need2 = contacts_per_boss * len(bosses[1::2]) + 1
        if len(clan1) < need1 or len(clan2) < need2:
            raise ValueError("clans too small to host disjoint boss contact sets")

    rng = np.random.default_rng(seed)

    def sample_pairs(pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
        if not pairs:
            return []
        hits = np.nonzero(rng.random(len(pairs)) < clan_density)[0]
        return [pairs[j] for j in hits]

    def within(group: list[int]) -> list[tuple[int, int]]:
        return [(u, v) for i, u in enumerate(group) for v in group[i + 1 :]]

    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    liaison_pairs = [(v, L) for L in liaisons for v in clan1 + clan2] + within(liaisons)
    for block in (within(clan1), within(clan2), liaison_pairs):
        for u, v in sample_pairs(block):
            adj[u].add(v)
            adj[v].add(u)

    def clan_bounds(v: int) -> tuple[int, int]:
        return (0, half) if v < half else (half, members)

    def drop_clan_edges(v: int, count: int) -> None:
        lo, hi = clan_bounds(v)
        spare = sorted(w for w in adj[v] if lo <= w < hi)
        for _ in range(min(count, len(spare))):
            drop = spare.pop(int(rng.integers(len(spare))))
            adj[v].discard(drop)
            adj[drop].discard(v)

    if boss_count:
        courier1 = int(rng.choice(np.array(clan1)))
        courier2 = int(rng.choice(np.array(clan2)))
        adj[courier1].add(courier2)
        adj[courier2].add(courier1)
        for courier in (courier1, courier2):
            lo, hi = clan_bounds(courier)
            clan_deg = sum(1 for w in adj[courier] if lo <= w < hi)
            drop_clan_edges(courier, round(0.2 * clan_deg))

        pool1 = np.array([v for v in clan1 if v != courier1])
        pool2 = np.array([v for v in clan2 if v != courier2])
        picks1 = iter(
            int(t)
            for t in rng.choice(pool1, size=contacts_per_boss * len(bosses[0::2]), replace=False)
        )
        picks2 = iter(
            int(t)
            for t in rng.choice(pool2, size=contacts_per_boss * len(bosses[1::2]), replace=False)
        )
        for i, boss in enumerate(bosses):
            picks = picks1 if i % 2 == 0 else picks2
            for _ in range(contacts_per_boss):
                t = next(picks)
                drop_clan_edges(t, 2)
                adj[boss].add(t)
                adj[t].add(boss)

    roles = {v: Role.ASSOCIATE for v in clan1 + clan2}
    roles.update({v: Role.LIEUTENANT for v in liaisons})
    roles.update({v: Role.BOSS for v in bosses})
    return Graph._unchecked(adj, roles)
