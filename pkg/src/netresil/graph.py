"""Undirected simple graphs: construction, edge-list files, layering, subgraphs.

Node ids are arbitrary non-negative integers and are preserved verbatim in
every output; a dense internal index is used for computation only.  Graphs
are immutable after construction, so they can be shared freely between
concurrent readers and reused across many removal experiments.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from types import MappingProxyType


class Role(Enum):
    """Hierarchy label attached to a node."""

    BOSS = "boss"
    LIEUTENANT = "lieutenant"
    ASSOCIATE = "associate"
    UNKNOWN = "unknown"


class ParseError(Exception):
    """Raised for malformed input files; carries the offending 1-based line."""

    def __init__(self, source: str, line: int, message: str):
        self.source = source
        self.line = line
        self.message = message
        super().__init__(f"{source}:{line}: {message}")


@dataclass
class IngestionReport:
    """Bookkeeping from reading edge/role files."""

    edge_records: int
    duplicates_collapsed: int
    role_rows: int
    nodes_added_by_roles: int


def _check_id(value: object, context: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{context}: node id {value!r} is not an integer")
    if value < 0:
        raise ValueError(f"{context}: node id {value} is negative")
    return value


class Graph:
    """Immutable undirected simple graph over integer node ids.

    Invariants enforced at construction: no self-loops, adjacency is
    symmetric, neighbor sets are duplicate-free, node ids are non-negative.
    Isolated nodes are legal.
    """

    __slots__ = ("_adj", "_roles", "_nodes", "_edge_count", "_dense_cache")

    def __init__(
        self,
        adjacency: Mapping[int, Iterable[int]] | None = None,
        roles: Mapping[int, Role] | None = None,
    ):
        adj: dict[int, set[int]] = {}
        for u, nbrs in (adjacency or {}).items():
            _check_id(u, "adjacency")
            adj.setdefault(u, set())
            for v in nbrs:
                _check_id(v, "adjacency")
                if u == v:
                    raise ValueError(f"self-loop on node {u} is not allowed")
                adj[u].add(v)
                adj.setdefault(v, set()).add(u)
        self._init_from(adj, roles or {})

    @classmethod
    def _unchecked(cls, adj: dict[int, set[int]], roles: Mapping[int, Role]) -> "Graph":
        """Build from adjacency already known to satisfy the invariants."""
        g = cls.__new__(cls)
        g._init_from(adj, roles)
        return g

    def _init_from(self, adj: dict[int, set[int]], roles: Mapping[int, Role]) -> None:
        for v, role in roles.items():
            _check_id(v, "roles")
            if not isinstance(role, Role):
                raise ValueError(f"roles: {role!r} is not a Role")
            adj.setdefault(v, set())
        self._adj = {u: frozenset(nbrs) for u, nbrs in adj.items()}
        self._roles = {v: r for v, r in roles.items() if r is not Role.UNKNOWN}
        self._nodes = tuple(sorted(self._adj))
        self._edge_count = sum(len(nbrs) for nbrs in self._adj.values()) // 2
        self._dense_cache = None

    # -- basic accessors -------------------------------------------------

    @property
    def nodes(self) -> tuple[int, ...]:
        return self._nodes

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def roles(self) -> Mapping[int, Role]:
        """Explicitly labeled nodes only; unlabeled nodes are Role.UNKNOWN."""
        return MappingProxyType(self._roles)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._nodes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj and self._roles == other._roles

    def __repr__(self) -> str:
        return f"Graph(|V|={self.node_count}, |E|={self.edge_count})"

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise ValueError(f"unknown node id: {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def role(self, v: int) -> Role:
        if v not in self._adj:
            raise ValueError(f"unknown node id: {v}")
        return self._roles.get(v, Role.UNKNOWN)

    def edges(self):
        """Yield each undirected edge once as (u, v) with u < v, sorted."""
        for u in self._nodes:
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def _dense(self):
        """Cached (ids, id->index, adjacency-as-index-lists) triple."""
        if self._dense_cache is None:
            ids = self._nodes
            index = {v: i for i, v in enumerate(ids)}
            adj = [sorted(index[w] for w in self._adj[v]) for v in ids]
            self._dense_cache = (ids, index, adj)
        return self._dense_cache


# -- construction and layering -----------------------------------------


def from_edge_list(
    records: Iterable[tuple[int, int]],
    roles: Mapping[int, Role] | None = None,
) -> Graph:
    """Build a graph from (src, dst) records.

    Duplicate and reversed-duplicate records collapse to one undirected
    edge.  Role records may name nodes absent from the edge list; those
    become isolated nodes.  Self-loops are rejected with the offending
    record position.
    """
    adj: dict[int, set[int]] = {}
    for pos, record in enumerate(records, start=1):
        try:
            u, v = record
        except (TypeError, ValueError):
            raise ValueError(f"record {pos}: expected a (src, dst) pair, got {record!r}") from None
        _check_id(u, f"record {pos}")
        _check_id(v, f"record {pos}")
        if u == v:
            raise ValueError(f"record {pos}: self-loop ({u},{v}) is not allowed")
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    g = Graph.__new__(Graph)
    g._init_from(adj, dict(roles or {}))
    return g


def aggregate_union(g1: Graph, g2: Graph) -> Graph:
    """Edge-wise and node-wise union of two layers.

    An edge exists in the result iff it exists in either layer; roles merge
    with the second layer taking precedence on conflict.
    """
    adj: dict[int, set[int]] = {v: set(nbrs) for v, nbrs in g1._adj.items()}
    for v, nbrs in g2._adj.items():
        adj.setdefault(v, set()).update(nbrs)
    roles = dict(g1._roles)
    roles.update(g2._roles)
    return Graph._unchecked(adj, roles)


def overlap_edges(g1: Graph, g2: Graph) -> int:
    """Number of undirected edges present in both layers."""
    count = 0
    for u, v in g1.edges():
        if g2.has_edge(u, v):
            count += 1
    return count


def remove_nodes(g: Graph, victims: Iterable[int]) -> Graph:
    """Non-destructively delete ``victims`` and all incident edges."""
    victimset = frozenset(victims)
    unknown = victimset - set(g._adj)
    if unknown:
        raise ValueError(f"unknown node id(s): {sorted(unknown)}")
    adj = {u: set(nbrs - victimset) for u, nbrs in g._adj.items() if u not in victimset}
    roles = {v: r for v, r in g._roles.items() if v not in victimset}
    return Graph._unchecked(adj, roles)


def egonet(g: Graph, v: int) -> Graph:
    """Induced subgraph on ``v`` and its neighbors, edges among neighbors included."""
    ego = {v} | set(g.neighbors(v))
    adj = {u: set(g._adj[u] & ego) for u in ego}
    roles = {u: r for u, r in g._roles.items() if u in ego}
    return Graph._unchecked(adj, roles)


def egonet_union(g: Graph, vs: Iterable[int]) -> Graph:
    """Node-wise and edge-wise union of the egonets of ``vs``.

    This is the union of the egonet subgraphs, not the induced subgraph on
    the union of their node sets: an edge appears only if it lies inside at
    least one of the egonets.
    """
    adj: dict[int, set[int]] = {}
    for center in sorted(set(vs)):
        ego = {center} | set(g.neighbors(center))
        for u in ego:
            adj.setdefault(u, set()).update(g._adj[u] & ego)
    roles = {u: r for u, r in g._roles.items() if u in adj}
    return Graph._unchecked(adj, roles)


# -- file formats --------------------------------------------------------
#
# Edge-list file: UTF-8 text, one `src,dst` per line, optional `src,dst`
# header; blank lines and lines starting with `#` are ignored.
# Role file: UTF-8 `node,role` lines, role in {boss, lieutenant, associate}
# (case-insensitive), optional `node,role` header.


def read_edge_file(path: str | Path) -> list[tuple[int, int]]:
    path = Path(path)
    records: list[tuple[int, int]] = []
    header_allowed = True
    with path.open("r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if header_allowed and line.lower().replace(" ", "") == "src,dst":
                header_allowed = False
                continue
            header_allowed = False
            parts = line.split(",")
            if len(parts) != 2:
                raise ParseError(str(path), lineno, f"expected 'src,dst', got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(str(path), lineno, f"non-integer node id in {line!r}") from None
            if u < 0 or v < 0:
                raise ParseError(str(path), lineno, f"negative node id in {line!r}")
            if u == v:
                raise ParseError(str(path), lineno, f"self-loop ({u},{v}) is not allowed")
            records.append((u, v))
    return records


def read_role_file(path: str | Path) -> dict[int, Role]:
    path = Path(path)
    roles: dict[int, Role] = {}
    header_allowed = True
    valid = {r.value: r for r in (Role.BOSS, Role.LIEUTENANT, Role.ASSOCIATE)}
    with path.open("r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if header_allowed and line.lower().replace(" ", "") == "node,role":
                header_allowed = False
                continue
            header_allowed = False
            parts = line.split(",")
            if len(parts) != 2:
                raise ParseError(str(path), lineno, f"expected 'node,role', got {line!r}")
            try:
                v = int(parts[0])
            except ValueError:
                raise ParseError(str(path), lineno, f"non-integer node id in {line!r}") from None
            if v < 0:
                raise ParseError(str(path), lineno, f"negative node id in {line!r}")
            name = parts[1].strip().lower()
            if name not in valid:
                raise ParseError(str(path), lineno, f"unknown role {parts[1]!r}")
            roles[v] = valid[name]  # later rows override earlier ones
    return roles


def load_graph(
    edge_path: str | Path,
    role_path: str | Path | None = None,
) -> tuple[Graph, IngestionReport]:
    """Read an edge-list file (and optional role file) into a graph."""
    records = read_edge_file(edge_path)
    roles = read_role_file(role_path) if role_path is not None else {}
    g = from_edge_list(records, roles)
    nodes_from_edges = {u for rec in records for u in rec}
    report = IngestionReport(
        edge_records=len(records),
        duplicates_collapsed=len(records) - g.edge_count,
        role_rows=len(roles),
        nodes_added_by_roles=len(set(roles) - nodes_from_edges),
    )
    return g, report


def edge_file_text(g: Graph) -> str:
    """Canonical edge-list text: one `u,v` line per edge, u < v, sorted."""
    return "".join(f"{u},{v}\n" for u, v in g.edges())


def role_file_text(g: Graph) -> str:
    """Canonical role text for explicitly labeled nodes, sorted by id."""
    return "".join(f"{v},{g._roles[v].value}\n" for v in sorted(g._roles))


def write_edge_file(g: Graph, path: str | Path) -> None:
    Path(path).write_text(edge_file_text(g), encoding="utf-8")


def write_role_file(g: Graph, path: str | Path) -> None:
    Path(path).write_text(role_file_text(g), encoding="utf-8")
