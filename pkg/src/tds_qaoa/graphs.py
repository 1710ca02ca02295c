"""Undirected simple graphs, (total) dominating set checks, and exact oracles.

A dominating set D covers every vertex outside D through at least one edge.
A *total* dominating set additionally requires every vertex of D itself to
have a neighbor in D, i.e. every vertex of the graph must see D through its
open neighborhood N(i) (which excludes i).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable


class InfeasibleGraphError(ValueError):
    """Raised when a graph admits no total dominating set (isolated vertex)."""


class Graph:
    """Undirected simple graph on vertices 0..n_vertices-1.

    Stores a canonical edge list plus a precomputed adjacency structure, so
    neighborhood queries cost O(deg). Instances are read-only after
    construction and safe to share across threads.
    """

    __slots__ = ("n_vertices", "edges", "_adjacency", "_neighbor_masks")

    def __init__(self, n_vertices: int, edges: Iterable[tuple[int, int]]):
        if n_vertices < 0:
            raise ValueError(f"n_vertices must be nonnegative, got {n_vertices}")
        self.n_vertices = int(n_vertices)

        canonical: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop on vertex {u} is not allowed")
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n_vertices})")
            key = (u, v) if u < v else (v, u)
            if key in canonical:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            canonical.add(key)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canonical))

        adjacency: list[set[int]] = [set() for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._adjacency = tuple(frozenset(s) for s in adjacency)
        # Bitmask of N(i) per vertex, used by the exhaustive oracles.
        self._neighbor_masks = tuple(
            sum(1 << j for j in nbrs) for nbrs in self._adjacency
        )

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        """Open neighborhood N(v), excluding v itself."""
        self._check_vertex(v)
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._adjacency)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n_vertices):
            raise ValueError(f"vertex {v} out of range [0, {self.n_vertices})")

    def _check_subset(self, d: Iterable[int]) -> frozenset[int]:
        d = frozenset(d)
        for v in d:
            self._check_vertex(v)
        return d

    def __repr__(self) -> str:
        return f"Graph(n_vertices={self.n_vertices}, edges={list(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n_vertices == other.n_vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.edges))


@dataclass(frozen=True)
class DegreePartition:
    """Vertex indices split by degree: exactly 0, 1, 2, or at least 3."""

    v0: tuple[int, ...]
    v1: tuple[int, ...]
    v2: tuple[int, ...]
    v_ge3: tuple[int, ...]


def neighbors(g: Graph, v: int) -> frozenset[int]:
    """Open neighborhood N(v) of vertex v (excludes v)."""
    return g.neighbors(v)


def is_total_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    """True iff every vertex of the graph has at least one neighbor in d.

    Members of d must themselves be adjacent to d; the check therefore uses
    the open neighborhood for all vertices.
    """
    dset = g._check_subset(d)
    return all(g._adjacency[i] & dset for i in range(g.n_vertices))


def is_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    """True iff every vertex outside d has at least one neighbor in d."""
    dset = g._check_subset(d)
    return all(i in dset or g._adjacency[i] & dset for i in range(g.n_vertices))


_BRUTEFORCE_LIMIT = 24


def _min_sets_bruteforce(g: Graph, valid_mask) -> tuple[int, list[frozenset[int]]]:
    """Smallest cardinality passing valid_mask, plus all sets of that size.

    Subsets are enumerated as bitmasks in increasing popcount order with an
    early exit at the first cardinality containing a valid set.
    """
    n = g.n_vertices
    if n > _BRUTEFORCE_LIMIT:
        raise ValueError(f"exhaustive search limited to {_BRUTEFORCE_LIMIT} vertices, got {n}")
    for k in range(n + 1):
        hits = [
            frozenset(combo)
            for combo in combinations(range(n), k)
            if valid_mask(sum(1 << v for v in combo))
        ]
        if hits:
            return k, hits
    raise InfeasibleGraphError("no valid set exists")


def minimum_tds_bruteforce(g: Graph) -> tuple[int, list[frozenset[int]]]:
    """Exact minimum total dominating set size and all optimal sets.

    Exhaustive over all 2^n subsets (n <= 24). Raises InfeasibleGraphError
    if the graph has an isolated vertex, since no TDS exists then.
    """
    if any(deg == 0 for deg in g.degrees()):
        raise InfeasibleGraphError("no TDS exists: graph has an isolated vertex")
    masks = g._neighbor_masks

    def valid(dmask: int) -> bool:
        return all(masks[i] & dmask for i in range(g.n_vertices))

    return _min_sets_bruteforce(g, valid)


def minimum_ds_bruteforce(g: Graph) -> tuple[int, list[frozenset[int]]]:
    """Exact minimum dominating set size and all optimal sets (n <= 24)."""
    masks = g._neighbor_masks

    def valid(dmask: int) -> bool:
        return all((dmask >> i) & 1 or masks[i] & dmask for i in range(g.n_vertices))

    return _min_sets_bruteforce(g, valid)


def degree_partition(g: Graph) -> DegreePartition:
    """Partition the vertex set by degree into V0, V1, V2, and V>=3."""
    buckets: tuple[list[int], ...] = ([], [], [], [])
    for v, deg in enumerate(g.degrees()):
        buckets[min(deg, 3)].append(v)
    return DegreePartition(*(tuple(b) for b in buckets))


# 6-node, 7-edge benchmark instance. Its minimum dominating set has size 2,
# but no size-2 set is total; the minimum TDS has size 3 with four optima.
_PAPER6_EDGES = ((0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (2, 4))

_BUILTIN_GRAPHS = {
    "paper6": lambda: Graph(6, _PAPER6_EDGES),
}


def builtin_instance(name: str = "paper6") -> Graph:
    """Return a bundled benchmark graph by name (currently only "paper6")."""
    try:
        return _BUILTIN_GRAPHS[name]()
    except KeyError:
        raise ValueError(
            f"unknown builtin graph {name!r}; available: {sorted(_BUILTIN_GRAPHS)}"
        ) from None


def parse_graph(text: str) -> Graph:
    """Parse the plain-text graph format.

    First data line is "n m"; the next m lines are "u v" with 0-based vertex
    indices. Blank lines and lines starting with '#' are ignored.
    """
    lines = [
        stripped
        for line in text.splitlines()
        if (stripped := line.strip()) and not stripped.startswith("#")
    ]
    if not lines:
        raise ValueError("graph file contains no data lines")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"expected header 'n m', got {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header declares {m} edges but {len(lines) - 1} edge lines found")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected edge line 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def read_graph_file(path) -> Graph:
    """Read a graph from a file in the plain-text format of parse_graph."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def load_graph(source: str) -> Graph:
    """Resolve a graph source: either "builtin:<name>" or a file path."""
    if source.startswith("builtin:"):
        return builtin_instance(source.split(":", 1)[1])
    return read_graph_file(source)
