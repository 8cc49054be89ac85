"""Uniform hypergraphs, BFS distances and transmission-type sums.

Vertices are the integers ``0..n-1``.  Each edge is stored as a sorted tuple of
``k`` distinct vertices and the edge list itself is kept sorted, so two
``Hypergraph`` values compare equal exactly when they have the same labelled
structure.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    BadParam,
    BadSubset,
    Disconnected,
    DuplicateEdge,
    EdgeWrongSize,
    Overlap,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


class StructureClass(str, enum.Enum):
    HYPERTREE = "hypertree"
    UNICYCLIC = "unicyclic"
    OTHER_CONNECTED = "other-connected"
    DISCONNECTED = "disconnected"


@dataclass(frozen=True)
class Hypergraph:
    """A ``k``-uniform hypergraph on vertices ``0..n-1`` in normal form."""

    k: int
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        k, n = self.k, self.n
        if k < 2:
            raise BadParam(f"uniformity must be >= 2, got {k}")
        if n < 1:
            raise BadParam(f"vertex count must be >= 1, got {n}")
        normal = []
        for raw in self.edges:
            edge = tuple(sorted(set(raw)))
            if len(edge) != k or len(raw) != k:
                raise EdgeWrongSize(f"edge {list(raw)} does not have {k} distinct vertices")
            if edge[0] < 0 or edge[-1] >= n:
                raise VertexOutOfRange(f"edge {list(raw)} has a vertex outside [0, {n})")
            normal.append(edge)
        normal.sort()
        for a, b in zip(normal, normal[1:]):
            if a == b:
                raise DuplicateEdge(f"edge {list(a)} appears twice")
        object.__setattr__(self, "edges", tuple(normal))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, edge in enumerate(self.edges):
            for v in edge:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def __repr__(self) -> str:
        return f"Hypergraph(k={self.k}, n={self.n}, edges={[list(e) for e in self.edges]})"


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: tuple[tuple[int, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.d[u][v]

    def diameter(self) -> int:
        return max((max(row) for row in self.d), default=0)

    def histogram(self) -> dict[int, int]:
        """Number of unordered pairs at each positive distance."""
        hist: dict[int, int] = {}
        for u in range(self.n):
            for v in range(u + 1, self.n):
                hist[self.d[u][v]] = hist.get(self.d[u][v], 0) + 1
        return dict(sorted(hist.items()))


def build(k: int, n: int, raw_edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Validate and normalise a hypergraph given as lists of vertex ids."""
    return Hypergraph(k, n, tuple(tuple(e) for e in raw_edges))


def _check_vertex(G: Hypergraph, v: int) -> None:
    if not 0 <= v < G.n:
        raise VertexOutOfRange(f"vertex {v} not in [0, {G.n})")


def _bfs(G: Hypergraph, source: int) -> list[int]:
    # -1 marks unreachable vertices
    dist = [-1] * G.n
    dist[source] = 0
    seen_edge = [False] * G.m
    queue = deque([source])
    inc, edges = G.incidence, G.edges
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for e in inc[u]:
            if seen_edge[e]:
                continue
            seen_edge[e] = True
            for w in edges[e]:
                if dist[w] < 0:
                    dist[w] = du
                    queue.append(w)
    return dist


def is_connected(G: Hypergraph) -> bool:
    return min(_bfs(G, 0)) >= 0


def components(G: Hypergraph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    label = [-1] * G.n
    comps: list[list[int]] = []
    for s in range(G.n):
        if label[s] >= 0:
            continue
        dist = _bfs(G, s)
        comp = [v for v in range(G.n) if dist[v] >= 0]
        for v in comp:
            label[v] = len(comps)
        comps.append(comp)
    return comps


def classify(G: Hypergraph) -> StructureClass:
    if not is_connected(G):
        return StructureClass.DISCONNECTED
    span = G.m * (G.k - 1)
    if G.n == span + 1:
        return StructureClass.HYPERTREE
    if G.n == span and (G.k > 2 or G.m >= 3):
        return StructureClass.UNICYCLIC
    return StructureClass.OTHER_CONNECTED


def distances_from(G: Hypergraph, u: int) -> list[int]:
    _check_vertex(G, u)
    dist = _bfs(G, u)
    if min(dist) < 0:
        raise Disconnected(f"vertex {dist.index(-1)} unreachable from {u}")
    return dist


def all_pairs(G: Hypergraph) -> DistanceMatrix:
    return DistanceMatrix(G.n, tuple(tuple(distances_from(G, u)) for u in range(G.n)))


def transmission(G: Hypergraph) -> int:
    """Sum of distances over all unordered pairs of distinct vertices."""
    return sum(sum(distances_from(G, u)) for u in range(G.n)) // 2


def sigma_vertex(G: Hypergraph, u: int) -> int:
    return sum(distances_from(G, u))


def _as_subset(G: Hypergraph, A: Iterable[int]) -> list[int]:
    A = sorted(set(A))
    if A and (A[0] < 0 or A[-1] >= G.n):
        raise BadSubset(f"subset {A} not contained in [0, {G.n})")
    return A


def sigma_subset(G: Hypergraph, A: Iterable[int]) -> int:
    A = _as_subset(G, A)
    if not is_connected(G):
        raise Disconnected("transmission is undefined for a disconnected hypergraph")
    total = 0
    for i, u in enumerate(A):
        dist = distances_from(G, u)
        total += sum(dist[v] for v in A[i + 1:])
    return total


def sigma_between(G: Hypergraph, A: Iterable[int], B: Iterable[int]) -> int:
    A, B = _as_subset(G, A), _as_subset(G, B)
    if set(A) & set(B):
        raise Overlap("vertex sets must be disjoint")
    if not is_connected(G):
        raise Disconnected("transmission is undefined for a disconnected hypergraph")
    total = 0
    for u in A:
        dist = distances_from(G, u)
        total += sum(dist[v] for v in B)
    return total


def average_distance(G: Hypergraph) -> Fraction:
    if G.n < 2:
        raise BadParam("average distance needs at least two vertices")
    return Fraction(2 * transmission(G), G.n * (G.n - 1))


def degree(G: Hypergraph, v: int) -> int:
    _check_vertex(G, v)
    return len(G.incidence[v])


def incident_edges(G: Hypergraph, v: int) -> list[int]:
    _check_vertex(G, v)
    return list(G.incidence[v])


def delete_edge(G: Hypergraph, e: int) -> Hypergraph:
    if not 0 <= e < G.m:
        raise BadParam(f"edge id {e} not in [0, {G.m})")
    return Hypergraph(G.k, G.n, G.edges[:e] + G.edges[e + 1:])


def delete_edges(G: Hypergraph, ids: Iterable[int]) -> Hypergraph:
    drop = set(ids)
    return Hypergraph(G.k, G.n, tuple(e for i, e in enumerate(G.edges) if i not in drop))


def delete_vertex(G: Hypergraph, v: int) -> Hypergraph:
    """Remove ``v`` and its edges; later vertices shift down by one."""
    _check_vertex(G, v)
    if G.n == 1:
        raise BadParam("cannot delete the only vertex")
    kept = [e for e in G.edges if v not in e]
    return Hypergraph(G.k, G.n - 1, tuple(tuple(x - (x > v) for x in e) for e in kept))


def relabel(G: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Apply the vertex map ``v -> perm[v]`` (a permutation of ``0..n-1``)."""
    if sorted(perm) != list(range(G.n)):
        raise BadParam("relabeling must be a permutation of the vertex set")
    return Hypergraph(G.k, G.n, tuple(tuple(perm[x] for x in e) for e in G.edges))


def pair_count_at(G: Hypergraph, distance: int) -> int:
    """Number of unordered vertex pairs at exactly ``distance``."""
    return all_pairs(G).histogram().get(distance, 0)


def adjacent_pairs(G: Hypergraph) -> int:
    """Pairs of distinct vertices sharing at least one edge."""
    return len({p for e in G.edges for p in combinations(e, 2)})
