"""Independent reference computations used to check the library.

Nothing here calls the library's BFS, refinement or enumeration code.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

import numpy as np

from hypertrans.core import Hypergraph


def floyd_warshall(G: Hypergraph) -> np.ndarray:
    """Vertex distances from Floyd-Warshall on the vertex/edge incidence graph, halved."""
    size = G.n + G.m
    d = np.full((size, size), np.inf)
    np.fill_diagonal(d, 0)
    for i, e in enumerate(G.edges):
        for v in e:
            d[v, G.n + i] = d[G.n + i, v] = 1
    for w in range(size):
        d = np.minimum(d, d[:, w, None] + d[None, w, :])
    return d[: G.n, : G.n] / 2


def pair_sum(G: Hypergraph) -> int:
    d = floyd_warshall(G)
    return int(d[np.triu_indices(G.n, 1)].sum())


def pair_histogram(G: Hypergraph) -> dict[int, int]:
    d = floyd_warshall(G)
    vals, counts = np.unique(d[np.triu_indices(G.n, 1)], return_counts=True)
    return {int(v): int(c) for v, c in zip(vals, counts)}


def union_find_components(G: Hypergraph) -> list[list[int]]:
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in G.edges:
        for v in e[1:]:
            parent[find(v)] = find(e[0])
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def count_cycles(G: Hypergraph, cap: int = 2) -> int:
    """Number of distinct cycles (vertex/edge alternating), counted up to ``cap``."""
    adj: dict[int, list[int]] = {x: [] for x in range(G.n + G.m)}
    for i, e in enumerate(G.edges):
        for v in e:
            adj[v].append(G.n + i)
            adj[G.n + i].append(v)
    found = 0
    for s in range(G.n + G.m):
        stack = [(s, [s])]
        while stack:
            node, path = stack.pop()
            for nxt in adj[node]:
                if nxt == s and len(path) >= 4:
                    found += 1
                elif nxt > s and nxt not in path:
                    stack.append((nxt, path + [nxt]))
        if found // 2 >= cap:
            return cap
    return found // 2


def isomorphic_bruteforce(G: Hypergraph, H: Hypergraph) -> bool:
    """Try every vertex permutation (only for tiny n)."""
    if (G.k, G.n, G.m) != (H.k, H.n, H.m):
        return False
    target = set(H.edges)
    for perm in permutations(range(G.n)):
        if all(tuple(sorted(perm[x] for x in e)) in target for e in G.edges):
            return True
    return False


def random_connected(rng: random.Random, k: int, n_max: int = 30) -> Hypergraph:
    """A random connected k-uniform hypergraph with k <= n <= n_max vertices."""
    n = rng.randint(k, n_max)
    edges = {tuple(range(k))}
    covered = k
    while covered < n:
        fresh = rng.randint(1, min(k - 1, n - covered))
        old = rng.sample(range(covered), k - fresh)
        edges.add(tuple(sorted(old + list(range(covered, covered + fresh)))))
        covered += fresh
    for _ in range(rng.randint(0, n // 2)):
        edges.add(tuple(sorted(rng.sample(range(n), k))))
    return Hypergraph(k, n, tuple(edges))


def all_edge_sets(k: int, n: int, m: int):
    for combo in combinations(combinations(range(n), k), m):
        yield Hypergraph(k, n, combo)
