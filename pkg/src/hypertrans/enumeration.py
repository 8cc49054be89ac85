"""Canonical forms and exhaustive generation of unicyclic uniform hypergraphs.

Canonical labelling uses individualisation-refinement on the vertex/edge
incidence structure.  Colour refinement produces an ordered partition whose
cell order depends only on the isomorphism type.  The search individualises
vertices of the first non-singleton cell, and the key is the minimal sorted
edge list over all discrete leaves.  Branches on twin vertices (identical
incident edge sets) are skipped because the twin transposition is an
automorphism.
"""

from __future__ import annotations

import math
import os
import random
import struct
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .core import Hypergraph, StructureClass, classify, relabel, transmission
from .errors import BadParam, TooLarge
from .families import attach_pendant_path, loose_cycle, single_vertex

DEFAULT_BUDGET = 10_000_000


def budget_from_env() -> int:
    raw = os.environ.get("HYPERTRANS_BUDGET", "")
    try:
        return int(raw) if raw.strip() else DEFAULT_BUDGET
    except ValueError:
        raise BadParam(f"HYPERTRANS_BUDGET must be an integer, got {raw!r}") from None


def _refine(G: Hypergraph, colors: list[int]) -> list[int]:
    inc, edges = G.incidence, G.edges
    ncolors = len(set(colors))
    while True:
        esig = [tuple(sorted(colors[v] for v in e)) for e in edges]
        vsig = [(colors[v], tuple(sorted(esig[i] for i in inc[v]))) for v in range(G.n)]
        rank = {s: i for i, s in enumerate(sorted(set(vsig)))}
        colors = [rank[s] for s in vsig]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _canonical_edges(G: Hypergraph) -> tuple[tuple[int, ...], ...]:
    best: tuple | None = None
    inc = G.incidence

    def search(colors: list[int]) -> None:
        nonlocal best
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            enc = tuple(sorted(tuple(sorted(colors[x] for x in e)) for e in G.edges))
            if best is None or enc < best:
                best = enc
            return
        seen_twins = set()
        for v in cells[target]:
            if inc[v] in seen_twins:
                continue
            seen_twins.add(inc[v])
            split = [2 * c + (c == target and u != v) for u, c in enumerate(colors)]
            search(_refine(G, split))

    search(_refine(G, [0] * G.n))
    return best


@lru_cache(maxsize=1 << 16)
def canonical_form(G: Hypergraph) -> Hypergraph:
    """The canonical relabelled copy of ``G``; equal for isomorphic inputs."""
    return Hypergraph(G.k, G.n, _canonical_edges(G))


def canonical_key(G: Hypergraph) -> bytes:
    C = canonical_form(G)
    flat = [x for e in C.edges for x in e]
    return struct.pack(f">3H{len(flat)}H", C.k, C.n, C.m, *flat)


def are_isomorphic(G: Hypergraph, H: Hypergraph) -> bool:
    if (G.k, G.n, G.m) != (H.k, H.n, H.m):
        return False
    if sorted(len(x) for x in G.incidence) != sorted(len(x) for x in H.incidence):
        return False
    return canonical_key(G) == canonical_key(H)


@dataclass(frozen=True)
class Entry:
    key: bytes
    sigma: int
    graph: Hypergraph

    def to_dict(self) -> dict:
        return {
            "key": self.key.hex(),
            "sigma": self.sigma,
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges],
        }


@dataclass
class EnumerationResult:
    k: int
    m: int
    method: str
    entries: list[Entry] = field(default_factory=list)
    generated: int = 0

    @property
    def sigmas(self) -> list[int]:
        return [e.sigma for e in self.entries]

    @property
    def keys(self) -> set[bytes]:
        return {e.key for e in self.entries}

    def argmin(self) -> list[Entry]:
        lo = min(self.sigmas)
        return [e for e in self.entries if e.sigma == lo]

    def argmax(self) -> list[Entry]:
        hi = max(self.sigmas)
        return [e for e in self.entries if e.sigma == hi]

    def to_dict(self) -> dict:
        def cert(group: list[Entry]) -> dict:
            return {"sigma": group[0].sigma, "keys": [e.key.hex() for e in group]}

        return {
            "k": self.k,
            "m": self.m,
            "method": self.method,
            "count": len(self.entries),
            "entries": [e.to_dict() for e in self.entries],
            "argmin": cert(self.argmin()),
            "argmax": cert(self.argmax()),
        }


def _check_params(k: int, m: int) -> None:
    if k < 2 or m < 2 or (k == 2 and m < 3):
        raise BadParam(f"unicyclic hypergraphs need k >= 2, m >= 2 (m >= 3 when k = 2); got k={k}, m={m}")


def _finish(k: int, m: int, method: str, classes: dict[bytes, Hypergraph], generated: int) -> EnumerationResult:
    entries = [Entry(key, transmission(G), G) for key, G in classes.items()]
    entries.sort(key=lambda e: (e.sigma, e.key))
    return EnumerationResult(k, m, method, entries, generated)


def enumerate_unicyclic(k: int, m: int, budget: int | None = None) -> EnumerationResult:
    """All isomorphism classes of ``k``-uniform unicyclic hypergraphs of size ``m``.

    Each girth ``g`` starts from the loose cycle, and pendant edges are grown
    one at a time at every vertex, since any unicyclic hypergraph sheds a
    pendant edge until only its cycle remains.  Classes are deduplicated by
    canonical form after every growth step.
    """
    _check_params(k, m)
    budget = budget_from_env() if budget is None else budget
    generated = 0
    classes: dict[bytes, Hypergraph] = {}
    for g in range(2 if k >= 3 else 3, m + 1):
        level = {canonical_key(loose_cycle(k, g)): canonical_form(loose_cycle(k, g))}
        for _ in range(m - g):
            grown: dict[bytes, Hypergraph] = {}
            for G in level.values():
                generated += G.n
                if generated > budget:
                    raise TooLarge(f"enumeration of (k={k}, m={m}) exceeds budget {budget}")
                for u in range(G.n):
                    H = attach_pendant_path(G, u, 1)
                    grown.setdefault(canonical_key(H), canonical_form(H))
            level = grown
        classes.update(level)
    return _finish(k, m, "constructive", classes, generated)


def _labelled_unicyclic(k: int, m: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    n = m * (k - 1)
    ksets = list(combinations(range(n), k))
    masks = [sum(1 << v for v in s) for s in ksets]
    full = (1 << n) - 1
    for combo in combinations(range(len(ksets)), m):
        chosen = [masks[i] for i in combo]
        union = 0
        for x in chosen:
            union |= x
        if union != full:
            continue
        reach, rest = chosen[0], chosen[1:]
        grew = True
        while rest and grew:
            grew = False
            left = []
            for x in rest:
                if x & reach:
                    reach |= x
                    grew = True
                else:
                    left.append(x)
            rest = left
        if not rest:
            yield tuple(ksets[i] for i in combo)


def bruteforce_size(k: int, m: int) -> int:
    return math.comb(math.comb(m * (k - 1), k), m)


def enumerate_unicyclic_bruteforce(k: int, m: int, budget: int | None = None) -> EnumerationResult:
    """Labelled oracle: every connected spanning choice of ``m`` ``k``-sets on ``m(k-1)`` vertices."""
    _check_params(k, m)
    budget = budget_from_env() if budget is None else budget
    size = bruteforce_size(k, m)
    if size > budget:
        raise TooLarge(f"brute force over {size} candidates exceeds budget {budget}")
    n = m * (k - 1)
    classes: dict[bytes, Hypergraph] = {}
    for edges in _labelled_unicyclic(k, m):
        G = Hypergraph(k, n, edges)
        classes.setdefault(canonical_key(G), canonical_form(G))
    return _finish(k, m, "bruteforce", classes, size)


def _as_rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_hypertree(k: int, m: int, seed: int | random.Random) -> Hypergraph:
    """Grow ``m`` pendant edges at uniformly chosen existing vertices."""
    if k < 2 or m < 0:
        raise BadParam(f"random_hypertree needs k >= 2, m >= 0; got k={k}, m={m}")
    rng = _as_rng(seed)
    G = single_vertex(k)
    for _ in range(m):
        G = attach_pendant_path(G, rng.randrange(G.n), 1)
    return G


def random_unicyclic(k: int, m: int, seed: int | random.Random, girth: int | None = None) -> Hypergraph:
    """Random walk down the constructive generator's decision tree.

    A girth is picked uniformly (unless given), then ``m - g`` pendant edges
    are attached at uniformly chosen vertices.  The distribution is *not*
    uniform over isomorphism classes.
    """
    _check_params(k, m)
    rng = _as_rng(seed)
    lo = 2 if k >= 3 else 3
    g = rng.randint(lo, m) if girth is None else girth
    if not lo <= g <= m:
        raise BadParam(f"girth {g} not in [{lo}, {m}]")
    G = loose_cycle(k, g)
    for _ in range(m - g):
        G = attach_pendant_path(G, rng.randrange(G.n), 1)
    assert classify(G) is StructureClass.UNICYCLIC
    return G


def shuffle_labels(G: Hypergraph, seed: int | random.Random) -> Hypergraph:
    rng = _as_rng(seed)
    perm = list(range(G.n))
    rng.shuffle(perm)
    return relabel(G, perm)
