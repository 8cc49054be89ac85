"""Edge moving, unicyclic decomposition and the specific moves behind the lemmas.

Positions in a :class:`UnicyclicDecomposition` are 0-based: ``cycle_vertices[i]``
is the cycle vertex usually written ``v_{i+1}``, and cycle edge ``j`` spans
positions ``j*(k-1) .. j*(k-1)+k-1`` (wrapping to position 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Hypergraph, StructureClass, classify, components, delete_edges, transmission
from .errors import (
    BadParam,
    CollisionWithExistingEdge,
    GirthNotTwo,
    GirthTooSmall,
    NothingToMove,
    NotUnicyclic,
    SourceNotInEdge,
    TargetInEdge,
)
from .families import Rooted, graft_at_pendant_edge, tilde_c2


@dataclass(frozen=True)
class UnicyclicDecomposition:
    k: int
    girth: int
    cycle_edges: tuple[int, ...]
    cycle_vertices: tuple[int, ...]
    attachments: tuple[tuple[int, ...], ...]

    def attachment_sizes(self) -> list[int]:
        return [len(a) for a in self.attachments]

    def edge_positions(self, j: int) -> list[int]:
        """Cycle positions covered by cycle edge ``j``."""
        size = len(self.cycle_vertices)
        return [(j * (self.k - 1) + i) % size for i in range(self.k)]


@dataclass(frozen=True)
class MoveSpec:
    edges: tuple[int, ...]
    source: int
    target: int


def _cycle_core(G: Hypergraph) -> tuple[set[int], set[int]]:
    """Strip leaves of the incidence graph; what survives is the cycle."""
    vdeg = [len(x) for x in G.incidence]
    edeg = [G.k] * G.m
    alive_v, alive_e = set(range(G.n)), set(range(G.m))
    stack = [("v", v) for v in range(G.n) if vdeg[v] <= 1]
    stack += [("e", e) for e in range(G.m) if edeg[e] <= 1]
    while stack:
        kind, x = stack.pop()
        if kind == "v":
            if x not in alive_v:
                continue
            alive_v.discard(x)
            for e in G.incidence[x]:
                if e in alive_e:
                    edeg[e] -= 1
                    if edeg[e] <= 1:
                        stack.append(("e", e))
        else:
            if x not in alive_e:
                continue
            alive_e.discard(x)
            for v in G.edges[x]:
                if v in alive_v:
                    vdeg[v] -= 1
                    if vdeg[v] <= 1:
                        stack.append(("v", v))
    return alive_v, alive_e


def decompose(G: Hypergraph) -> UnicyclicDecomposition:
    """Locate the unique cycle and the hypertrees hanging from its vertices.

    The walk starts at the smallest junction vertex (a vertex lying in two
    cycle edges) and leaves through the cycle edge with the smaller id.
    """
    if classify(G) is not StructureClass.UNICYCLIC:
        raise NotUnicyclic("hypergraph is not unicyclic")
    junctions, cyc = _cycle_core(G)
    start = min(junctions)
    edge = min(e for e in G.incidence[start] if e in cyc)
    order_e: list[int] = []
    order_v: list[int] = []
    here = start
    while True:
        members = G.edges[edge]
        nxt = next(v for v in members if v in junctions and v != here)
        order_e.append(edge)
        order_v.append(here)
        order_v.extend(v for v in members if v != here and v != nxt)
        here = nxt
        if here == start:
            break
        edge = next(e for e in G.incidence[here] if e in cyc and e != edge)
    comps = components(delete_edges(G, order_e))
    block = {v: tuple(c) for c in comps for v in c}
    return UnicyclicDecomposition(
        G.k, len(order_e), tuple(order_e), tuple(order_v), tuple(block[v] for v in order_v)
    )


def move_edges(G: Hypergraph, spec: MoveSpec) -> Hypergraph:
    """Replace each listed edge ``e`` by ``(e - {source}) | {target}``."""
    u, v = spec.source, spec.target
    moved = set(spec.edges)
    if len(moved) != len(spec.edges) or any(not 0 <= i < G.m for i in moved):
        raise BadParam(f"bad edge id list {list(spec.edges)}")
    kept = [e for i, e in enumerate(G.edges) if i not in moved]
    new = []
    for i in spec.edges:
        e = G.edges[i]
        if u not in e:
            raise SourceNotInEdge(f"vertex {u} not in edge {list(e)}")
        if v in e:
            raise TargetInEdge(f"vertex {v} already in edge {list(e)}")
        new.append(tuple(sorted((set(e) - {u}) | {v})))
    if len(set(new)) != len(new) or set(new) & set(kept):
        raise CollisionWithExistingEdge("moving would create a duplicate edge")
    return Hypergraph(G.k, G.n, tuple(kept + new))


def lemma4_candidates(G: Hypergraph) -> tuple[Hypergraph, Hypergraph]:
    """Fold a cycle of girth >= 3 in two ways; one of them raises transmission.

    The first candidate moves the first cycle edge from its far junction to the
    junction where the last cycle edge starts.  The second moves the last
    cycle edge from that junction to the first edge's far junction.  Either way
    the folded edge shares two vertices with a neighbour, so both results have
    girth 2 and the rest of the old cycle becomes a pendant chain.
    """
    if G.k < 3:
        raise BadParam("needs k >= 3")
    dec = decompose(G)
    g, k = dec.girth, G.k
    if g < 3:
        raise GirthTooSmall(f"needs girth >= 3, got {g}")
    v_k = dec.cycle_vertices[k - 1]
    v_last = dec.cycle_vertices[(g - 1) * (k - 1)]
    first, last = dec.cycle_edges[0], dec.cycle_edges[-1]
    return (
        move_edges(G, MoveSpec((first,), v_k, v_last)),
        move_edges(G, MoveSpec((last,), v_last, v_k)),
    )


@dataclass(frozen=True)
class Lemma5Sizes:
    """Block sizes of a girth-2 decomposition: moved part, far side, near side."""

    moved: int
    far: int
    near: int

    @property
    def hypothesis(self) -> bool:
        return self.far >= self.near

    @property
    def predicted_delta(self) -> int:
        return self.moved * (self.far - self.near + 1)


def lemma5_sizes(dec: UnicyclicDecomposition) -> Lemma5Sizes:
    k = dec.k
    sizes = dec.attachment_sizes()
    return Lemma5Sizes(moved=sizes[k - 1] - 1, far=sum(sizes[k:2 * k - 2]), near=sizes[1])


def lemma5_move(G: Hypergraph) -> Hypergraph:
    """Re-root every hanging edge at the second shared vertex onto ``v_2``."""
    if G.k < 3:
        raise BadParam("needs k >= 3")
    dec = decompose(G)
    if dec.girth != 2:
        raise GirthNotTwo(f"needs girth 2, got {dec.girth}")
    k = G.k
    v_k, v_2 = dec.cycle_vertices[k - 1], dec.cycle_vertices[1]
    hanging = tuple(e for e in G.incidence[v_k] if e not in dec.cycle_edges)
    if not hanging:
        raise NothingToMove(f"no edges hang at vertex {v_k}")
    return move_edges(G, MoveSpec(hanging, v_k, v_2))


def lemma3_pair(
    G: Hypergraph, e: int, s: int, H: Sequence[Rooted], w_k: int | None = None
) -> tuple[Hypergraph, Hypergraph]:
    """``(G_{e,0}, G_{e,s})`` for a grafting that moves a nontrivial piece."""
    if not 1 <= s <= G.k - 1:
        raise BadParam(f"s must be in [1, {G.k - 1}], got {s}")
    if not any(Hi.m >= 1 for Hi, _ in H[:s]):
        raise BadParam("some H_j with j <= s must have an edge")
    return (
        graft_at_pendant_edge(G, e, 0, H, w_k),
        graft_at_pendant_edge(G, e, s, H, w_k),
    )


def lemma3_bound(G: Hypergraph, s: int, H: Iterable[Rooted]) -> int:
    """Lower bound on the transmission drop of :func:`lemma3_pair`."""
    return sum((Hi.n - 1) * (G.n - G.k) for Hi, _ in list(H)[:s])


def tilde_c2_tail(k: int, p: int, q: int) -> tuple[Hypergraph, list[int], int, int]:
    """``tilde_c2(k, p, q)`` with its last q-path edge located.

    Returns the hypergraph, the free vertices of the last edge ``f_q``, the
    vertex ``f_q`` hangs from, and the far end of the p-path.
    """
    if q < 1:
        raise BadParam("needs q >= 1")
    G = tilde_c2(k, p, q)
    tail = list(range(G.n - k + 1, G.n))
    anchor = k if q == 1 else G.n - k
    far_end = 2 if p == 0 else 2 * k - 3 + p * (k - 1)
    return G, tail, anchor, far_end


def lemma6_move(k: int, p: int, q: int) -> tuple[Hypergraph, Hypergraph]:
    """``tilde_c2(k, p, q)`` and the result of moving its last q-edge to the p-end."""
    G, tail, anchor, far_end = tilde_c2_tail(k, p, q)
    f_q = G.edges.index(tuple(sorted([anchor] + tail)))
    return G, move_edges(G, MoveSpec((f_q,), anchor, far_end))


def lemma6_boundary_formula(k: int, p: int, q: int) -> int:
    """Closed form for the distance sum between the tail of ``f_q`` and the rest."""
    twice = (
        (q + 1) * q
        + (p + 2 * q + 5) * p
        + (k - 2) * (p * p + q * q + 2 * p * q + 5 * p + q - 2)
        + 2 * ((2 * k - 3) * (q + 1) + k - 2)
    )
    return (k - 1) * twice // 2


def lemma6_moved_boundary_formula(k: int, p: int, q: int) -> int:
    """The same boundary sum after the move."""
    twice = (
        (p + 2) * (p + 1)
        + (q + 2 * p + 6) * (q - 1)
        + (k - 2) * (p * p + q * q + 2 * p * q + 5 * q + p - 6)
        + 2 * ((2 * k - 3) * (p + 2) + k - 2)
    )
    return (k - 1) * twice // 2


def transmission_delta(before: Hypergraph, after: Hypergraph) -> int:
    return transmission(after) - transmission(before)
