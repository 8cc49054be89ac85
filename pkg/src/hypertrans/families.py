"""Constructors for the named hypergraph families and attachment operations.

Labelling is deterministic.  Cycle vertices come first, in cyclic order, and
every attachment appends fresh vertex ids in construction order.  A pendant
path built by :func:`attach_pendant_path` continues from the largest new vertex
of its previous edge, so the last ``k-1`` ids of the result are always the
free vertices of the final path edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Hypergraph, degree
from .errors import BadParam, NotCoEdge, NotPendantEdge, VertexOutOfRange

Rooted = tuple[Hypergraph, int]

FAMILIES = (
    "loose-path",
    "loose-cycle",
    "hyperstar",
    "cg-star",
    "tilde-c2",
    "lollipop",
    "triangle-star",
)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParam(msg)


def single_vertex(k: int) -> Hypergraph:
    return Hypergraph(k, 1, ())


def loose_path(k: int, m: int) -> Hypergraph:
    _need(k >= 2 and m >= 1, f"loose_path needs k >= 2 and m >= 1, got k={k}, m={m}")
    step = k - 1
    edges = tuple(tuple(range(i * step, i * step + k)) for i in range(m))
    return Hypergraph(k, m * step + 1, edges)


def loose_cycle(k: int, g: int) -> Hypergraph:
    """The loose cycle with ``g`` edges; consecutive edges share one vertex.

    For ``g == 2`` the two edges share exactly two vertices.
    """
    _need(
        (k >= 3 and g >= 2) or (k == 2 and g >= 3),
        f"loose_cycle needs k >= 3, g >= 2 or k = 2, g >= 3; got k={k}, g={g}",
    )
    step = k - 1
    n = g * step
    edges = tuple(tuple((i * step + j) % n for j in range(k)) for i in range(g))
    return Hypergraph(k, n, edges)


def hyperstar(k: int, t: int) -> Hypergraph:
    """Hyperstar with ``t`` edges centred at vertex 0 (``t = 0`` is one vertex)."""
    _need(k >= 2 and t >= 0, f"hyperstar needs k >= 2, t >= 0; got k={k}, t={t}")
    step = k - 1
    edges = tuple((0,) + tuple(range(1 + j * step, 1 + (j + 1) * step)) for j in range(t))
    return Hypergraph(k, t * step + 1, edges)


def attach_pendant_path(G: Hypergraph, u: int, p: int) -> Hypergraph:
    _need(p >= 0, f"path length must be >= 0, got {p}")
    if not 0 <= u < G.n:
        raise VertexOutOfRange(f"vertex {u} not in [0, {G.n})")
    edges = list(G.edges)
    n, anchor = G.n, u
    for _ in range(p):
        fresh = tuple(range(n, n + G.k - 1))
        edges.append((anchor,) + fresh)
        anchor = fresh[-1]
        n += G.k - 1
    return Hypergraph(G.k, n, tuple(edges))


def g_u(G: Hypergraph, u: int, p: int, q: int) -> Hypergraph:
    """Two pendant paths of lengths ``p`` and ``q`` hung at the same vertex."""
    _need(G.m >= 1, "base hypergraph needs at least one edge")
    _need(p >= 1 and q >= 0, f"need p >= 1 and q >= 0, got p={p}, q={q}")
    return attach_pendant_path(attach_pendant_path(G, u, p), u, q)


def g_uv(G: Hypergraph, u: int, v: int, p: int, q: int) -> Hypergraph:
    """Pendant paths of lengths ``p`` at ``u`` and ``q`` at ``v`` (co-edge vertices)."""
    _need(p >= 0 and q >= 0, f"path lengths must be >= 0, got p={p}, q={q}")
    if u == v or not any(u in e and v in e for e in G.edges):
        raise NotCoEdge(f"vertices {u} and {v} are not distinct members of a common edge")
    return attach_pendant_path(attach_pendant_path(G, u, p), v, q)


def pendant_attachment(G: Hypergraph, e: int) -> int:
    """The unique vertex of edge ``e`` with degree >= 2, if ``e`` is pendant."""
    heavy = [v for v in G.edges[e] if degree(G, v) >= 2]
    if len(heavy) != 1:
        raise NotPendantEdge(f"edge {list(G.edges[e])} is not a pendant edge")
    return heavy[0]


def graft_at_pendant_edge(
    G: Hypergraph,
    e: int,
    s: int,
    H: Sequence[Rooted],
    w_k: int | None = None,
) -> Hypergraph:
    """Hang the rooted hypergraphs ``H[0..k-2]`` on the pendant edge ``e``.

    The free vertices of ``e`` in ascending order are ``w_1..w_{k-1}``.  For
    ``i <= s`` the root of ``H_i`` is glued to the attachment vertex ``w_k``,
    otherwise to ``w_i``.  ``w_k`` may only be given explicitly when ``G`` is a
    single edge.
    """
    k = G.k
    _need(0 <= s <= k - 1, f"s must be in [0, {k - 1}], got {s}")
    _need(len(H) == k - 1, f"need {k - 1} rooted hypergraphs, got {len(H)}")
    if not 0 <= e < G.m:
        raise BadParam(f"edge id {e} not in [0, {G.m})")
    if G.m == 1:
        _need(w_k is not None and w_k in G.edges[0], "a single-edge base needs w_k in the edge")
    else:
        attach = pendant_attachment(G, e)
        _need(w_k is None or w_k == attach, f"w_k must be the attachment vertex {attach}")
        w_k = attach
    free = [v for v in G.edges[e] if v != w_k]

    edges = list(G.edges)
    n = G.n
    for i, (Hi, root) in enumerate(H, start=1):
        _need(Hi.k == k, "grafted hypergraphs must have the same uniformity")
        _need(0 <= root < Hi.n, f"root {root} not a vertex of H_{i}")
        target = w_k if i <= s else free[i - 1]
        mapping = {root: target}
        for v in range(Hi.n):
            if v != root:
                mapping[v] = n
                n += 1
        edges.extend(tuple(mapping[x] for x in edge) for edge in Hi.edges)
    return Hypergraph(k, n, tuple(edges))


def cg_star(k: int, g: int, t: Sequence[int]) -> Hypergraph:
    """Loose cycle with a hyperstar of ``t[i]`` edges at cycle vertex ``i*(k-1)``.

    ``t[i]`` counts star edges, so the size is ``g + sum(t)``.
    """
    G = loose_cycle(k, g)
    _need(len(t) == g, f"need {g} star sizes, got {len(t)}")
    _need(all(x >= 0 for x in t), "star sizes must be >= 0")
    for i, count in enumerate(t):
        for _ in range(count):
            G = attach_pendant_path(G, i * (k - 1), 1)
    return G


def tilde_c2(k: int, p: int, q: int) -> Hypergraph:
    """Two-edge cycle with pendant paths of lengths ``p`` and ``q``.

    Vertices: ``0 = u``, ``1 = v`` (shared), ``2..k-1`` the rest of the first
    edge and ``k..2k-3`` the rest of the second.  The paths hang at ``2`` and
    ``k``.
    """
    _need(k >= 3 and p >= 0 and q >= 0, f"tilde_c2 needs k >= 3, p, q >= 0; got {k}, {p}, {q}")
    e = (0, 1) + tuple(range(2, k))
    f = (0, 1) + tuple(range(k, 2 * k - 2))
    G = Hypergraph(k, 2 * k - 2, (e, f))
    return attach_pendant_path(attach_pendant_path(G, 2, p), k, q)


def lollipop_graph(m: int) -> Hypergraph:
    """Triangle with a path of ``m - 3`` edges hanging at vertex 2."""
    _need(m >= 3, f"lollipop needs m >= 3, got {m}")
    return attach_pendant_path(loose_cycle(2, 3), 2, m - 3)


def triangle_star_graph(m: int) -> Hypergraph:
    """Triangle with ``m - 3`` pendant edges at vertex 0."""
    _need(m >= 3, f"triangle_star needs m >= 3, got {m}")
    return cg_star(2, 3, [m - 3, 0, 0])


@dataclass(frozen=True)
class FamilySpec:
    """A named family member, e.g. ``cg-star:k=3,g=2,t=2/0``."""

    family: str
    k: int
    g: int | None = None
    m: int | None = None
    p: int | None = None
    q: int | None = None
    t: tuple[int, ...] | None = None

    _REQUIRED = {
        "loose-path": ("m",),
        "loose-cycle": ("g",),
        "hyperstar": ("t",),
        "cg-star": ("g", "t"),
        "tilde-c2": ("p", "q"),
        "lollipop": ("m",),
        "triangle-star": ("m",),
    }

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        family, sep, rest = text.strip().partition(":")
        if family not in FAMILIES:
            raise BadParam(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
        values: dict[str, object] = {}
        for item in filter(None, rest.split(",")) if sep else ():
            key, eq, raw = item.partition("=")
            if not eq or key not in ("k", "g", "m", "p", "q", "t") or key in values:
                raise BadParam(f"bad parameter {item!r} in {text!r}")
            try:
                values[key] = tuple(int(x) for x in raw.split("/")) if key == "t" else int(raw)
            except ValueError:
                raise BadParam(f"bad integer in {item!r}") from None
        if family in ("lollipop", "triangle-star"):
            values.setdefault("k", 2)
        if "k" not in values:
            raise BadParam(f"{text!r} is missing k")
        required = cls._REQUIRED[family]
        extra = set(values) - set(required) - {"k"}
        missing = [r for r in required if r not in values]
        if missing or extra:
            raise BadParam(f"{family} takes k,{','.join(required)}; got {','.join(sorted(values))}")
        return cls(family, **values)  # type: ignore[arg-type]

    def __str__(self) -> str:
        parts = [f"k={self.k}"]
        for key in ("g", "m", "p", "q"):
            if getattr(self, key) is not None:
                parts.append(f"{key}={getattr(self, key)}")
        if self.t is not None:
            parts.append("t=" + "/".join(str(x) for x in self.t))
        return f"{self.family}:{','.join(parts)}"

    def build(self) -> Hypergraph:
        f = self.family
        if f == "loose-path":
            return loose_path(self.k, self.m)
        if f == "loose-cycle":
            return loose_cycle(self.k, self.g)
        if f == "hyperstar":
            _need(len(self.t) == 1, "hyperstar takes a single t")
            return hyperstar(self.k, self.t[0])
        if f == "cg-star":
            return cg_star(self.k, self.g, self.t)
        if f == "tilde-c2":
            return tilde_c2(self.k, self.p, self.q)
        _need(self.k == 2, f"{f} is a graph family; k must be 2")
        if f == "lollipop":
            return lollipop_graph(self.m)
        return triangle_star_graph(self.m)
