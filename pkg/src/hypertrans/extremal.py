"""Extremal transmission values, theorem verifiers and lemma property checks.

Every check is exact integer arithmetic.  The theorem verifiers compare the
exhaustive enumeration against the predicted extremal family; the lemma
checkers draw seeded random instances satisfying each lemma's hypotheses and
compare transmissions computed by BFS.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb
from pathlib import Path
from typing import Callable

from .core import Hypergraph, all_pairs, degree, sigma_between, transmission
from .enumeration import (
    canonical_key,
    enumerate_unicyclic,
    random_hypertree,
    random_unicyclic,
    shuffle_labels,
)
from .errors import BadLemmaId, BadParam
from .families import (
    FamilySpec,
    g_u,
    g_uv,
    lollipop_graph,
    loose_cycle,
    tilde_c2,
    triangle_star_graph,
)
from .hgr import write_hgr
from .transforms import (
    decompose,
    lemma3_bound,
    lemma3_pair,
    lemma4_candidates,
    lemma5_move,
    lemma5_sizes,
    lemma6_boundary_formula,
    lemma6_moved_boundary_formula,
    lemma6_move,
    tilde_c2_tail,
)

LEMMA_IDS = (1, 2, 3, 4, 5, 6)


@dataclass
class ExtremalReport:
    k: int
    m: int
    direction: str
    formula_value: int | None
    enumerated_value: int
    extremal_keys: list[str]
    unique: bool
    passed: bool
    notes: list[str] = field(default_factory=list)
    witness: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class TrialRecord:
    index: int
    instance: dict
    sigma_before: int
    sigma_after: int
    delta: int
    required: str
    satisfied: bool
    witness: str | None = None


@dataclass
class LemmaReport:
    lemma: int
    trials: int
    seed: int | None
    records: list[TrialRecord]
    passed: bool
    witnesses: list[str] = field(default_factory=list)

    @property
    def satisfied(self) -> int:
        return sum(r.satisfied for r in self.records)

    def to_dict(self) -> dict:
        return asdict(self)


def _need_k3(k: int, m: int) -> None:
    if k < 3 or m < 2:
        raise BadParam(f"needs k >= 3 and m >= 2, got k={k}, m={m}")


def sigma_min_formula(k: int, m: int) -> int:
    """Minimum transmission over ``k``-uniform unicyclic hypergraphs of size ``m``.

    Adjacent pairs contribute 1 and every other pair 2.  A two-edge cycle
    loses one adjacent pair, so only ``m = 3`` avoids the ``+1``.
    """
    _need_k3(k, m)
    n = m * (k - 1)
    adjacent = m * comb(k, 2)
    base = adjacent + 2 * (comb(n, 2) - adjacent)
    return base if m == 3 else base + 1


def min_family(k: int, m: int) -> FamilySpec:
    _need_k3(k, m)
    if m == 3:
        return FamilySpec("loose-cycle", k, g=3)
    return FamilySpec("cg-star", k, g=2, t=(m - 2, 0))


def max_family(k: int, m: int) -> FamilySpec:
    _need_k3(k, m)
    return FamilySpec("tilde-c2", k, p=(m - 2) // 2, q=(m - 1) // 2)


def sigma_max_value(k: int, m: int) -> int:
    return transmission(max_family(k, m).build())


def expected_adjacent_pairs(k: int, m: int, girth: int) -> int:
    return m * comb(k, 2) - (girth == 2)


def _dump(witness_dir: str | Path | None, name: str, G: Hypergraph) -> str | None:
    if witness_dir is None:
        return None
    path = Path(witness_dir) / name
    write_hgr(path, G)
    return str(path)


def verify_theorem(
    k: int,
    m: int,
    direction: str,
    budget: int | None = None,
    witness_dir: str | Path | None = None,
) -> ExtremalReport:
    if direction not in ("min", "max"):
        raise BadParam(f"direction must be 'min' or 'max', got {direction!r}")
    _need_k3(k, m)
    result = enumerate_unicyclic(k, m, budget)
    group = result.argmin() if direction == "min" else result.argmax()
    spec = min_family(k, m) if direction == "min" else max_family(k, m)
    formula = sigma_min_formula(k, m) if direction == "min" else sigma_max_value(k, m)
    predicted = canonical_key(spec.build())
    keys = [e.key for e in group]
    passed = group[0].sigma == formula and keys == [predicted]
    report = ExtremalReport(
        k=k,
        m=m,
        direction=direction,
        formula_value=formula,
        enumerated_value=group[0].sigma,
        extremal_keys=[x.hex() for x in keys],
        unique=len(keys) == 1,
        passed=passed,
        notes=[f"classes={len(result.entries)}", f"predicted={spec}"],
    )
    if not passed:
        odd = next((e for e in group if e.key != predicted), group[0])
        report.witness = _dump(witness_dir, f"theorem_{direction}_k{k}_m{m}.hgr", odd.graph)
    return report


def verify_theorem_min(k: int, m: int, **kw) -> ExtremalReport:
    return verify_theorem(k, m, "min", **kw)


def verify_theorem_max(k: int, m: int, **kw) -> ExtremalReport:
    return verify_theorem(k, m, "max", **kw)


def graph_remark_check(
    m: int, budget: int | None = None, witness_dir: str | Path | None = None
) -> ExtremalReport:
    """Ordinary unicyclic graphs: minimum ``m(m-2)`` exactly at diameter <= 2.

    The notes name the actual minimizers and maximizers and say whether the
    two named candidates (the lollipop as minimizer, the triangle with a
    pendant star as maximizer) agree with the enumeration.
    """
    if not 5 <= m <= 7:
        raise BadParam(f"graph remark check covers 5 <= m <= 7, got {m}")
    result = enumerate_unicyclic(2, m, budget)
    named = {
        canonical_key(lollipop_graph(m)): "lollipop",
        canonical_key(triangle_star_graph(m)): "triangle-star",
        canonical_key(loose_cycle(2, m)): f"cycle-{m}",
    }

    def name(key: bytes) -> str:
        return named.get(key, "unnamed:" + key.hex())

    lo, hi = result.argmin(), result.argmax()
    small_diameter = {e.key for e in result.entries if all_pairs(e.graph).diameter() <= 2}
    bound = m * (m - 2)
    min_keys = {e.key for e in lo}
    passed = lo[0].sigma == bound and min_keys == small_diameter
    lolli = canonical_key(lollipop_graph(m))
    star = canonical_key(triangle_star_graph(m))
    notes = [
        "minimizers: " + ", ".join(name(e.key) for e in lo),
        "maximizers: " + ", ".join(name(e.key) for e in hi) + f" (sigma={hi[0].sigma})",
        "diameter<=2 classes: " + ", ".join(sorted(name(x) for x in small_diameter)),
        "lollipop named as minimizer: " + ("agrees" if lolli in min_keys else "disagrees"),
        "triangle-star named as maximizer: "
        + ("agrees" if star in {e.key for e in hi} else "disagrees"),
    ]
    report = ExtremalReport(
        k=2,
        m=m,
        direction="min",
        formula_value=bound,
        enumerated_value=lo[0].sigma,
        extremal_keys=[e.key.hex() for e in lo],
        unique=len(lo) == 1,
        passed=passed,
        notes=notes,
    )
    if not passed:
        report.witness = _dump(witness_dir, f"graph_remark_m{m}.hgr", lo[0].graph)
    return report


def _describe(G: Hypergraph, **extra) -> dict:
    return {"k": G.k, "n": G.n, "edges": [list(e) for e in G.edges], **extra}


def _random_base(rng: random.Random, k: int, min_edges: int) -> Hypergraph:
    """A random hypertree or unicyclic hypergraph with at least ``min_edges`` edges."""
    if rng.random() < 0.5:
        return shuffle_labels(random_hypertree(k, rng.randint(max(1, min_edges), 4), rng), rng)
    lo = 2 if k >= 3 else 3
    return shuffle_labels(random_unicyclic(k, rng.randint(max(lo, min_edges), 5), rng), rng)


def _paths(rng: random.Random) -> tuple[int, int]:
    q = rng.randint(1, 3)
    return rng.randint(q, q + 3), q


def _trial_lemma1(rng: random.Random):
    k = rng.choice((2, 3, 4, 5))
    G = _random_base(rng, k, 1)
    u = rng.randrange(G.n)
    p, q = _paths(rng)
    before = transmission(g_u(G, u, p, q))
    after = transmission(g_u(G, u, p + 1, q - 1))
    return _describe(G, u=u, p=p, q=q), before, after, "sigma_after > sigma_before", after > before, G


def _trial_lemma2(rng: random.Random):
    k = rng.choice((2, 3, 4, 5))
    while True:
        G = _random_base(rng, k, 2)
        choices = [(e, u) for e in G.edges for u in e if degree(G, u) == 1]
        if choices:
            break
    e, u = rng.choice(choices)
    v = rng.choice([x for x in e if x != u])
    p, q = _paths(rng)
    before = transmission(g_uv(G, u, v, p, q))
    after = transmission(g_uv(G, u, v, p + 1, q - 1))
    return _describe(G, u=u, v=v, p=p, q=q), before, after, "sigma_after > sigma_before", after > before, G


def _pendant_edges(G: Hypergraph) -> list[int]:
    return [i for i, e in enumerate(G.edges) if sum(degree(G, v) >= 2 for v in e) == 1]


def _trial_lemma3(rng: random.Random):
    k = rng.choice((2, 3, 4, 5))
    while True:
        G = _random_base(rng, k, 2)
        pendant = _pendant_edges(G)
        if G.m >= 2 and pendant:
            break
    e = rng.choice(pendant)
    sizes = [rng.choice((0, 0, 1, 2)) for _ in range(k - 1)]
    if not any(sizes):
        sizes[rng.randrange(k - 1)] = rng.randint(1, 2)
    H = []
    for size in sizes:
        Hi = random_hypertree(k, size, rng)
        H.append((Hi, rng.randrange(Hi.n)))
    j = next(i for i, x in enumerate(sizes, start=1) if x)
    s = rng.randint(j, k - 1)
    first, second = lemma3_pair(G, e, s, H)
    before, after = transmission(first), transmission(second)
    bound = lemma3_bound(G, s, H)
    instance = _describe(
        G,
        e=e,
        s=s,
        grafts=[{"edges": [list(x) for x in Hi.edges], "n": Hi.n, "root": r} for Hi, r in H],
    )
    ok = before - after >= bound > 0
    return instance, before, after, f"sigma_before - sigma_after >= {bound} > 0", ok, G


def _trial_lemma4(rng: random.Random):
    k = rng.choice((3, 4, 5))
    g = rng.randint(3, 5)
    G = shuffle_labels(random_unicyclic(k, g + rng.randint(0, 3), rng, girth=g), rng)
    first, second = lemma4_candidates(G)
    before = transmission(G)
    s1, s2 = transmission(first), transmission(second)
    after = max(s1, s2)
    instance = _describe(G, girth=g, sigma_candidates=[s1, s2])
    return instance, before, after, "max(sigma_G1*, sigma_G2*) > sigma_before", after > before, G


def _trial_lemma5(rng: random.Random):
    k = rng.choice((3, 4, 5))
    while True:
        G = shuffle_labels(random_unicyclic(k, rng.randint(3, 7), rng, girth=2), rng)
        sizes = lemma5_sizes(decompose(G))
        if sizes.moved >= 1 and sizes.hypothesis:
            break
    before = transmission(G)
    after = transmission(lemma5_move(G))
    want = sizes.predicted_delta
    instance = _describe(G, moved=sizes.moved, far=sizes.far, near=sizes.near)
    ok = after - before == want and want > 0
    return instance, before, after, f"delta == {want} > 0", ok, G


def lemma6_instance(k: int, p: int, q: int):
    """Exact checks for one ``(k, p, q)``: the delta and both boundary sums."""
    G, tail, _, _ = tilde_c2_tail(k, p, q)
    _, moved = lemma6_move(k, p, q)
    rest = [v for v in range(G.n) if v not in tail]
    before = transmission(G)
    after = transmission(tilde_c2(k, p + 1, q - 1))
    want = (k - 1) * (q - p - 1)
    boundary = sigma_between(G, tail, rest)
    moved_boundary = sigma_between(moved, tail, rest)
    ok = (
        after - before == want
        and transmission(moved) == after
        and boundary == lemma6_boundary_formula(k, p, q)
        and moved_boundary == lemma6_moved_boundary_formula(k, p, q)
    )
    instance = _describe(G, p=p, q=q, boundary=boundary, moved_boundary=moved_boundary)
    return instance, before, after, f"delta == {want} and boundary sums match", ok, G


def _trial_lemma6(rng: random.Random):
    k = rng.choice((3, 4, 5))
    q = rng.randint(3, 8)
    p = rng.randint(1, q - 2)
    return lemma6_instance(k, p, q)


_TRIALS: dict[int, Callable] = {
    1: _trial_lemma1,
    2: _trial_lemma2,
    3: _trial_lemma3,
    4: _trial_lemma4,
    5: _trial_lemma5,
    6: _trial_lemma6,
}


def _trial_rng(lemma: int, seed: int, index: int) -> random.Random:
    return random.Random(f"lemma{lemma}:seed{seed}:trial{index}")


def run_trial(lemma: int, seed: int, index: int):
    """One replayable trial; returns the record and the base instance."""
    instance, before, after, required, ok, G = _TRIALS[lemma](_trial_rng(lemma, seed, index))
    record = TrialRecord(index, instance, before, after, after - before, required, bool(ok))
    return record, G


def _run_trial_star(args):
    return run_trial(*args)


def _collect(lemma: int, trials: int, seed: int | None, outcomes, witness_dir) -> LemmaReport:
    records, witnesses = [], []
    for record, G in outcomes:
        if not record.satisfied:
            tag = f"seed{seed}_" if seed is not None else ""
            record.witness = _dump(witness_dir, f"lemma{lemma}_{tag}trial{record.index}.hgr", G)
            if record.witness:
                witnesses.append(record.witness)
        records.append(record)
    return LemmaReport(lemma, trials, seed, records, all(r.satisfied for r in records), witnesses)


def check_lemma(
    lemma: int,
    trials: int,
    seed: int,
    jobs: int = 1,
    witness_dir: str | Path | None = None,
) -> LemmaReport:
    if lemma not in LEMMA_IDS:
        raise BadLemmaId(f"lemma id must be one of {LEMMA_IDS}, got {lemma}")
    if trials < 1:
        raise BadParam("trials must be >= 1")
    args = [(lemma, seed, i) for i in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_trial_star, args, chunksize=max(1, trials // (4 * jobs))))
    else:
        outcomes = [run_trial(*a) for a in args]
    return _collect(lemma, trials, seed, outcomes, witness_dir)


def lemma6_exhaustive(
    ks=(3, 4, 5), max_total: int = 10, witness_dir: str | Path | None = None
) -> LemmaReport:
    """Every ``k`` in ``ks`` and ``1 <= p <= q-2`` with ``p + q <= max_total``."""
    outcomes = []
    for k in ks:
        for q in range(3, max_total):
            for p in range(1, min(q - 2, max_total - q) + 1):
                instance, before, after, required, ok, G = lemma6_instance(k, p, q)
                record = TrialRecord(len(outcomes), instance, before, after, after - before, required, ok)
                outcomes.append((record, G))
    return _collect(6, len(outcomes), None, outcomes, witness_dir)
