import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypertrans.core import (
    StructureClass,
    adjacent_pairs,
    all_pairs,
    average_distance,
    build,
    classify,
    components,
    degree,
    delete_edge,
    delete_edges,
    delete_vertex,
    distances_from,
    incident_edges,
    is_connected,
    relabel,
    sigma_between,
    sigma_subset,
    sigma_vertex,
    transmission,
)
from hypertrans.enumeration import enumerate_unicyclic, random_hypertree
from hypertrans.errors import (
    BadSubset,
    Disconnected,
    DuplicateEdge,
    EdgeWrongSize,
    Overlap,
    VertexOutOfRange,
)
from hypertrans.families import cg_star, hyperstar, loose_cycle, tilde_c2

import oracles

EDGE = build(3, 3, [[0, 1, 2]])
C63 = build(3, 6, [[0, 1, 2], [2, 3, 4], [4, 5, 0]])
TWO_EDGES = build(3, 6, [[0, 1, 2], [3, 4, 5]])


def test_build_normalises():
    G = build(3, 6, [[4, 5, 0], [2, 1, 0], [4, 3, 2]])
    assert G.edges == ((0, 1, 2), (0, 4, 5), (2, 3, 4))
    assert G == C63
    assert G.m == 3


def test_build_matches_loose_cycle():
    assert C63 == loose_cycle(3, 3)


@pytest.mark.parametrize(
    "raw, err",
    [
        ([[0, 1, 1]], EdgeWrongSize),
        ([[0, 1]], EdgeWrongSize),
        ([[0, 1, 3]], VertexOutOfRange),
        ([[0, 1, -1]], VertexOutOfRange),
        ([[0, 1, 2], [2, 1, 0]], DuplicateEdge),
    ],
)
def test_build_rejects(raw, err):
    with pytest.raises(err):
        build(3, 3, raw)


def test_connectivity():
    assert is_connected(EDGE)
    assert not is_connected(TWO_EDGES)
    assert is_connected(C63)
    assert is_connected(build(3, 1, []))


def test_classify_examples():
    assert classify(EDGE) is StructureClass.HYPERTREE
    assert classify(C63) is StructureClass.UNICYCLIC
    dense = build(3, 5, [[0, 1, 2], [0, 1, 3], [0, 1, 4]])
    assert classify(dense) is StructureClass.OTHER_CONNECTED
    assert oracles.count_cycles(dense) >= 2
    assert classify(TWO_EDGES) is StructureClass.DISCONNECTED
    assert classify(build(3, 1, [])) is StructureClass.HYPERTREE


def _oracle_class(G):
    if len(oracles.union_find_components(G)) > 1:
        return StructureClass.DISCONNECTED
    return {0: StructureClass.HYPERTREE, 1: StructureClass.UNICYCLIC}.get(
        oracles.count_cycles(G), StructureClass.OTHER_CONNECTED
    )


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_classify_matches_cycle_count_oracle(m):
    # every labelled 3-uniform hypergraph with m edges on 6 vertices
    for G in oracles.all_edge_sets(3, 6, m):
        assert classify(G) is _oracle_class(G), G


def test_classify_on_enumerated_and_trees():
    for m in (2, 3, 4):
        for e in enumerate_unicyclic(3, m).entries:
            assert _oracle_class(e.graph) is StructureClass.UNICYCLIC
    rng = random.Random(3)
    for _ in range(30):
        T = random_hypertree(3, rng.randint(0, 4), rng)
        assert classify(T) is _oracle_class(T) is StructureClass.HYPERTREE


def test_distances_from():
    # vertex 3 is the far side of edge {2,3,4}; vertex 4 shares edge {4,5,0}
    assert distances_from(C63, 0) == list(oracles.floyd_warshall(C63)[0]) == [0, 1, 1, 2, 1, 1]
    assert distances_from(EDGE, 1) == [1, 0, 1]
    G = tilde_c2(3, 1, 1)
    far = G.n - 1
    assert max(distances_from(G, far)) == 4
    with pytest.raises(Disconnected):
        distances_from(TWO_EDGES, 0)


def test_all_pairs_examples():
    D = all_pairs(EDGE)
    assert D.d == ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    assert all_pairs(C63).histogram() == {1: 9, 2: 6}
    with pytest.raises(Disconnected):
        all_pairs(TWO_EDGES)


def test_transmission_examples():
    assert transmission(EDGE) == 3
    assert transmission(C63) == oracles.pair_sum(C63) == 21
    G = tilde_c2(3, 1, 1)
    assert oracles.pair_histogram(G) == {1: 11, 2: 9, 3: 4, 4: 4}
    assert transmission(G) == 57
    with pytest.raises(Disconnected):
        transmission(TWO_EDGES)


def test_sigma_vertex():
    assert sigma_vertex(EDGE, 2) == 2
    assert sigma_vertex(C63, 0) == 6


def test_sigma_subset_and_between():
    assert sigma_subset(C63, []) == 0
    assert sigma_subset(C63, [3]) == 0
    assert sigma_subset(C63, range(6)) == 21
    assert sigma_subset(C63, [0, 2, 4]) == 3
    assert sigma_between(C63, [], [1, 2]) == 0
    assert sigma_between(C63, [0], [3]) == 2
    with pytest.raises(Overlap):
        sigma_between(C63, [0, 1], [1])
    with pytest.raises(BadSubset):
        sigma_subset(C63, [7])
    with pytest.raises(Disconnected):
        sigma_subset(TWO_EDGES, [0, 1])


def test_average_distance():
    assert average_distance(EDGE) == 1
    assert average_distance(C63) == Fraction(7, 5)
    assert average_distance(loose_cycle(3, 2)) == Fraction(7, 6)
    assert isinstance(average_distance(C63), Fraction)


def test_degree():
    assert degree(EDGE, 1) == 1
    assert degree(C63, 0) == 2
    assert incident_edges(C63, 0) == [0, 1]
    assert degree(hyperstar(3, 4), 0) == 4


def test_deletions():
    H = delete_edge(EDGE, 0)
    assert (H.n, H.m) == (3, 0)
    assert not is_connected(H)
    D = delete_vertex(C63, 0)
    assert D.n == 5 and D.edges == ((1, 2, 3),)


def test_components():
    assert components(C63) == [list(range(6))]
    assert components(TWO_EDGES) == [[0, 1, 2], [3, 4, 5]]
    stripped = delete_edge(delete_edge(C63, 1), 0)
    assert components(stripped) == oracles.union_find_components(stripped)
    assert components(stripped) == [[0], [1], [2, 3, 4], [5]]


def test_cycle_removal_leaves_one_component_per_cycle_vertex():
    G = cg_star(3, 3, [1, 0, 2])
    cycle = [G.edges.index(e) for e in loose_cycle(3, 3).edges]
    comps = components(delete_edges(G, cycle))
    assert len(comps) == 3 * 2
    assert sorted(len(c) for c in comps) == [1, 1, 1, 1, 3, 5]


@pytest.mark.parametrize("seed", range(200))
def test_all_pairs_matches_floyd_warshall(seed):
    rng = random.Random(seed)
    G = oracles.random_connected(rng, rng.choice((2, 3, 4, 5)))
    D = all_pairs(G)
    assert (oracles.floyd_warshall(G) == D.d).all()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 4, 5]))
def test_metric_properties(seed, k):
    rng = random.Random(seed)
    G = oracles.random_connected(rng, k, 14)
    d = all_pairs(G).d
    for u in range(G.n):
        assert d[u][u] == 0
        for v in range(G.n):
            assert d[u][v] == d[v][u]
            for w in range(G.n):
                assert d[u][w] <= d[u][v] + d[v][w]
    assert 2 * transmission(G) == sum(sigma_vertex(G, u) for u in range(G.n))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_bipartition_identity(seed):
    rng = random.Random(seed)
    G = oracles.random_connected(rng, rng.choice((2, 3, 4)), 16)
    A = [v for v in range(G.n) if rng.random() < 0.5]
    B = [v for v in range(G.n) if v not in A]
    assert sigma_subset(G, A) + sigma_subset(G, B) + sigma_between(G, A, B) == transmission(G)


@settings(max_examples=50, deadline=None)
@given(st.permutations(range(8)))
def test_transmission_is_label_invariant(perm):
    G = tilde_c2(3, 1, 1)
    H = relabel(G, perm)
    assert transmission(H) == 57
    assert adjacent_pairs(H) == adjacent_pairs(G) == 11
