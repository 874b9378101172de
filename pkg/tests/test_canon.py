import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from nutkit.canon import are_isomorphic, automorphism_generators, canonical_form, canonical_graph, orbits
from nutkit.graph import Graph, make_antiprism, parse_appendix_adjlist

ORDER8 = "{0: 1 2 3 4; 1: 0 2 3 5; 2: 0 1 4 6; 3: 0 1 5 7; 4: 0 2 6 7; 5: 1 3 6 7; 6: 2 4 5 7; 7: 3 4 5 6}"


def cube():
    return Graph.from_edges(8, [(i, i ^ b) for i in range(8) for b in (1, 2, 4) if i < i ^ b])


def shuffled(g, seed):
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return g.relabel(perm)


def test_relabel_invariance_order8():
    g = parse_appendix_adjlist(ORDER8)
    assert canonical_form(g).certificate == canonical_form(shuffled(g, 1)).certificate


def test_k4_vs_c4():
    assert canonical_form(Graph.complete(4)).certificate != canonical_form(Graph.cycle(4)).certificate


def test_four_vertex_classes():
    classes = oracles.isomorphism_classes_by_orbit(4)
    assert len(classes) == 11
    certs = {canonical_form(Graph.from_edges(4, oracles.mask_edges(4, c[0]))).certificate for c in classes}
    assert len(certs) == 11


def test_are_isomorphic_examples():
    g = parse_appendix_adjlist(ORDER8)
    assert are_isomorphic(g, shuffled(g, 7))
    # the antiprism has triangles, the cube has none
    assert not are_isomorphic(make_antiprism(4), cube())
    assert not are_isomorphic(Graph.complete(2), Graph.empty(2))


def test_canonical_graph_is_fixed_point():
    g = shuffled(make_antiprism(5), 3)
    c = canonical_graph(g)
    assert canonical_graph(c) == c


@pytest.mark.parametrize("g, order", [
    (Graph.cycle(5), 10),
    (Graph.complete(4), 24),
    (Graph.path(4), 2),
    (make_antiprism(4), 16),
    (cube(), 48),
    (Graph.empty(3), 6),
    (Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)]), 48),
])
def test_group_orders(g, order):
    gens = automorphism_generators(g)
    assert oracles.group_order(g.n, gens) == order
    for p in gens:
        assert g.relabel(p) == g


def test_orbits():
    assert orbits(4, [(1, 0, 2, 3)]) == [[0, 1], [2], [3]]
    assert orbits(3, []) == [[0], [1], [2]]
    assert orbits(5, [(1, 2, 0, 3, 4), (0, 1, 2, 4, 3)]) == [[0, 1, 2], [3, 4]]


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 7), st.data())
def test_automorphisms_match_brute_force(n, data):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [p for p in pairs if data.draw(st.booleans())]
    g = Graph.from_edges(n, edges)
    assert oracles.group_order(n, automorphism_generators(g)) == oracles.automorphism_count(n, edges)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 14), st.data())
def test_relabelling_invariance_property(n, data):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [p for p in pairs if data.draw(st.booleans())]
    g = Graph.from_edges(n, edges)
    perm = data.draw(st.permutations(range(n)))
    h = g.relabel(perm)
    assert canonical_form(g).certificate == canonical_form(h).certificate
    assert canonical_graph(g) == canonical_graph(h)
