import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nutkit.canon import are_isomorphic
from nutkit.errors import IsolatedPivot, NotANut
from nutkit.graph import Graph, make_antiprism
from nutkit.kernel import matvec, nullity
from nutkit.nut import (
    Classification,
    PairKind,
    classify,
    classify_pair,
    core_witness,
    fowler_decompositions,
    fowler_detect,
    fowler_extend,
    fowler_graph,
)


def test_k1_is_not_a_nut():
    rep = classify(Graph.empty(1))
    assert rep.nullity == 1
    assert rep.classification is not Classification.NUT


def test_c4_is_core_non_nut():
    # (1,0,-1,0) + (0,1,0,-1) has no zero entry, so C4 is a core graph
    rep = classify(Graph.cycle(4))
    assert rep.nullity == 2
    assert rep.classification is Classification.CORE_NON_NUT
    assert all(rep.kernel_witness) and not any(matvec(Graph.cycle(4), rep.kernel_witness))


def test_path3_singular_non_core():
    rep = classify(Graph.path(3))
    assert rep.classification is Classification.SINGULAR_NON_CORE
    assert rep.kernel_witness == (1, 0, -1)


def test_star_singular_non_core():
    # K_{1,3}: the centre is zero on the whole kernel
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    rep = classify(star)
    assert rep.nullity == 2
    assert rep.classification is Classification.SINGULAR_NON_CORE


def test_non_singular():
    rep = classify(Graph.complete(2))
    assert rep.classification is Classification.NON_SINGULAR and rep.kernel_witness is None


def test_order10_5_regular_is_nut(seed_by_key):
    assert classify(seed_by_key[(5, 10)].graph).classification is Classification.NUT


def test_core_witness_fallback():
    # prime-weighted combinations 2a - 3b vanish in coordinate 0; the search must go on
    basis = [(3, 1, 0), (2, 0, 1)]
    w = core_witness(basis, retries=1)
    assert w is not None and all(w)
    assert core_witness([(1, 0), (2, 0)]) is None


def test_fowler_5_regular(seed_by_key):
    g = seed_by_key[(5, 10)].graph
    ext = fowler_extend(g, 0)
    h = ext.result
    assert h.n == 20 and h.is_regular(5)
    assert classify(h).is_nut
    # pivot entry is (1 - d) x_v, new entries q_i = x_{u_i}, p_i = x_v
    x = classify(g).kernel_witness
    y = list(x)
    y[0] = -4 * x[0]
    y += [x[u] for u in ext.neighbors] + [x[0]] * 5
    assert not any(matvec(h, y))


def test_fowler_3_regular_order_18(seed_by_key):
    g = seed_by_key[(3, 12)].graph
    h = fowler_extend(g, 5).result
    assert h.n == 18 and h.is_regular(3) and classify(h).is_nut


def test_fowler_structure(seed_by_key):
    g = seed_by_key[(4, 8)].graph
    ext = fowler_extend(g, 2)
    h, qs, ps = ext.result, ext.layer_q, ext.layer_p
    for q, p in ext.matching:
        assert not h.has_edge(q, p)
    for q in qs:
        assert h.has_edge(2, q)
        assert sum(h.has_edge(q, p) for p in ps) == len(ps) - 1
    for p, u in zip(ps, ext.neighbors):
        assert h.has_edge(p, u) and not h.has_edge(2, u)
    assert not any(matvec(h, ext.vector))


def test_fowler_errors():
    with pytest.raises(NotANut):
        fowler_extend(Graph.cycle(4), 0)
    lone = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(IsolatedPivot):
        fowler_extend(lone, 2)


def test_detect(seed_by_key):
    g8 = seed_by_key[(4, 8)].graph
    assert fowler_detect(g8) is None
    g = seed_by_key[(5, 10)].graph
    h = fowler_extend(g, 3).result
    found = fowler_detect(h)
    assert found is not None
    base, pivot = found
    assert are_isomorphic(base, g)


def test_detect_after_relabel(seed_by_key):
    g = seed_by_key[(6, 13)].graph
    h = fowler_extend(g, 7).result
    perm = list(range(h.n))
    random.Random(4).shuffle(perm)
    base, _ = fowler_detect(h.relabel(perm))
    assert are_isomorphic(base, g)


def test_detect_rejects_non_nut_bases():
    # the pattern is there but the contracted graph (C4) is not a nut
    h, *_ = fowler_graph(Graph.cycle(4), 0)
    assert next(fowler_decompositions(h), None) is None


def test_classify_pair():
    n5 = {n for n in range(10, 200, 2)}
    assert classify_pair(10, 5, n5) is PairKind.SEED_PAIR
    assert classify_pair(22, 5, n5) is PairKind.C_PAIR
    assert classify_pair(13, 5, n5) is PairKind.NOT_REALISABLE


def test_nut_is_connected_on_antiprisms():
    for k in range(3, 13):
        g = make_antiprism(k)
        if classify(g).is_nut:
            assert g.is_connected()


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, picks) if keep])


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_classification_invariants(g):
    rep = classify(g)
    assert rep.nullity == nullity(g)
    if rep.classification is Classification.NUT:
        assert rep.nullity == 1 and g.n > 1 and all(rep.kernel_witness)
        assert g.is_connected()
    elif rep.classification is Classification.CORE_NON_NUT:
        assert all(rep.kernel_witness) and (rep.nullity >= 2 or g.n == 1)
    elif rep.classification is Classification.SINGULAR_NON_CORE:
        assert rep.nullity >= 1 and not all(rep.kernel_witness)
    else:
        assert rep.nullity == 0
    if rep.kernel_witness is not None:
        assert not any(matvec(g, rep.kernel_witness))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(3, 12), (4, 10), (5, 12), (6, 12), (7, 12)]), st.data())
def test_extend_then_detect_property(key, data):
    from nutkit.catalog import seed

    g = seed(*key).graph
    v = data.draw(st.integers(0, g.n - 1))
    ext = fowler_extend(g, v)
    assert ext.result.n == g.n + 2 * key[0]
    for w in ext.layer_q + ext.layer_p:
        assert ext.result.degree(w) == key[0]
    base, _ = fowler_detect(ext.result)
    assert are_isomorphic(base, g)
