import json

import pytest

from nutkit.catalog import (
    ClaimedSet,
    SeedEntry,
    _catalog_text,
    census,
    certify_N,
    construct_nut,
    coverage,
    load_seed_catalog,
    n0_n1_table,
    parse_seed_text,
    verify_certificate,
)
from nutkit.errors import (
    BudgetExceeded,
    CatalogCorrupt,
    ExclusionUnverified,
    InadmissiblePair,
    InsufficientSeeds,
)
from nutkit.graph import Graph
from nutkit.nut import classify

APPENDIX_ORDERS = {
    3: [12, 20, 22],
    4: [8, 10, 12, 14, 15, 17, 19, 21],
    5: [10, 12, 14, 16, 18],
    6: list(range(12, 24)),
    7: list(range(12, 25, 2)),
    8: [12] + list(range(14, 28)) + [29],
    9: list(range(16, 33, 2)),
    10: list(range(15, 35)),
    11: list(range(16, 37, 2)),
}


def test_catalog_orders(seeds):
    got = {}
    for s in seeds:
        got.setdefault(s.degree, []).append(s.order)
    assert got == APPENDIX_ORDERS


def test_catalog_examples(seed_by_key):
    s = seed_by_key[(5, 10)]
    assert s.graph.n == 10 and s.graph.is_regular(5) and classify(s.graph).is_nut
    s = seed_by_key[(11, 36)]
    assert s.graph.n == 36 and s.graph.is_regular(11)
    assert s.label == "appendix d=11 order=36"
    assert [e.order for e in load_seed_catalog(5)] == [10, 12, 14, 16, 18]


def test_catalog_text_is_typeset_form():
    text = _catalog_text()
    assert r"\item Order 8: \{0: 1 2 3 4;" in text


@pytest.mark.parametrize("mutate", [
    lambda t: t.replace("Order 8:", "Order 9:", 1),
    lambda t: t.replace(r"\item Order 8: \{0: 1 2 3 4;", r"\item Order 8: \{0: 1 2 3 5;", 1),
    lambda t: t.replace("[4]", "[5]", 1),
    lambda t: t + "\nnot a catalog line\n",
    lambda t: t.replace(r"7: 3 4 5 6\}", r"7: 3 4 5 6", 1),
])
def test_corrupt_catalog(mutate):
    text = _catalog_text()
    with pytest.raises(CatalogCorrupt):
        parse_seed_text(mutate(text))


def test_non_nut_entry_rejected():
    # the octahedron is 4-regular on 6 vertices but not a nut
    text = "[4]\n" + r"\item Order 6: \{0: 1 2 3 4; 1: 0 2 3 5; 2: 0 1 4 5; 3: 0 1 4 5; 4: 0 2 3 5; 5: 1 2 3 4\}"
    with pytest.raises(CatalogCorrupt):
        parse_seed_text(text)


@pytest.mark.parametrize("d, n, expect", [(4, 8, 1), (5, 12, 4), (7, 12, 3), (3, 12, 9), (8, 13, 0)])
def test_census_examples(d, n, expect):
    assert census(d, n) == expect


def test_census_errors():
    with pytest.raises(InadmissiblePair):
        census(5, 13)
    with pytest.raises(InadmissiblePair):
        census(5, 5)
    with pytest.raises(BudgetExceeded):
        census(4, 14, budget=1e-9)


def test_claimed_set_membership():
    cs = ClaimedSet(3, 18, "even", (12,), (4, 6, 8, 10, 14, 16))
    assert 12 in cs and 18 in cs and 20 in cs
    assert 14 not in cs and 19 not in cs and "x" not in cs
    assert cs.n0 == 12 and cs.n1 == 18
    assert cs.describe() == "{12} u {n >= 18, n even}"


def test_coverage_matches_hand_computation():
    cs = coverage(3, [12, 20, 22])
    assert (cs.threshold, cs.extra, cs.excluded) == (18, (12,), (4, 6, 8, 10, 14, 16))
    cs = coverage(4, [8, 10, 12, 14, 15, 17, 19, 21])
    assert (cs.threshold, cs.extra, cs.excluded) == (14, (8, 10, 12), (5, 6, 7, 9, 11, 13))


def test_certify_8():
    cert = certify_N(8)
    cs = cert.claimed_set
    assert (cs.threshold, cs.parity, cs.extra) == (14, "all", (12,))
    assert 13 in [e.order for e in cert.exclusions]
    assert all(e.census_count == 0 and e.mode == "strict" for e in cert.exclusions)


def test_certify_9():
    cert = certify_N(9)
    assert (cert.claimed_set.threshold, cert.claimed_set.parity) == (16, "even")
    assert [e.order for e in cert.exclusions] == [10, 12, 14]
    assert cert.step == 18
    assert cert.base_orders == tuple(range(16, 33, 2))


def test_certify_with_seed_deleted():
    seeds = [s for s in load_seed_catalog(5) if s.order != 14]
    with pytest.raises(InsufficientSeeds):
        certify_N(5, seeds=seeds)


def test_certify_residue_gap_for_cubic():
    # dropping order 12 for d=3 leaves residue 0 mod 6 covered by nothing
    seeds = [s for s in load_seed_catalog(3) if s.order != 12]
    with pytest.raises(InsufficientSeeds):
        certify_N(3, seeds=seeds)


def test_certify_with_extra_seed_detects_contradiction():
    # a base-order seed above a realisable order that is declared excluded
    g = construct_nut(5, 20)
    seeds = [s for s in load_seed_catalog(5) if s.order != 10] + [SeedEntry(5, 20, g, "extended")]
    with pytest.raises(InsufficientSeeds):
        certify_N(5, seeds=seeds)


def test_strict_with_no_budget_left():
    with pytest.raises(ExclusionUnverified):
        certify_N(9, mode="strict", budget=1e-9)


def test_trusting_mode():
    cert = certify_N(9, mode="trusting")
    assert all(e.mode == "trusting" and e.census_count == 0 for e in cert.exclusions)


def test_certificate_json_schema_and_stability():
    cert = certify_N(5)
    text = cert.to_json()
    assert text.endswith("}\n") and text == certify_N(5).to_json()
    doc = json.loads(text)
    assert list(doc) == ["degree", "claimed_set", "seeds", "exclusions"]
    assert list(doc["claimed_set"]) == ["threshold", "parity", "extra", "excluded"]
    assert list(doc["seeds"][0]) == ["order", "graph6"]
    assert list(doc["exclusions"][0]) == ["order", "census_count", "mode"]
    assert text.splitlines()[1].startswith('  "degree"')
    assert verify_certificate(doc)


def test_verify_certificate_rejects_tampering():
    doc = json.loads(certify_N(5).to_json())
    doc["claimed_set"]["threshold"] = 8
    assert not verify_certificate(doc)
    doc = json.loads(certify_N(5).to_json())
    doc["exclusions"] = doc["exclusions"][:1]
    assert not verify_certificate(doc)


@pytest.mark.parametrize("d, row", [(3, (3, 12, 18)), (8, (8, 12, 14)), (10, (10, 15, 15))])
def test_n0_n1_examples(d, row):
    assert dict((r[0], r) for r in n0_n1_table(11, mode="trusting"))[d] == row


def test_construct_nut():
    g = construct_nut(3, 30)
    assert g.n == 30 and g.is_regular(3) and classify(g).is_nut
    with pytest.raises(InsufficientSeeds):
        construct_nut(3, 14)
    assert isinstance(g, Graph)
