"""Seed catalog, nut censuses and existence certificates for N(d).

``N(d)`` is the set of orders of d-regular nut graphs.  Since the Fowler
construction at any vertex of a d-regular nut of order n gives one of order
``n + 2d``, a seed in every admissible residue class modulo ``2d`` settles all
large orders.  The orders left uncovered below the point where coverage
becomes complete must each be shown empty by an exhaustive census.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

from .errors import (
    BudgetExceeded,
    CatalogCorrupt,
    ExclusionUnverified,
    InadmissiblePair,
    InsufficientSeeds,
    NutkitError,
)
from .graph import Graph, parse_appendix_adjlist, to_graph6
from .nut import classify, fowler_extend
from .regular import count_nuts, is_admissible

DEFAULT_BUDGET = 60.0
CERTIFIED_DEGREES = range(3, 12)

_HEADER_RE = re.compile(r"^\[(\d+)\]$")
_ITEM_RE = re.compile(r"^\\item\s+Order\s+(\d+):\s*(.*)$")


@dataclass(frozen=True)
class SeedEntry:
    degree: int
    order: int
    graph: Graph = field(repr=False)
    label: str = ""


def _catalog_text() -> str:
    return resources.files("nutkit").joinpath("data/seeds.txt").read_text(encoding="ascii")


def parse_seed_text(text: str) -> list[SeedEntry]:
    """Parse and validate catalog text; any bad entry raises CatalogCorrupt."""
    entries = []
    degree = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _HEADER_RE.match(line)
        if m:
            degree = int(m.group(1))
            continue
        m = _ITEM_RE.match(line)
        if m is None or degree is None:
            raise CatalogCorrupt(f"line {lineno}: unrecognised catalog line")
        order = int(m.group(1))
        body = m.group(2).replace(r"\{", "{").replace(r"\}", "}")
        label = f"appendix d={degree} order={order}"
        try:
            g = parse_appendix_adjlist(body)
        except NutkitError as exc:
            raise CatalogCorrupt(f"{label}: {exc}") from exc
        if g.n != order:
            raise CatalogCorrupt(f"{label}: list has {g.n} vertices")
        if not g.is_regular(degree):
            raise CatalogCorrupt(f"{label}: graph is not {degree}-regular")
        rep = classify(g)
        if not rep.is_nut:
            raise CatalogCorrupt(f"{label}: graph is {rep.classification}, not a nut")
        entries.append(SeedEntry(degree, order, g, label))
    return entries


@lru_cache(maxsize=1)
def _default_catalog() -> tuple[SeedEntry, ...]:
    return tuple(parse_seed_text(_catalog_text()))


def load_seed_catalog(degree: int | None = None) -> list[SeedEntry]:
    seeds = _default_catalog()
    return [s for s in seeds if degree is None or s.degree == degree]


def seed(degree: int, order: int) -> SeedEntry:
    for s in _default_catalog():
        if s.degree == degree and s.order == order:
            return s
    raise KeyError(f"no seed of degree {degree} and order {order}")


# censuses ---------------------------------------------------------------------


def census(d: int, n: int, budget: float | None = DEFAULT_BUDGET, workers: int = 1) -> int:
    """Number of d-regular nut graphs of order n, up to isomorphism."""
    if not is_admissible(n, d):
        raise InadmissiblePair(f"({n}, {d}) is not admissible")
    return count_nuts(n, d, workers=workers, budget=budget)


# claimed sets -----------------------------------------------------------------


@dataclass(frozen=True)
class ClaimedSet:
    """``extra`` plus every order ``>= threshold`` of the right parity."""

    degree: int
    threshold: int
    parity: str  # "even" or "all"
    extra: tuple[int, ...] = ()
    excluded: tuple[int, ...] = ()

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, int):
            return False
        if n in self.extra:
            return True
        return n >= self.threshold and (self.parity == "all" or n % 2 == 0)

    def members(self, upto: int) -> list[int]:
        return [n for n in range(1, upto + 1) if n in self]

    @property
    def n0(self) -> int:
        return min(self.extra + (self.threshold,))

    @property
    def n1(self) -> int:
        # threshold is already the least order from which coverage is complete
        return self.threshold

    def describe(self) -> str:
        tail = f"{{n >= {self.threshold}" + (", n even}" if self.parity == "even" else "}")
        if self.extra:
            return "{" + ", ".join(map(str, self.extra)) + "} u " + tail
        return tail


def _admissible_orders(d: int, lo: int, hi: int) -> list[int]:
    return [n for n in range(lo, hi) if is_admissible(n, d)]


def _closure_below(d: int, seed_orders: Iterable[int], hi: int) -> set[int]:
    reach = set()
    for s in seed_orders:
        reach.update(range(s, hi, 2 * d))
    return reach


def base_orders(d: int, seed_orders: Iterable[int]) -> list[int]:
    """Seed orders not reachable from a smaller seed order by steps of ``2d``."""
    orders = sorted(set(seed_orders))
    return [s for s in orders if not any(t < s and (s - t) % (2 * d) == 0 for t in orders)]


def coverage(d: int, seed_orders: Iterable[int]) -> ClaimedSet:
    """Orders realised by the seeds and their extensions, as a ClaimedSet.

    Raises InsufficientSeeds when some admissible residue class mod ``2d``
    has no seed, because then no threshold exists.
    """
    bases = base_orders(d, seed_orders)
    step = 2 * d
    residues = {s % step for s in bases}
    needed = {r for r in range(step) if d % 2 == 0 or r % 2 == 0}
    missing = sorted(needed - residues)
    if missing:
        raise InsufficientSeeds(f"no seed for orders = {missing} mod {step} (d={d})")
    top = max(bases) + 1
    reach = _closure_below(d, bases, top)
    orders = _admissible_orders(d, d + 1, top)
    threshold = top
    for n in reversed(orders):
        if n not in reach:
            break
        threshold = n
    extra = tuple(n for n in orders if n < threshold and n in reach)
    excluded = tuple(n for n in orders if n < threshold and n not in reach)
    return ClaimedSet(d, threshold, "even" if d % 2 else "all", extra, excluded)


# certificates -----------------------------------------------------------------


@dataclass(frozen=True)
class Exclusion:
    order: int
    census_count: int
    mode: str  # "strict" or "trusting"


@dataclass(frozen=True)
class ExistenceCertificate:
    degree: int
    claimed_set: ClaimedSet
    seeds: tuple[tuple[int, str], ...]  # (order, graph6) of the base seeds
    exclusions: tuple[Exclusion, ...]

    @property
    def step(self) -> int:
        return 2 * self.degree

    @property
    def base_orders(self) -> tuple[int, ...]:
        return tuple(o for o, _ in self.seeds)

    def to_dict(self) -> dict:
        cs = self.claimed_set
        return {
            "degree": self.degree,
            "claimed_set": {
                "threshold": cs.threshold,
                "parity": cs.parity,
                "extra": list(cs.extra),
                "excluded": list(cs.excluded),
            },
            "seeds": [{"order": o, "graph6": g6} for o, g6 in self.seeds],
            "exclusions": [
                {"order": e.order, "census_count": e.census_count, "mode": e.mode}
                for e in self.exclusions
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def certify_N(d: int, mode: str = "strict", seeds: Sequence[SeedEntry] | None = None,
              budget: float | None = DEFAULT_BUDGET, workers: int = 1) -> ExistenceCertificate:
    """Build and check the certificate for ``N(d)``.

    In strict mode every excluded order is recomputed by census (each within
    ``budget`` seconds); in trusting mode the exclusions are recorded without
    recomputation.
    """
    if mode not in ("strict", "trusting"):
        raise ValueError(f"unknown mode {mode!r}")
    if seeds is None:
        seeds = load_seed_catalog(d)
    seeds = [s for s in seeds if s.degree == d]
    if not seeds:
        raise InsufficientSeeds(f"no seeds of degree {d}")
    claimed = coverage(d, [s.order for s in seeds])
    by_order = {s.order: s for s in seeds}
    used = base_orders(d, by_order)
    exclusions = []
    for n in claimed.excluded:
        if mode == "trusting":
            exclusions.append(Exclusion(n, 0, "trusting"))
            continue
        try:
            found = census(d, n, budget=budget, workers=workers)
        except BudgetExceeded as exc:
            raise ExclusionUnverified(f"census ({n}, {d}) did not finish: {exc}") from exc
        if found:
            raise InsufficientSeeds(
                f"order {n} has {found} {d}-regular nut graphs but no seed covers it")
        exclusions.append(Exclusion(n, 0, "strict"))
    return ExistenceCertificate(
        degree=d,
        claimed_set=claimed,
        seeds=tuple((o, to_graph6(by_order[o].graph)) for o in used),
        exclusions=tuple(exclusions),
    )


def verify_certificate(data: dict, budget: float | None = DEFAULT_BUDGET) -> bool:
    """Re-check a certificate document independently of how it was produced.

    Seeds must decode to d-regular nuts of the stated orders, the claimed set
    must be exactly what those seeds cover, and strict exclusions are
    recounted.
    """
    from .graph import parse_graph6

    d = data["degree"]
    orders = []
    for s in data["seeds"]:
        g = parse_graph6(s["graph6"])
        if g.n != s["order"] or not g.is_regular(d) or not classify(g).is_nut:
            return False
        orders.append(g.n)
    claimed = coverage(d, orders)
    cs = data["claimed_set"]
    if (cs["threshold"], cs["parity"], tuple(cs["extra"]), tuple(cs["excluded"])) != (
        claimed.threshold, claimed.parity, claimed.extra, claimed.excluded
    ):
        return False
    if sorted(e["order"] for e in data["exclusions"]) != list(claimed.excluded):
        return False
    for e in data["exclusions"]:
        if e["census_count"] != 0:
            return False
        if e["mode"] == "strict" and census(d, e["order"], budget=budget) != 0:
            return False
    return True


@lru_cache(maxsize=None)
def _certificate(d: int, mode: str) -> ExistenceCertificate:
    return certify_N(d, mode)


def n0_n1_table(max_d: int = 11, mode: str = "strict") -> list[tuple[int, int, int]]:
    rows = []
    for d in range(3, max_d + 1):
        cs = _certificate(d, mode).claimed_set
        rows.append((d, cs.n0, cs.n1))
    return rows


def construct_nut(d: int, n: int, seeds: Sequence[SeedEntry] | None = None) -> Graph:
    """A d-regular nut of order n, grown from a seed by repeated extension at vertex 0."""
    if seeds is None:
        seeds = load_seed_catalog(d)
    start = [s for s in seeds if s.degree == d and s.order <= n and (n - s.order) % (2 * d) == 0]
    if not start:
        raise InsufficientSeeds(f"no seed reaches order {n} for degree {d}")
    g = min(start, key=lambda s: s.order).graph
    while g.n < n:
        g = fowler_extend(g, 0).result
    return g
