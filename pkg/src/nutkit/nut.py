"""Nut classification and the Fowler construction.

A graph is a *nut* when its adjacency matrix has nullity one and the kernel
is spanned by a vector without zero entries.  The Fowler construction
``F(G, v)`` grows a nut ``G`` by ``2 deg(v)`` vertices and keeps it a nut;
:func:`fowler_detect` runs it backwards.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Collection, Sequence

from .errors import IsolatedPivot, NotANut
from .graph import Graph, bits
from .kernel import kernel_basis, matvec, nullity, primitive


class Classification(enum.Enum):
    NON_SINGULAR = "NonSingular"
    SINGULAR_NON_CORE = "SingularNonCore"
    CORE_NON_NUT = "CoreNonNut"
    NUT = "Nut"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class NutReport:
    nullity: int
    classification: Classification
    kernel_witness: tuple[int, ...] | None = None

    @property
    def is_nut(self) -> bool:
        return self.classification is Classification.NUT


_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
           73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151)


def _combine(basis: Sequence[Sequence[int]], weights: Sequence[int]) -> list[int]:
    n = len(basis[0])
    return [sum(w * b[i] for w, b in zip(weights, basis)) for i in range(n)]


def core_witness(basis: Sequence[Sequence[int]], retries: int = 16) -> tuple[int, ...] | None:
    """An all-nonzero vector in the span of ``basis``, or None if none exists.

    The span avoids every coordinate hyperplane unless some coordinate is zero
    on the whole basis.  Otherwise a combination with distinct prime weights
    almost always works; a few shifted prime sets are tried before falling
    back to a search over small integer coefficients, which must terminate
    because finitely many hyperplanes cannot cover the integer lattice.
    """
    if not basis:
        return None
    n = len(basis[0])
    if any(all(b[i] == 0 for b in basis) for i in range(n)):
        return None
    k = len(basis)
    for shift in range(retries):
        weights = [_PRIMES[(shift + j) % len(_PRIMES)] * (1 if j % 2 == 0 else -1) for j in range(k)]
        v = _combine(basis, weights)
        if all(v):
            return primitive(v)
    bound = 1
    while True:
        for weights in itertools.product(range(-bound, bound + 1), repeat=k):
            if max(abs(w) for w in weights) != bound:
                continue
            v = _combine(basis, weights)
            if all(v):
                return primitive(v)
        bound += 1


@lru_cache(maxsize=4096)
def classify(g: Graph) -> NutReport:
    basis = kernel_basis(g).vectors
    eta = len(basis)
    if eta == 0:
        return NutReport(0, Classification.NON_SINGULAR)
    if eta == 1:
        x = basis[0]
        if all(x):
            # K1 has a nonzero kernel vector but is excluded as a trivial nut
            cls = Classification.NUT if g.n > 1 else Classification.CORE_NON_NUT
            return NutReport(1, cls, x)
        return NutReport(1, Classification.SINGULAR_NON_CORE, x)
    w = core_witness(basis)
    if w is None:
        return NutReport(eta, Classification.SINGULAR_NON_CORE, basis[0])
    return NutReport(eta, Classification.CORE_NON_NUT, w)


def is_nut(g: Graph) -> bool:
    return classify(g).is_nut


# Fowler construction ---------------------------------------------------------


@dataclass(frozen=True)
class FowlerExtension:
    base: Graph
    pivot: int
    result: Graph
    layer_q: tuple[int, ...]
    layer_p: tuple[int, ...]
    matching: tuple[tuple[int, int], ...]  # (q_i, p_i), the pairs left non-adjacent
    neighbors: tuple[int, ...]  # u_i, the former neighbours of the pivot
    vector: tuple[int, ...]  # transferred kernel vector of the result


def fowler_graph(g: Graph, v: int) -> tuple[Graph, list[int], list[int], list[int]]:
    """Build ``F(g, v)`` without any nut checks.

    With ``u_1 < ... < u_d`` the neighbours of ``v``, the new vertices are
    ``q_i = n + i`` and ``p_i = n + d + i``.
    """
    n = g.n
    us = g.neighbors(v)
    d = len(us)
    qs = [n + i for i in range(d)]
    ps = [n + d + i for i in range(d)]
    rows = list(g.adj) + [0] * (2 * d)
    for i, u in enumerate(us):
        rows[v] &= ~(1 << u)
        rows[u] &= ~(1 << v)
        rows[u] |= 1 << ps[i]
        rows[ps[i]] |= 1 << u
        rows[v] |= 1 << qs[i]
        rows[qs[i]] |= 1 << v
        for j in range(d):
            if i != j:
                rows[qs[i]] |= 1 << ps[j]
                rows[ps[j]] |= 1 << qs[i]
    return Graph(n + 2 * d, tuple(rows)), us, qs, ps


def transfer_vector(x: Sequence[int], v: int, us: Sequence[int]) -> list[int]:
    """Kernel vector of ``F(G, v)`` built from a kernel vector ``x`` of ``G``."""
    d = len(us)
    y = list(x)
    y[v] = (1 - d) * x[v]
    y += [x[u] for u in us]
    y += [x[v]] * d
    return y


def fowler_extend(g: Graph, v: int) -> FowlerExtension:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} outside 0..{g.n - 1}")
    if g.degree(v) == 0:
        raise IsolatedPivot(f"vertex {v} has no neighbours")
    rep = classify(g)
    if not rep.is_nut:
        raise NotANut(f"base graph is {rep.classification}, not a nut")
    h, us, qs, ps = fowler_graph(g, v)
    y = transfer_vector(rep.kernel_witness, v, us)
    if any(matvec(h, y)):
        raise ArithmeticError("transferred vector is not in the kernel")
    # y has no zero entry (deg(v) >= 2 in any nut), so nullity 1 makes h a nut
    if not all(y) or nullity(h) != 1:
        raise ArithmeticError("extension failed to be a nut")
    return FowlerExtension(
        base=g,
        pivot=v,
        result=h,
        layer_q=tuple(qs),
        layer_p=tuple(ps),
        matching=tuple(zip(qs, ps)),
        neighbors=tuple(us),
        vector=primitive(y),
    )


def _decompose_at(h: Graph, w: int) -> tuple[Graph, int] | None:
    """Undo the construction at pivot ``w`` if the local pattern is there."""
    adj = h.adj
    qmask = adj[w]
    qs = list(bits(qmask))
    d = len(qs)
    if d < 2 or h.n - 2 * d < 1:
        return None
    pmask = 0
    for q in qs:
        if adj[q] & qmask or adj[q].bit_count() != d:
            return None
        pmask |= adj[q]
    pmask &= ~(1 << w)
    if pmask.bit_count() != d:
        return None
    ps = list(bits(pmask))
    used = 0
    partner_of: dict[int, int] = {}
    us: dict[int, int] = {}
    for p in ps:
        row = adj[p]
        if (row & qmask).bit_count() != d - 1 or row.bit_count() != d:
            return None
        q = (qmask & ~row).bit_length() - 1
        partner_of[q] = p
        outside = row & ~qmask
        if outside == 0 or outside & (outside - 1):
            return None
        u = outside.bit_length() - 1
        if u == w or pmask >> u & 1:
            return None
        if used >> u & 1:
            return None
        used |= 1 << u
        us[p] = u
    if len(partner_of) != d:
        return None
    removed = qmask | pmask
    keep = [x for x in range(h.n) if not removed >> x & 1]
    index = {x: i for i, x in enumerate(keep)}
    rows = []
    for x in keep:
        r = 0
        for y in bits(adj[x] & ~removed):
            r |= 1 << index[y]
        rows.append(r)
    wi = index[w]
    for u in us.values():
        ui = index[u]
        rows[wi] |= 1 << ui
        rows[ui] |= 1 << wi
    return Graph(len(keep), tuple(rows)), wi


def fowler_decompositions(h: Graph):
    """Yield every ``(base, pivot)`` with a nut base, pivots in increasing order."""
    for w in range(h.n):
        found = _decompose_at(h, w)
        if found is not None and is_nut(found[0]):
            yield found


def fowler_detect(h: Graph) -> tuple[Graph, int] | None:
    """First ``(G, v)`` with ``F(G, v)`` isomorphic to ``h`` and ``G`` a nut, else None."""
    return next(fowler_decompositions(h), None)


class PairKind(enum.Enum):
    NOT_REALISABLE = "NotRealisable"
    SEED_PAIR = "SeedPair"
    C_PAIR = "CPair"

    def __str__(self) -> str:
        return self.value


def classify_pair(n: int, d: int, realizable: Collection[int]) -> PairKind:
    """Pair-level C/seed status given the realizable orders ``realizable`` for degree ``d``."""
    if n not in realizable:
        return PairKind.NOT_REALISABLE
    if n - 2 * d in realizable:
        return PairKind.C_PAIR
    return PairKind.SEED_PAIR
