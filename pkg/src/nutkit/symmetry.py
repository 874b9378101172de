"""Vertex-transitivity and the necessary conditions for vertex-transitive nuts."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .canon import automorphism_generators, orbits
from .errors import NotPlusMinusOne, OddDegree
from .graph import Graph, make_complete_minus_matching
from .kernel import matvec
from .nut import NutReport, classify


def vertex_orbits(g: Graph) -> list[list[int]]:
    return orbits(g.n, automorphism_generators(g))


def is_vertex_transitive(g: Graph) -> bool:
    if not g.is_regular():
        return False
    return len(vertex_orbits(g)) == 1


class VTVerdict(enum.Enum):
    PASS_MOD0 = "PassMod0"
    PASS_MOD2 = "PassMod2"
    FAIL_ODD_DEGREE = "FailOddDegree"
    FAIL_PARITY = "FailParity"
    FAIL_ORDER_BOUND = "FailOrderBound"

    def __str__(self) -> str:
        return self.value

    @property
    def passed(self) -> bool:
        return self in (VTVerdict.PASS_MOD0, VTVerdict.PASS_MOD2)


@dataclass(frozen=True)
class VTConditions:
    n: int
    d: int
    verdict: VTVerdict

    @property
    def passed(self) -> bool:
        return self.verdict.passed

    def describe(self) -> str:
        v = self.verdict
        if v is VTVerdict.PASS_MOD0:
            return f"pass: d = 0 mod 4, n even, n >= d+4 = {self.d + 4}"
        if v is VTVerdict.PASS_MOD2:
            return f"pass: d = 2 mod 4, n = 0 mod 4, n >= d+6 = {self.d + 6}"
        if v is VTVerdict.FAIL_ODD_DEGREE:
            return "fail: d is odd"
        if v is VTVerdict.FAIL_PARITY:
            return "fail: n is odd" if self.d % 4 == 0 else "fail: n != 0 mod 4"
        bound = self.d + 4 if self.d % 4 == 0 else self.d + 6
        return f"fail: n < {bound}"


def check_vt_conditions(n: int, d: int) -> VTConditions:
    """Necessary conditions on ``(n, d)`` for a vertex-transitive d-regular nut."""
    if d % 2:
        verdict = VTVerdict.FAIL_ODD_DEGREE
    elif d % 4 == 0:
        if n % 2:
            verdict = VTVerdict.FAIL_PARITY
        elif n < d + 4:
            verdict = VTVerdict.FAIL_ORDER_BOUND
        else:
            verdict = VTVerdict.PASS_MOD0
    else:
        if n % 4:
            verdict = VTVerdict.FAIL_PARITY
        elif n < d + 6:
            verdict = VTVerdict.FAIL_ORDER_BOUND
        else:
            verdict = VTVerdict.PASS_MOD2
    return VTConditions(n, d, verdict)


@dataclass(frozen=True)
class SignPartition:
    plus_set: tuple[int, ...]
    minus_set: tuple[int, ...]
    h_plus: Graph
    balanced_neighborhoods: bool  # each neighbourhood has as many + as - entries


def sign_partition(g: Graph, report: NutReport | None = None) -> SignPartition:
    """Split the vertices by the sign of a +-1 kernel vector of a nut."""
    if report is None:
        report = classify(g)
    x = report.kernel_witness
    if not report.is_nut or x is None or any(abs(e) != 1 for e in x):
        raise NotPlusMinusOne("kernel vector is not a +-1 vector of a nut graph")
    plus = tuple(v for v in range(g.n) if x[v] == 1)
    minus = tuple(v for v in range(g.n) if x[v] == -1)
    # with +-1 entries, A x = 0 says every neighbourhood is evenly split
    balanced = not any(matvec(g, x))
    return SignPartition(plus, minus, g.induced(plus), balanced)


def cocktail_counterexample(d: int) -> tuple[Graph, tuple[int, ...]]:
    """``K_{d+2}`` minus a perfect matching with a kernel vector that has zeros."""
    if d % 2 or d < 2:
        raise OddDegree(f"need an even degree >= 2, got {d}")
    h = make_complete_minus_matching(d + 2)
    x = [0] * (d + 2)
    x[0], x[d + 1] = 1, -1
    if any(matvec(h, x)):
        raise ArithmeticError("counterexample vector is not in the kernel")
    if classify(h).is_nut:
        raise ArithmeticError("cocktail-party graph unexpectedly a nut")
    return h, tuple(x)
