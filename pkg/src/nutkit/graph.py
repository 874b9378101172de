"""Immutable simple graphs stored as per-vertex bitsets.

Row ``i`` of :attr:`Graph.adj` is an ``int`` whose bit ``j`` is set iff the
edge ``{i, j}`` is present.  Vertices are labelled ``0..n-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    AsymmetricList,
    BadHeader,
    DuplicateNeighbor,
    InvalidGraph,
    KTooSmall,
    LengthMismatch,
    MalformedList,
    OddOrder,
    TrailingBits,
    VertexOutOfRange,
)

# One machine word per row in the compiled enumerator.  Python-side graphs
# are not limited by it (rows are arbitrary precision ints), which is what
# lets repeated Fowler extensions of the largest seeds go past 64 vertices.
WORD_BITS = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    is_regular: bool
    d: int | None


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        validate(self.n, self.adj)

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraph(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << i) for i in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    # queries ------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def degree_profile(self) -> DegreeProfile:
        degrees = tuple(r.bit_count() for r in self.adj)
        regular = len(set(degrees)) == 1
        return DegreeProfile(degrees, regular, degrees[0] if regular else None)

    def is_regular(self, d: int | None = None) -> bool:
        prof = self.degree_profile()
        return prof.is_regular and (d is None or prof.d == d)

    def adjacency_matrix(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.n)] for r in self.adj]

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by least vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            reach = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~reach
                reach |= frontier
            seen |= reach
            comps.append(reach)
        return comps

    # transformations ----------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v, r in enumerate(self.adj):
            img = 0
            for w in bits(r):
                img |= 1 << perm[w]
            rows[perm[v]] = img
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph on ``vertices``, relabelled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for w in bits(self.adj[v]):
                i = index.get(w)
                if i is not None:
                    r |= 1 << i
            rows.append(r)
        return Graph(len(vertices), tuple(rows))

    def to_adjlist(self) -> str:
        groups = "; ".join(
            f"{v}: " + " ".join(map(str, self.neighbors(v))) if self.adj[v] else f"{v}:"
            for v in range(self.n)
        )
        return "{" + groups + "}"

    def __str__(self) -> str:
        return to_graph6(self)


def validate(n: int, adj: Sequence[int]) -> None:
    """Check the bitset invariants shared by every constructor."""
    if n < 1:
        raise InvalidGraph("a graph needs at least one vertex")
    if len(adj) != n:
        raise InvalidGraph(f"expected {n} rows, got {len(adj)}")
    limit = 1 << n
    for i, r in enumerate(adj):
        if r < 0 or r >= limit:
            raise InvalidGraph(f"row {i} has bits outside 0..{n - 1}")
        if r >> i & 1:
            raise InvalidGraph(f"loop at vertex {i}")
        for j in bits(r):
            if not adj[j] >> i & 1:
                raise InvalidGraph(f"edge {i}-{j} is not symmetric")


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~r & ~(1 << i) for i, r in enumerate(g.adj)))


# named families ---------------------------------------------------------------


def make_antiprism(k: int) -> Graph:
    """Two k-cycles ``0..k-1`` and ``k..2k-1`` joined by a zig-zag."""
    if k < 3:
        raise KTooSmall(f"antiprism needs ring size >= 3, got {k}")
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(i, j), (k + i, k + j), (i, k + i), (i, k + j)]
    return Graph.from_edges(2 * k, edges)


def make_complete_minus_matching(m: int) -> Graph:
    """K_m without the perfect matching ``{i, m-1-i}`` (the cocktail-party graph)."""
    if m % 2 or m < 2:
        raise OddOrder(f"need an even order >= 2, got {m}")
    full = (1 << m) - 1
    return Graph(m, tuple(full & ~(1 << i) & ~(1 << (m - 1 - i)) for i in range(m)))


# appendix adjacency lists -----------------------------------------------------

_GROUP_RE = re.compile(r"^\s*(-?\d+)\s*:((?:\s*-?\d+)*)\s*$")


def parse_appendix_adjlist(text: str) -> Graph:
    """Parse ``{0: 1 2; 1: 0 2; 2: 0 1}``; groups may also be split by newlines."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise MalformedList("adjacency list must be wrapped in braces")
    body = body[1:-1]
    chunks = [c for c in re.split(r"[;\n]", body) if c.strip()]
    if not chunks:
        raise MalformedList("adjacency list has no groups")
    lists: dict[int, list[int]] = {}
    for chunk in chunks:
        m = _GROUP_RE.match(chunk)
        if m is None:
            raise MalformedList(f"cannot parse group {chunk.strip()!r}")
        v = int(m.group(1))
        if v in lists:
            raise MalformedList(f"vertex {v} has two groups")
        lists[v] = [int(t) for t in m.group(2).split()]
    n = len(lists)
    if sorted(lists) != list(range(n)):
        raise VertexOutOfRange(f"group labels must be 0..{n - 1}")
    rows = [0] * n
    for v, nbrs in lists.items():
        for w in nbrs:
            if w < 0:
                raise VertexOutOfRange(f"negative neighbour {w} of {v}")
            if w >= n:
                # the edge appears in one group only: w has no group to list v back
                raise AsymmetricList(f"{v} lists {w} but there is no group for {w}")
            if w == v:
                raise MalformedList(f"loop at vertex {v}")
            if rows[v] >> w & 1:
                raise DuplicateNeighbor(f"{w} listed twice for vertex {v}")
            rows[v] |= 1 << w
    for v in range(n):
        for w in bits(rows[v]):
            if not rows[w] >> v & 1:
                raise AsymmetricList(f"{v} lists {w} but {w} does not list {v}")
    return Graph(n, tuple(rows))


# graph6 -----------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def to_graph6(g: Graph) -> str:
    out = []
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return _encode_n(g.n) + "".join(out)


def parse_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise BadHeader("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise BadHeader("graph6 characters must lie in '?'..'~'")
    vals = [ord(c) - 63 for c in s]
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise BadHeader("unsupported graph6 size header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n == 0:
        raise BadHeader("graph6 order 0 is not a valid graph here")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise LengthMismatch(f"order {n} needs {(need + 5) // 6} data bytes, got {len(body)}")
    pad = len(body) * 6 - need
    if pad and body[-1] & ((1 << pad) - 1):
        raise TrailingBits("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Read either input format; ``auto`` picks the adjacency list on a leading brace."""
    t = text.strip()
    if fmt == "adjlist" or (fmt == "auto" and t.startswith("{")):
        return parse_appendix_adjlist(t)
    return parse_graph6(t)
