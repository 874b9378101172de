"""Canonical labelling, isomorphism testing and automorphism generators.

Individualisation-refinement search in the style of nauty: ordered
partitions are refined to equitable ones, the first non-singleton cell is
split by individualising each of its vertices in turn, and every discrete
leaf gives a labelling.  The canonical labelling is the leaf maximising
``(refinement trace, relabelled adjacency rows)``.  Leaves that tie with the
first or best leaf expose automorphisms; children lying in one orbit of the
automorphisms found so far that fix the current path are explored once.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, bits, to_graph6


@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes
    labelling: tuple[int, ...]  # labelling[v] = canonical label of vertex v
    aut_generators: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def graph6(self) -> str:
        return self.certificate.decode("ascii")


def _refine(adj: tuple[int, ...], cells: list[int], active: list[int]) -> tuple[list[int], tuple[int, ...]]:
    """Refine ``cells`` until equitable; ``active`` are the splitter masks to start from."""
    cells = list(cells)
    pending = set(active)
    trace: list[int] = []
    while pending:
        # deterministic choice: the earliest pending cell in the current order
        w = next(c for c in cells if c in pending)
        pending.discard(w)
        out: list[int] = []
        for pos, x in enumerate(cells):
            if x & (x - 1) == 0:
                out.append(x)
                continue
            groups: dict[int, int] = {}
            for v in bits(x):
                k = (adj[v] & w).bit_count()
                groups[k] = groups.get(k, 0) | (1 << v)
            if len(groups) == 1:
                out.append(x)
                continue
            keys = sorted(groups)
            parts = [groups[k] for k in keys]
            trace += [len(out), len(keys)]
            for k in keys:
                trace += [k, groups[k].bit_count()]
            out.extend(parts)
            if x in pending:
                pending.discard(x)
            pending.update(parts)
        cells = out
    trace.append(-1)
    trace += [c.bit_count() for c in cells]
    return cells, tuple(trace)


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adj
        self.n = g.n
        self.first = None  # (path, traces, cert, lab)
        self.best = None
        self.gens: list[tuple[int, ...]] = []

    def _leaf(self, cells):
        lab = [c.bit_length() - 1 for c in cells]  # lab[position] = vertex
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = []
        for v in lab:
            r = 0
            for w in bits(self.adj[v]):
                r |= 1 << pos[w]
            rows.append(r)
        return tuple(rows), lab

    def _add_gen(self, lab_from, lab_to):
        perm = [0] * self.n
        for a, b in zip(lab_from, lab_to):
            perm[a] = b
        perm = tuple(perm)
        if any(perm[i] != i for i in range(self.n)) and perm not in self.gens:
            self.gens.append(perm)

    def _stabiliser_roots(self, fixed) -> list[int]:
        """Orbit representatives under the found generators that fix ``fixed`` pointwise."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in self.gens:
            if any(p[x] != x for x in fixed):
                continue
            for x in range(self.n):
                a, b = find(x), find(p[x])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(x) for x in range(self.n)]

    def run(self):
        cells, trace = _refine(self.adj, [(1 << self.n) - 1], [(1 << self.n) - 1])
        self._visit(cells, [trace], [])

    def _visit(self, cells, traces, path):
        depth = len(path)
        first, best = self.first, self.best
        eq_first = first is not None and first[1][: depth + 1] == traces
        if best is not None:
            bt = best[1][: depth + 1]
            if traces < bt and not eq_first:
                return None
        target = next((c for c in cells if c & (c - 1)), None)
        if target is None:
            cert, lab = self._leaf(cells)
            key = (traces, cert)
            if first is None:
                self.first = self.best = (list(path), traces, cert, lab)
                return None
            if first[1] == traces and first[2] == cert:
                self._add_gen(first[3], lab)
                common = 0
                while common < depth and path[common] == first[0][common]:
                    common += 1
                return common
            bkey = (best[1], best[2])
            if key > bkey:
                self.best = (list(path), traces, cert, lab)
            elif key == bkey:
                self._add_gen(best[3], lab)
            return None
        idx = cells.index(target)
        explored: set[int] = set()
        roots = None
        seen_gens = 0
        for v in bits(target):
            # children in one orbit of the path stabiliser have isomorphic subtrees
            if explored and self.gens:
                if roots is None or seen_gens != len(self.gens):
                    roots = self._stabiliser_roots(path)
                    seen_gens = len(self.gens)
                if roots[v] in {roots[u] for u in explored}:
                    continue
            explored.add(v)
            vb = 1 << v
            child = cells[:idx] + [vb, target & ~vb] + cells[idx + 1:]
            child, trace = _refine(self.adj, child, [vb])
            jump = self._visit(child, traces + [trace], path + [v])
            if jump is not None and jump < depth:
                return jump
        return None


def canonical_form(g: Graph) -> CanonicalForm:
    """Relabelling-invariant certificate plus automorphism group generators."""
    s = _Search(g)
    s.run()
    _, _, _, lab = s.best
    labelling = [0] * g.n
    for i, v in enumerate(lab):
        labelling[v] = i
    cert = to_graph6(g.relabel(labelling)).encode("ascii")
    return CanonicalForm(cert, tuple(labelling), tuple(s.gens))


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_form(g).labelling)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges:
        return False
    if sorted(a.degree_profile().degrees) != sorted(b.degree_profile().degrees):
        return False
    return canonical_form(a).certificate == canonical_form(b).certificate


def automorphism_generators(g: Graph) -> tuple[tuple[int, ...], ...]:
    return canonical_form(g).aut_generators


def orbits(n: int, generators) -> list[list[int]]:
    """Orbits of the group generated by ``generators`` on ``0..n-1`` (union-find)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in generators:
        for x in range(n):
            a, b = find(x), find(p[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())
