"""Isomorph-free enumeration of d-regular graphs.

The heavy lifting is the compiled orderly search in :mod:`nutkit._orderly`:
adjacency rows are filled top to bottom and a partial graph is kept only when
its completed rows are lexicographically maximal over all relabellings, so
every isomorphism class is produced exactly once without a seen-set.

Work is split at a fixed row: a first pass lists the partial graphs at that
row, and each of them becomes an independent job.  Jobs are pure functions
of their prefix, so results are concatenated in prefix order and the output
is identical for every worker count.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, TextIO

import numpy as np

from . import _orderly
from .canon import CanonicalForm, are_isomorphic, canonical_form  # noqa: F401  (re-exported)
from .errors import BudgetExceeded, InadmissibleSpec
from .graph import Graph, to_graph6
from .nut import is_nut

MAX_ORDER = _orderly.MAX_ORDER


@dataclass(frozen=True)
class GenSpec:
    n: int
    d: int
    min_girth: int | None = None
    connected_only: bool = False
    complement_mode: bool | None = None  # None: decide automatically

    def __post_init__(self) -> None:
        check_admissible(self.n, self.d)
        if self.min_girth is not None and self.min_girth < 3:
            raise InadmissibleSpec(f"girth bound must be >= 3, got {self.min_girth}")

    @property
    def use_complement(self) -> bool:
        if self.complement_mode is not None:
            return self.complement_mode
        # complements of dense graphs almost always contain triangles, so a
        # girth bound keeps the direct search
        if self.min_girth is not None and self.min_girth > 3:
            return False
        return 2 * self.d > self.n - 1


def is_admissible(n: int, d: int) -> bool:
    return n >= 1 and 0 <= d < n and (n * d) % 2 == 0


def check_admissible(n: int, d: int) -> None:
    if not is_admissible(n, d):
        raise InadmissibleSpec(f"no {d}-regular graph on {n} vertices exists")
    if n > MAX_ORDER:
        raise InadmissibleSpec(f"the enumerator handles at most {MAX_ORDER} vertices")


def girth_at_least(g: Graph, girth: int) -> bool:
    """True iff ``g`` has no cycle shorter than ``girth`` (BFS from every vertex)."""
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for x in queue:
            if 2 * dist[x] + 1 >= girth:
                break
            for y in g.neighbors(x):
                if y == parent[x]:
                    continue
                if y in dist:
                    if dist[x] + dist[y] + 1 < girth:
                        return False
                    continue
                dist[y] = dist[x] + 1
                parent[y] = x
                queue.append(y)
    return True


@dataclass(frozen=True)
class _Job:
    n: int
    d: int  # degree actually generated (before complementing)
    prefix: tuple[int, ...]
    start: int
    connected: bool
    girth: int
    complement: bool
    nut_only: bool
    store: bool


def _rows_to_graph(n: int, rows) -> Graph:
    return Graph(n, tuple(int(r) for r in rows))


def _run_job(job: _Job) -> tuple[int, list[tuple[int, ...]]]:
    """Return ``(count, rows)`` for one subtree; rows only when stored."""
    adj0 = np.array(job.prefix, dtype=np.uint64)
    filt = _orderly.FILTER_NUT if job.nut_only else _orderly.FILTER_NONE
    store = job.store or job.nut_only
    out, count, _, _ = _orderly.search(
        job.n, job.d, adj0, job.start, job.n + 1, job.connected, job.girth,
        job.complement, filt, store, 64,
    )
    if not store:
        return count, []
    rows = [tuple(int(r) for r in out[i]) for i in range(count)]
    if job.nut_only:
        # the compiled filter is fast but word-sized; every survivor (and any
        # graph it deferred) is confirmed with exact arithmetic
        rows = [r for r in rows if is_nut(Graph(job.n, r))]
    return len(rows), rows if job.store else []


def _prefixes(n: int, d: int, split: int, connected: bool, girth: int, complement: bool) -> list[tuple[int, ...]]:
    out, count, _, _ = _orderly.search(
        n, d, np.zeros(n, np.uint64), 0, split, connected, girth, complement,
        _orderly.FILTER_NONE, True, 1024,
    )
    return [tuple(int(r) for r in out[i]) for i in range(count)]


def plan_jobs(spec: GenSpec, nut_only: bool = False, store: bool = True, target: int = 64) -> list[_Job]:
    """Split the search at the shallowest row giving at least ``target`` jobs."""
    n = spec.n
    comp = spec.use_complement
    d = n - 1 - spec.d if comp else spec.d
    girth = 3 if comp or spec.min_girth is None else spec.min_girth
    common = dict(n=n, d=d, connected=spec.connected_only, girth=girth,
                  complement=comp, nut_only=nut_only, store=store)
    if n <= 5:
        return [_Job(prefix=(0,) * n, start=0, **common)]
    split = 2
    prefixes = _prefixes(n, d, split, spec.connected_only, girth, comp)
    while len(prefixes) < target and split < n - 3:
        split += 1
        prefixes = _prefixes(n, d, split, spec.connected_only, girth, comp)
    return [_Job(prefix=p, start=split, **common) for p in prefixes]


def default_workers() -> int:
    raw = os.environ.get("NUTKIT_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _results(jobs: list[_Job], workers: int, budget: float | None) -> Iterator[tuple[int, list]]:
    t0 = time.monotonic()

    def check() -> None:
        if budget is not None and time.monotonic() - t0 > budget:
            raise BudgetExceeded(f"enumeration exceeded its budget of {budget:g} s")

    if workers <= 1 or len(jobs) <= 1:
        for job in jobs:
            check()
            yield _run_job(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        try:
            for res in pool.map(_run_job, jobs, chunksize=max(1, len(jobs) // (8 * workers))):
                check()
                yield res
        except BudgetExceeded:
            pool.shutdown(wait=False, cancel_futures=True)
            raise


def _post_filter(spec: GenSpec) -> Callable[[Graph], bool] | None:
    # a girth bound in complement mode is not enforced by the compiled search
    if spec.use_complement and spec.min_girth is not None and spec.min_girth > 3:
        return lambda g: girth_at_least(g, spec.min_girth)
    return None


def iter_graphs(spec: GenSpec, nut_only: bool = False, workers: int = 1,
                budget: float | None = None) -> Iterator[Graph]:
    """Yield one graph per isomorphism class, in a worker-independent order."""
    keep = _post_filter(spec)
    for _, rows in _results(plan_jobs(spec, nut_only), workers, budget):
        for r in rows:
            g = Graph(spec.n, r)
            if keep is None or keep(g):
                yield g


def enumerate_regular(spec: GenSpec, visit: Callable[[Graph], object] | None = None,
                      nut_only: bool = False, workers: int = 1,
                      budget: float | None = None) -> int:
    """Visit every class matching ``spec`` once; return how many were visited.

    ``visit`` is called from the calling process only, so it need not be
    thread safe.  Without ``visit`` graphs are counted, not materialised.
    """
    if visit is None and _post_filter(spec) is None:
        return count(spec, nut_only=nut_only, workers=workers, budget=budget)
    total = 0
    for g in iter_graphs(spec, nut_only, workers, budget):
        if visit is not None:
            visit(g)
        total += 1
    return total


enumerate = enumerate_regular  # noqa: A001  (public name of the operation)


def count(spec: GenSpec, nut_only: bool = False, workers: int = 1,
          budget: float | None = None) -> int:
    if _post_filter(spec) is not None:
        return sum(1 for _ in iter_graphs(spec, nut_only, workers, budget))
    jobs = plan_jobs(spec, nut_only, store=False)
    return sum(c for c, _ in _results(jobs, workers, budget))


def count_nuts(n: int, d: int, workers: int = 1, budget: float | None = None) -> int:
    """Number of isomorphism classes of d-regular nut graphs of order n."""
    return count(GenSpec(n, d), nut_only=True, workers=workers, budget=budget)


def write_graph6(spec: GenSpec, stream: TextIO, nut_only: bool = False, workers: int = 1,
                 budget: float | None = None) -> int:
    total = 0
    for g in iter_graphs(spec, nut_only, workers, budget):
        stream.write(to_graph6(g) + "\n")
        total += 1
    return total
