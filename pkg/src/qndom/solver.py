"""Exact minimum dominating sets of Q_n for small n.

``solve_min_dominating`` is a branch-and-bound over Python-int bitsets (one
bit per vertex of Q_n).  Each node picks the undominated vertex with the
fewest still-allowed dominators and branches over those dominators in
order, forbidding each tried candidate in the later siblings, so no set is
visited twice.  A branch is cut once ``chosen + ceil(undominated / (n+1))``
reaches the incumbent.

With symmetry on, the vertex (0) is put in D up front (any dominating set
can be translated to contain it) and the second choice is reduced to one
candidate per orbit under the coordinate permutations fixing (0) and the
branching vertex.

``naive_min_dominating`` enumerates subsets by size and is kept as an
independent oracle for n <= 5.
"""
from __future__ import annotations

import itertools
import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bounds import sphere_covering_bound
from .constructions import greedy_dominating_set
from .domination import DominatingSet

SOLVER_MAX_DIM = 8
NAIVE_MAX_DIM = 5


@dataclass(frozen=True)
class SearchConfig:
    upper_bound_seed: int | None = None
    node_limit: int | None = None
    time_limit: float | None = None  # seconds
    symmetry: bool = True
    threads: int = 1

    def __post_init__(self):
        for name in ("upper_bound_seed", "node_limit", "time_limit"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise ValueError(f"{name} must be positive, got {val}")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")


@dataclass(frozen=True)
class SearchResult:
    optimum: int  # size of the witness; gamma(Q_n) when proven_optimal
    witness: DominatingSet
    proven_optimal: bool
    nodes_explored: int


class _Abort(Exception):
    pass


def neighborhood_bits(n: int) -> list[int]:
    """N[v] as an int bitset over the 2^n vertices, for every v."""
    out = []
    for v in range(1 << n):
        m = 1 << v
        for b in range(n):
            m |= 1 << (v ^ (1 << b))
        out.append(m)
    return out


def _bit_indices(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class _Search:
    def __init__(self, n: int, best: int, floor: int, deadline: float | None,
                 node_limit: int | None, shared=None):
        self.n = n
        self.nbr = neighborhood_bits(n)
        self.full = (1 << (1 << n)) - 1
        self.best = best
        self.best_set: list[int] | None = None
        self.nodes = 0
        self.deadline = deadline
        self.node_limit = node_limit
        self.shared = shared
        self.floor = floor

    def _tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Abort
        if self.nodes & 1023 == 0:
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise _Abort
            if self.shared is not None and self.shared.value < self.best:
                self.best = self.shared.value

    def _record(self, chosen: list[int]) -> None:
        self.best = len(chosen)
        self.best_set = list(chosen)
        if self.shared is not None:
            with self.shared.get_lock():
                if self.shared.value > self.best:
                    self.shared.value = self.best

    def branch_point(self, dom: int, forb: int) -> tuple[int, list[int]]:
        """Fail-first vertex and its allowed dominators, best gain first."""
        avail = self.full & ~forb
        undom = self.full & ~dom
        best_x, best_c = -1, self.n + 2
        for x in _bit_indices(undom):
            c = (self.nbr[x] & avail).bit_count()
            if c < best_c:
                best_x, best_c = x, c
                if c <= 1:
                    break
        cands = sorted(
            _bit_indices(self.nbr[best_x] & avail),
            key=lambda y: (-(self.nbr[y] & undom).bit_count(), y),
        )
        return best_x, cands

    def bounded(self, dom: int, depth: int) -> bool:
        left = self.best - 1 - depth  # picks still allowed while beating the incumbent
        undom = (self.full & ~dom).bit_count()
        return left <= 0 or undom > left * (self.n + 1)

    def run(self, dom: int, chosen: list[int], forb: int) -> None:
        self._tick()
        if dom == self.full:
            if len(chosen) < self.best:
                self._record(chosen)
            return
        if self.bounded(dom, len(chosen)):
            return
        _, cands = self.branch_point(dom, forb)
        for y in cands:
            chosen.append(y)
            self.run(dom | self.nbr[y], chosen, forb)
            chosen.pop()
            if self.best <= self.floor:
                return
            forb |= 1 << y

    def subtrees(self, symmetry: bool) -> list[tuple[int, list[int], int]]:
        """Root split into independent (dom, chosen, forbidden) subproblems."""
        if not symmetry:
            dom, chosen = 0, []
        else:
            dom, chosen = self.nbr[0], [0]
            if dom == self.full:
                return [(dom, chosen, 0)]
        x, cands = self.branch_point(dom, 0)
        seen = set()
        out = []
        forb = 0
        for y in cands:
            # orbit of y under permutations fixing (0) and x
            key = ((y & x).bit_count(), (y & ~x).bit_count())
            if not symmetry or key not in seen:
                seen.add(key)
                out.append((dom | self.nbr[y], chosen + [y], forb))
            forb |= 1 << y
        return out


_shared_best = None


def _init_worker(shared) -> None:
    global _shared_best
    _shared_best = shared


def _run_subtree(args):
    n, best, floor, deadline, node_limit, task = args
    s = _Search(n, min(best, _shared_best.value), floor, deadline, node_limit, _shared_best)
    aborted = False
    try:
        s.run(*task)
    except _Abort:
        aborted = True
    return s.best_set, s.nodes, aborted


def search_below(n: int, bound: int, floor: int, config: SearchConfig):
    """Look for a smallest dominating set below ``bound``; returns (set or None, nodes, aborted).

    The search stops early once it reaches ``floor``, a proven lower bound.
    """
    deadline = time.monotonic() + config.time_limit if config.time_limit else None
    root = _Search(n, bound, floor, deadline, config.node_limit)
    tasks = root.subtrees(config.symmetry)
    if config.threads == 1 or len(tasks) == 1:
        aborted = False
        try:
            for task in tasks:
                root.run(*task)
                if root.best <= root.floor:
                    break
        except _Abort:
            aborted = True
        return root.best_set, root.nodes, aborted
    shared = mp.Value("i", bound)
    ctx = mp.get_context("fork")
    with ProcessPoolExecutor(config.threads, mp_context=ctx, initializer=_init_worker,
                             initargs=(shared,)) as pool:
        results = list(pool.map(_run_subtree,
                                [(n, bound, floor, deadline, config.node_limit, t) for t in tasks]))
    found = [r[0] for r in results if r[0] is not None]
    best = min(found, key=lambda s: (len(s), sorted(s))) if found else None
    return best, sum(r[1] for r in results), any(r[2] for r in results)


def solve_min_dominating(n: int, config: SearchConfig | None = None) -> SearchResult:
    config = config or SearchConfig()
    if not 1 <= n <= SOLVER_MAX_DIM:
        raise ValueError(f"solver supports 1 <= n <= {SOLVER_MAX_DIM}, got {n}")
    incumbent = sorted(greedy_dominating_set(n))
    floor = sphere_covering_bound(n).ceiling
    nodes, aborted = 0, False
    seed = config.upper_bound_seed
    if len(incumbent) > floor and seed is not None and seed < len(incumbent) - 1:
        # try to land at or below the seed first; a complete miss raises the floor
        found, nodes, aborted = search_below(n, seed + 1, floor, config)
        if found is not None:
            incumbent = sorted(found)
        elif not aborted:
            floor = max(floor, seed + 1)
    else:
        found = None
    if len(incumbent) > floor and found is None and not aborted:
        found, used, aborted = search_below(n, len(incumbent), floor, config)
        nodes += used
        if found is not None:
            incumbent = sorted(found)
    return SearchResult(
        len(incumbent), DominatingSet.from_masks(n, incumbent), not aborted, nodes
    )


def naive_min_dominating(n: int) -> SearchResult:
    """First dominating subset in order of increasing size, then lexicographic."""
    if not 1 <= n <= NAIVE_MAX_DIM:
        raise ValueError(f"naive search is refused above n = {NAIVE_MAX_DIM}")
    nbr = neighborhood_bits(n)
    full = (1 << (1 << n)) - 1
    checked = 0
    for k in range(1, (1 << n) + 1):
        for combo in itertools.combinations(range(1 << n), k):
            checked += 1
            acc = 0
            for v in combo:
                acc |= nbr[v]
            if acc == full:
                return SearchResult(k, DominatingSet.from_masks(n, combo), True, checked)
    raise AssertionError("unreachable: V(Q_n) dominates itself")
