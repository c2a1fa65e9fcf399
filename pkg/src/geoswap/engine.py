"""Generic swap-based local search over an abstract feasibility interface.

Minimization removes up to k elements and adds strictly fewer; maximization
removes strictly fewer than it adds, up to k. Swaps are scanned first-improvement
in lexicographic order (sorted removed set, then sorted added set), so identical
inputs always produce identical runs.
"""

from __future__ import annotations

import heapq
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .errors import InfeasibleStartError

MINIMIZE = "minimize"
MAXIMIZE = "maximize"

Swap = tuple[tuple[int, ...], tuple[int, ...]]  # (removed, added)


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Problem(ABC):
    """Abstract problem: a ground set [0, n) with a pure feasibility predicate."""

    ground_size: int
    direction: str

    @abstractmethod
    def feasible_mask(self, mask: int) -> bool:
        """Feasibility of the subset encoded as a bitmask (hot path)."""

    def is_feasible(self, selected: Iterable[int]) -> bool:
        return self.feasible_mask(mask_of(selected))

    def initial_solution(self) -> tuple[int, ...]:
        if self.direction == MAXIMIZE:
            return ()
        return tuple(range(self.ground_size))


@dataclass(frozen=True)
class SearchConfig:
    k: int
    tie_break: str = "lex"
    max_iterations: Optional[int] = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("swap budget k must be >= 1")
        if self.tie_break != "lex":
            raise ValueError(f"unknown tie-break rule {self.tie_break!r}")


@dataclass
class Solution:
    selected: tuple[int, ...]
    trace: list[Swap] = field(default_factory=list)
    iterations: int = 0


def _subset_streams(pool: tuple[int, ...], sizes: range):
    """Lexicographically merged subsets of the sorted pool over the given sizes."""
    streams = [combinations(pool, a) for a in sizes if a <= len(pool)]
    return heapq.merge(*streams)


def find_improving_swap(problem: Problem, current: Iterable[int], k: int) -> Optional[Swap]:
    """Lexicographically first improving swap, or None at a local optimum."""
    cur = tuple(sorted(set(current)))
    cur_mask = mask_of(cur)
    rest = tuple(i for i in range(problem.ground_size) if not (cur_mask >> i) & 1)
    minimize = problem.direction == MINIMIZE

    if minimize:
        rem_sizes = range(1, min(k, len(cur)) + 1)
    else:
        rem_sizes = range(0, min(k - 1, len(cur)) + 1)

    # Added sets, materialized lexicographically once per allowed size range.
    adds_upto: dict[int, list[tuple[tuple[int, ...], int]]] = {}

    def adds_for(a: int):
        cached = adds_upto.get(a)
        if cached is None:
            lo, hi = (0, a - 1) if minimize else (a + 1, k)
            subsets = _subset_streams(rest, range(lo, hi + 1))
            cached = [(t, mask_of(t)) for t in subsets]
            adds_upto[a] = cached
        return cached

    feasible = problem.feasible_mask
    for rem in _subset_streams(cur, rem_sizes):
        base = cur_mask & ~mask_of(rem)
        for add, add_mask in adds_for(len(rem)):
            if feasible(base | add_mask):
                return rem, add
    return None


def local_search(problem: Problem, cfg: SearchConfig) -> Solution:
    start = tuple(sorted(problem.initial_solution()))
    if not problem.is_feasible(start):
        raise InfeasibleStartError("initial solution is infeasible")
    selected = start
    trace: list[Swap] = []
    iterations = 0
    while cfg.max_iterations is None or iterations < cfg.max_iterations:
        swap = find_improving_swap(problem, selected, cfg.k)
        if swap is None:
            break
        removed, added = swap
        sel = set(selected)
        sel.difference_update(removed)
        sel.update(added)
        selected = tuple(sorted(sel))
        trace.append(swap)
        iterations += 1
    return Solution(selected=selected, trace=trace, iterations=iterations)


def verify_local_optimality(problem: Problem, selected: Iterable[int], k: int) -> bool:
    return find_improving_swap(problem, selected, k) is None


def replay_trace(problem: Problem, solution: Solution,
                 start: Optional[Iterable[int]] = None) -> list[tuple[int, ...]]:
    """Re-apply the trace from the initial solution, checking feasibility at
    every step and that it ends at solution.selected. Returns all intermediate
    selections (including endpoints)."""
    sel = set(problem.initial_solution() if start is None else start)
    states = [tuple(sorted(sel))]
    if not problem.is_feasible(sel):
        raise InfeasibleStartError("trace starts infeasible")
    for removed, added in solution.trace:
        if not set(removed) <= sel:
            raise ValueError("trace removes elements not present")
        sel.difference_update(removed)
        sel.update(added)
        if not problem.is_feasible(sel):
            raise ValueError("trace passes through an infeasible set")
        states.append(tuple(sorted(sel)))
    if states[-1] != tuple(solution.selected):
        raise ValueError("trace does not reach the reported solution")
    return states
