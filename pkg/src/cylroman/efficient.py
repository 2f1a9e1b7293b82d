"""Efficient domination (perfect codes) and constant closed-neighbourhood sums.

Both searches decide vertices in flat-index order with the smaller choice
first, so the first solution found is the lexicographically smallest.
A closed neighbourhood N[v] is complete once its largest index has been
decided, which is where the exactness checks fire.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, InputError
from .grid import CylinderGrid, Vertex
from .labeling import Labeling

EDS_LIMIT = 160
FULL_ALPHABET_LIMIT = 12


@dataclass(frozen=True)
class EfficientDominatingSet:
    grid: CylinderGrid
    members: frozenset[Vertex]

    def is_efficient(self) -> bool:
        counts = {v: 0 for v in self.grid.vertices()}
        for u in self.members:
            for v in self.grid.closed_neighborhood(u):
                counts[v] += 1
        return all(c == 1 for c in counts.values())

    def sorted(self) -> list[Vertex]:
        return sorted(self.members, key=self.grid.index)


def admits_efficient_characterization(m: int, n: int) -> bool:
    if m < 3 or n < 1:
        raise InputError(f"need m >= 3 and n >= 1, got m={m}, n={n}")
    return (n == 1 and m % 3 == 0) or (n == 2 and m % 4 == 0)


def _closed_lists(grid: CylinderGrid) -> tuple[list[list[int]], list[list[int]]]:
    """Closed neighbourhoods as index lists, and for each p the v with max(N[v]) == p."""
    closed = [sorted(grid.index(u) for u in grid.closed_neighborhood(grid.vertex(p)))
              for p in range(grid.order)]
    completes: list[list[int]] = [[] for _ in range(grid.order)]
    for v, nb in enumerate(closed):
        completes[nb[-1]].append(v)
    return closed, completes


def find_efficient_dominating_set(
    grid: CylinderGrid, limit: int = EDS_LIMIT
) -> EfficientDominatingSet | None:
    if grid.order > limit:
        raise BudgetExceeded(f"efficient-domination search limited to {limit} vertices")
    closed, completes = _closed_lists(grid)
    order = grid.order
    cover = [0] * order
    chosen: list[int] = []

    def search(p: int) -> bool:
        if p == order:
            return True
        for take in (True, False):
            if take:
                if any(cover[q] for q in closed[p]):
                    continue
                for q in closed[p]:
                    cover[q] += 1
                chosen.append(p)
            if all(cover[v] == 1 for v in completes[p]) and search(p + 1):
                return True
            if take:
                for q in closed[p]:
                    cover[q] -= 1
                chosen.pop()
        return False

    if not search(0):
        return None
    return EfficientDominatingSet(grid, frozenset(grid.vertex(p) for p in chosen))


def exists_constant_sum_krdf(
    grid: CylinderGrid, k: int, full_alphabet: bool | None = None
) -> Labeling | None:
    """Smallest [k]-RDF whose every closed-neighbourhood sum equals k+1, if any.

    ``full_alphabet`` searches all labels 0..k+1 (default when m*n <= 12);
    otherwise labels are restricted to {0, k+1}.
    """
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if full_alphabet is None:
        full_alphabet = grid.order <= FULL_ALPHABET_LIMIT
    if full_alphabet and grid.order > 2 * FULL_ALPHABET_LIMIT:
        raise BudgetExceeded(f"mixed-value search limited to {2 * FULL_ALPHABET_LIMIT} vertices")
    labels = range(k + 2) if full_alphabet else (0, k + 1)
    target = k + 1
    closed, completes = _closed_lists(grid)
    members_of = [[v for v in range(grid.order) if p in closed[v]] for p in range(grid.order)]
    order = grid.order
    sums = [0] * order
    values = [0] * order

    def search(p: int) -> bool:
        if p == order:
            lab = Labeling(grid, k, np.asarray(values, dtype=np.int64))
            return lab.is_valid()
        for x in labels:
            if any(sums[v] + x > target for v in members_of[p]):
                break
            for v in members_of[p]:
                sums[v] += x
            values[p] = x
            if all(sums[v] == target for v in completes[p]) and search(p + 1):
                return True
            for v in members_of[p]:
                sums[v] -= x
        values[p] = 0
        return False

    if not search(0):
        return None
    return Labeling(grid, k, np.asarray(values, dtype=np.int64))
