"""Packings of C_m □ P_n: vertex sets with pairwise disjoint closed neighbourhoods.

Two vertices conflict iff their distance is at most 2.  Inside one fibre
that means cyclic distance <= 2; between adjacent fibres, cyclic row
distance <= 1; two fibres apart, the same row.  The exact solver is a
dynamic program whose state is the pair of subsets chosen in the two
most recent fibres.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded, InputError, PreconditionError
from .grid import CylinderGrid, Vertex

DEFAULT_PACKING_BUDGET = 1 << 26
BRUTE_PACKING_LIMIT = 24


@dataclass(frozen=True)
class PackingSet:
    grid: CylinderGrid
    members: frozenset[Vertex]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.grid.check(v) for v in self.members))

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> list[Vertex]:
        return sorted(self.members, key=self.grid.index)

    def per_fibre(self) -> list[int]:
        counts = [0] * self.grid.n
        for _, j in self.members:
            counts[j] += 1
        return counts

    def render(self) -> str:
        """Star grid: rows are cycle vertices, columns fibres, ``*`` marks members."""
        m, n = self.grid.m, self.grid.n
        rows = [
            "".join("*" if (i, j) in self.members else "." for j in range(n)) for i in range(m)
        ]
        return "\n".join(rows) + "\n"


def is_packing(packing: PackingSet) -> bool:
    seen: set[Vertex] = set()
    for v in packing.members:
        nb = packing.grid.closed_neighborhood(v)
        if seen & nb:
            return False
        seen |= nb
    return True


# ---------------------------------------------------------------- exact search


def _cyc_dist(a: int, b: int, m: int) -> int:
    d = abs(a - b) % m
    return min(d, m - d)


@lru_cache(maxsize=None)
def _fibre_subsets(m: int) -> tuple[int, ...]:
    """Bitmasks of row sets whose members are pairwise at cyclic distance >= 3."""
    out = []
    for mask in range(1 << m):
        rows = [r for r in range(m) if mask >> r & 1]
        if all(_cyc_dist(a, b, m) >= 3 for x, a in enumerate(rows) for b in rows[x + 1 :]):
            out.append(mask)
    return tuple(out)


def _spread(mask: int, m: int) -> int:
    full = (1 << m) - 1
    up = ((mask << 1) | (mask >> (m - 1))) & full
    down = ((mask >> 1) | (mask << (m - 1))) & full
    return mask | up | down


def _rows(mask: int) -> tuple[int, ...]:
    return tuple(r for r in range(mask.bit_length()) if mask >> r & 1)


def max_packing(
    grid: CylinderGrid, budget: int = DEFAULT_PACKING_BUDGET
) -> tuple[int, PackingSet]:
    """Exact packing number with the lexicographically smallest maximum witness.

    Work is ``n * S^3`` for ``S`` admissible fibre subsets (S = 11 for m = 8,
    S = 161 for m = 16); ``budget`` caps the ``S^2`` pair-state count.
    """
    m, n = grid.m, grid.n
    subs = _fibre_subsets(m)
    if len(subs) ** 2 > budget:
        raise BudgetExceeded(f"{len(subs) ** 2} pair states exceed packing budget {budget}")
    spread = {s: _spread(s, m) for s in subs}

    def compatible(prev2: int, prev: int, cur: int) -> bool:
        return not (cur & spread[prev]) and not (cur & prev2)

    # best[j][(a, b)]: largest count obtainable in fibres j..n-1 when fibres
    # j-2 and j-1 hold subsets a and b (the empty subset when absent)
    pairs = [(a, b) for a in subs for b in subs if not (b & spread[a])]
    best: list[dict[tuple[int, int], int]] = [dict() for _ in range(n + 1)]
    best[n] = {pair: 0 for pair in pairs}
    for j in range(n - 1, -1, -1):
        nxt = best[j + 1]
        best[j] = {
            (a, b): max(
                bin(c).count("1") + nxt[(b, c)] for c in subs if compatible(a, b, c)
            )
            for a, b in pairs
        }
    total = best[0][(0, 0)]
    members: list[Vertex] = []
    a = b = 0
    for j in range(n):
        target = best[j][(a, b)]
        options = [
            c
            for c in subs
            if compatible(a, b, c) and bin(c).count("1") + best[j + 1][(b, c)] == target
        ]
        # an empty fibre sorts after any row: compare rows, then +inf
        c = min(options, key=lambda s: _rows(s) + (m,))
        members.extend((r, j) for r in _rows(c))
        a, b = b, c
    return total, PackingSet(grid, frozenset(members))


def max_packing_brute(grid: CylinderGrid) -> tuple[int, PackingSet]:
    """Branch-and-bound over the distance-2 conflict graph (oracle, m*n <= 24)."""
    if grid.order > BRUTE_PACKING_LIMIT:
        raise BudgetExceeded(f"brute-force packing limited to {BRUTE_PACKING_LIMIT} vertices")
    order = grid.order
    conflict = []
    for p in range(order):
        v = grid.vertex(p)
        nb = grid.closed_neighborhood(v)
        conflict.append(
            {q for q in range(order) if q != p and nb & grid.closed_neighborhood(grid.vertex(q))}
        )
    best: list[int] = []

    def search(p: int, chosen: list[int], blocked: frozenset[int]) -> None:
        nonlocal best
        if len(chosen) + (order - p) <= len(best):
            return
        if p == order:
            best = list(chosen)
            return
        if p not in blocked:
            chosen.append(p)
            search(p + 1, chosen, blocked | conflict[p])
            chosen.pop()
        search(p + 1, chosen, blocked)

    search(0, [], frozenset())
    return len(best), PackingSet(grid, frozenset(grid.vertex(p) for p in best))


# ---------------------------------------------------------------- closed forms


def packing_formula(m: int, n: int) -> int:
    if m not in (5, 6, 7, 8):
        raise PreconditionError(f"packing formula known only for m in 5..8, got {m}")
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if m == 5:
        return n
    if m == 6:
        return n if n % 2 == 0 else n + 1
    if m == 7:
        if n < 4:
            raise PreconditionError("the m = 7 formula holds for n >= 4 only")
        return n + 2
    return 2 * (n - n // 3)


def packing_pattern(m: int, n: int) -> PackingSet:
    """Explicit periodic maximum packing for m in 5..8."""
    packing_formula(m, n)  # same preconditions
    grid = CylinderGrid(m, n)
    members: list[Vertex] = []
    if m == 5:
        members = [((1 + 2 * j) % 5, j) for j in range(n)]
    elif m == 6:
        for j in range(0, n, 2):
            r = (j // 2) % 2
            members += [(r, j), (r + 3, j)]
    elif m == 7:
        members = [(1, 0), (5, 0)]
        row = 3
        for j in range(1, n - 1):
            members.append((row, j))
            last = row
            row = (row + 3) % 7
        members += [((last + 2) % 7, n - 1), ((last - 2) % 7, n - 1)]
    else:
        for j in range(n):
            if j % 3 == 0:
                members += [(0, j), (4, j)]
            elif j % 3 == 1:
                members += [(2, j), (6, j)]
    return PackingSet(grid, frozenset(members))
