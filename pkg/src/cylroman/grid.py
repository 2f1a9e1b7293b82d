"""The cylindrical grid C_m □ P_n.

Vertex ``(i, j)`` sits in row ``i`` of the cycle and column (fibre) ``j``
of the path.  Rows wrap modulo ``m``; columns do not.  Dense arrays use
the flat index ``i + m * j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InputError

Vertex = tuple[int, int]


@dataclass(frozen=True)
class CylinderGrid:
    m: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, (int, np.integer)) or self.m < 3:
            raise InputError(f"cycle length m must be an integer >= 3, got {self.m!r}")
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InputError(f"path length n must be an integer >= 1, got {self.n!r}")

    @property
    def order(self) -> int:
        return self.m * self.n

    @property
    def size(self) -> int:
        """Number of edges: m per fibre cycle plus m between each fibre pair."""
        return self.m * self.n + self.m * (self.n - 1)

    def check(self, v: Vertex) -> Vertex:
        try:
            i, j = v
        except (TypeError, ValueError):
            raise InputError(f"vertex must be an (i, j) pair, got {v!r}") from None
        if not (0 <= i < self.m and 0 <= j < self.n):
            raise InputError(f"vertex {v!r} outside C_{self.m} x P_{self.n}")
        return int(i), int(j)

    def index(self, v: Vertex) -> int:
        i, j = self.check(v)
        return i + self.m * j

    def vertex(self, idx: int) -> Vertex:
        if not 0 <= idx < self.order:
            raise InputError(f"vertex index {idx} outside [0, {self.order})")
        return idx % self.m, idx // self.m

    def vertices(self) -> list[Vertex]:
        """All vertices in flat-index order (column-major)."""
        return [(i, j) for j in range(self.n) for i in range(self.m)]

    def fibre(self, j: int) -> list[Vertex]:
        if not 0 <= j < self.n:
            raise InputError(f"fibre {j} outside [0, {self.n})")
        return [(i, j) for i in range(self.m)]

    def neighbors(self, v: Vertex) -> list[Vertex]:
        """Open neighbourhood in the fixed order cycle-up, cycle-down, path-left, path-right."""
        i, j = self.check(v)
        out = [((i - 1) % self.m, j), ((i + 1) % self.m, j)]
        if j > 0:
            out.append((i, j - 1))
        if j < self.n - 1:
            out.append((i, j + 1))
        return out

    def closed_neighborhood(self, v: Vertex) -> set[Vertex]:
        return {self.check(v), *self.neighbors(v)}

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    @cached_property
    def neighbor_table(self) -> np.ndarray:
        """``(order, 4)`` flat neighbour indices; absent neighbours hold ``order``.

        The sentinel lets kernels pad a labeling with a trailing zero and
        gather without branching.
        """
        m, n = self.m, self.n
        table = np.full((self.order, 4), self.order, dtype=np.int64)
        for j in range(n):
            for i in range(m):
                p = i + m * j
                table[p, 0] = (i - 1) % m + m * j
                table[p, 1] = (i + 1) % m + m * j
                if j > 0:
                    table[p, 2] = p - m
                if j < n - 1:
                    table[p, 3] = p + m
        return table

    def __str__(self) -> str:
        return f"C_{self.m} x P_{self.n}"
