"""Weight functions f: V -> {0, ..., k+1} and the [k]-Roman condition.

A vertex with ``f(v) >= k`` imposes nothing.  Every other vertex needs
``f(N[v]) >= k + |AN(v)|`` where the closed neighbourhood sum includes
``f(v)`` itself and ``AN(v)`` counts the positively labelled neighbours.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InputError
from .grid import CylinderGrid, Vertex
from .kernels import vertex_ok


class Violation(NamedTuple):
    vertex: Vertex
    value: int
    neighborhood_sum: int
    active_neighbor_count: int
    required: int


@dataclass(frozen=True)
class ViolationReport:
    entries: tuple[Violation, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def to_text(self) -> str:
        lines = [
            f"{v.vertex[0]} {v.vertex[1]} {v.value} {v.neighborhood_sum} "
            f"{v.active_neighbor_count} {v.required}"
            for v in self.entries
        ]
        return "".join(line + "\n" for line in lines)


@dataclass(frozen=True, eq=False)
class Labeling:
    grid: CylinderGrid
    k: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InputError(f"k must be >= 1, got {self.k}")
        vals = np.asarray(self.values, dtype=np.int64).reshape(-1)
        if vals.shape[0] != self.grid.order:
            raise InputError(f"expected {self.grid.order} values, got {vals.shape[0]}")
        if vals.size and (vals.min() < 0 or vals.max() > self.k + 1):
            raise InputError(f"labels must lie in [0, {self.k + 1}]")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    # construction helpers
    @classmethod
    def zeros(cls, grid: CylinderGrid, k: int) -> Labeling:
        return cls(grid, k, np.zeros(grid.order, dtype=np.int64))

    @classmethod
    def constant(cls, grid: CylinderGrid, k: int, value: int) -> Labeling:
        return cls(grid, k, np.full(grid.order, value, dtype=np.int64))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]] | np.ndarray, k: int) -> Labeling:
        """Build from an m x n matrix (rows = cycle vertices, columns = fibres)."""
        mat = np.asarray(matrix, dtype=np.int64)
        if mat.ndim != 2:
            raise InputError("labeling matrix must be two-dimensional")
        grid = CylinderGrid(int(mat.shape[0]), int(mat.shape[1]))
        # flat index i + m*j is column-major order
        return cls(grid, k, mat.T.reshape(-1))

    def to_matrix(self) -> np.ndarray:
        return self.values.reshape(self.grid.n, self.grid.m).T.copy()

    def __getitem__(self, v: Vertex) -> int:
        return int(self.values[self.grid.index(v)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return (
            self.grid == other.grid
            and self.k == other.k
            and np.array_equal(self.values, other.values)
        )

    def with_values(self, values: np.ndarray) -> Labeling:
        return Labeling(self.grid, self.k, values)

    # the condition
    def weight(self) -> int:
        return int(self.values.sum())

    def neighborhood_sum(self, v: Vertex) -> int:
        return sum(self[u] for u in self.grid.closed_neighborhood(v))

    def active_neighbors(self, v: Vertex) -> int:
        return sum(1 for u in self.grid.neighbors(v) if self[u] > 0)

    def satisfied_mask(self) -> np.ndarray:
        return vertex_ok(self.values[None, :], self.grid.neighbor_table, self.k)[0]

    def is_valid(self) -> bool:
        return bool(self.satisfied_mask().all())

    def violations(self) -> ViolationReport:
        bad = np.flatnonzero(~self.satisfied_mask())
        entries = []
        for p in bad:
            v = self.grid.vertex(int(p))
            active = self.active_neighbors(v)
            entries.append(
                Violation(v, self[v], self.neighborhood_sum(v), active, self.k + active)
            )
        return ViolationReport(tuple(entries))

    # text format
    def to_text(self) -> str:
        mat = self.to_matrix()
        lines = [f"{self.grid.m} {self.grid.n} {self.k}"]
        lines += [" ".join(str(int(x)) for x in row) for row in mat]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Labeling:
        rows = [line.split() for line in text.splitlines() if line.strip()]
        if not rows or len(rows[0]) != 3:
            raise InputError("first line must be the header 'm n k'")
        try:
            m, n, k = (int(t) for t in rows[0])
            body = [[int(t) for t in row] for row in rows[1:]]
        except ValueError as exc:
            raise InputError(f"non-integer entry in labeling file: {exc}") from None
        if len(body) != m or any(len(row) != n for row in body):
            raise InputError(f"expected {m} rows of {n} entries after the header")
        lab = cls.from_matrix(body, k)
        return lab


def weight(labeling: Labeling) -> int:
    return labeling.weight()


def active_neighbors(labeling: Labeling, v: Vertex) -> int:
    return labeling.active_neighbors(v)


def is_valid_krdf(labeling: Labeling) -> bool:
    return labeling.is_valid()


def violations(labeling: Labeling) -> ViolationReport:
    return labeling.violations()


def batch_is_valid(grid: CylinderGrid, k: int, values: np.ndarray | Iterable) -> np.ndarray:
    """Validity of many labelings at once; ``values`` has shape ``(batch, m*n)``."""
    arr = np.asarray(values, dtype=np.int64)
    return vertex_ok(arr, grid.neighbor_table, k).all(axis=1)
