"""Exact [k]-Roman domination numbers at desk scale.

Two independent routes:

* :func:`gamma_brute` scans every function V -> {0, ..., k+1}.
* :func:`gamma_profile_dp` sweeps the fibres.  Its state after fibre j is
  the label vector of fibre j together with the vector ``g(f)`` of fibre
  j-1 (``g(x) = max(x-1, 0)``, the part of a neighbour's label that
  survives the active-neighbour penalty).  A vertex of fibre j is checked
  in the transition that fixes fibre j+1; the last fibre is checked at
  finalisation.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import BudgetExceeded, PreconditionError
from .grid import CylinderGrid
from .labeling import Labeling

#: Default cap on table sizes: DP layer entries, or labelings for brute force.
DEFAULT_BUDGET = int(os.environ.get("CYLROMAN_BUDGET", 1 << 26))


@dataclass(frozen=True)
class ExactResult:
    gamma: int
    witness: Labeling
    method: str
    alphabet: tuple[int, ...]


def dp_alphabet(k: int, restrict_alphabet: bool) -> tuple[int, ...]:
    if restrict_alphabet:
        if k < 2:
            raise PreconditionError("dropping label 1 is only justified for k >= 2")
        return (0,) + tuple(range(2, k + 2))
    return tuple(range(k + 2))


def gamma_brute(grid: CylinderGrid, k: int, budget: int | None = None) -> ExactResult:
    budget = DEFAULT_BUDGET if budget is None else budget
    base = k + 2
    if base**grid.order > budget:
        raise BudgetExceeded(
            f"brute force over {base}^{grid.order} labelings exceeds budget {budget}"
        )
    gamma, digits = kernels.brute_min(grid.order, grid.neighbor_table, k, base)
    witness = Labeling(grid, k, np.asarray(digits, dtype=np.int64))
    return ExactResult(int(gamma), witness, "brute", tuple(range(base)))


class _Tables:
    """Per-instance lookup tables indexed by fibre code x (base |A| digits)."""

    def __init__(self, m: int, k: int, alphabet: tuple[int, ...]):
        A = np.asarray(alphabet, dtype=np.int64)
        X = len(A) ** m
        codes = np.arange(X, dtype=np.int64)
        digits = (codes[:, None] // len(A) ** np.arange(m)) % len(A)
        self.labels = A[digits]                                   # (X, m)
        self.weight = self.labels.sum(axis=1)                     # (X,)
        g = np.maximum(self.labels - 1, 0)
        self.g = np.ascontiguousarray(g)                          # (X, m)
        self.pw = (k + 1) ** np.arange(m, dtype=np.int64)         # (m,)
        self.gcode = g @ self.pw                                  # (X,)
        up = np.roll(g, 1, axis=1)
        down = np.roll(g, -1, axis=1)
        inner = k - self.labels - up - down
        # vertices labelled >= k are unconstrained
        inner[self.labels >= k] = -(k + 2)
        self.inner = np.ascontiguousarray(inner)
        self.X = X
        self.H = (k + 1) ** m


def gamma_profile_dp(
    grid: CylinderGrid,
    k: int,
    restrict_alphabet: bool = False,
    budget: int | None = None,
) -> ExactResult:
    """Exact minimum over labelings with values in the DP alphabet.

    With ``restrict_alphabet`` the label 1 is never used (valid for k >= 2).
    The layer size ``|A|^m * (k+1)^m`` must fit in ``budget``.
    """
    budget = DEFAULT_BUDGET if budget is None else budget
    alphabet = dp_alphabet(k, restrict_alphabet)
    m, n = grid.m, grid.n
    layer = len(alphabet) ** m * (k + 1) ** m
    if layer > budget:
        raise BudgetExceeded(f"DP layer of {layer} states exceeds budget {budget}")
    t = _Tables(m, k, alphabet)
    INF = kernels.INF

    first = np.full((t.X, t.H), INF, dtype=np.int32)
    first[:, 0] = t.weight
    layers = [first]
    uppers = [kernels.superset_min(first, t.pw, k)]
    for _ in range(1, n):
        nxt = kernels.dp_step(uppers[-1], t.inner, t.g, t.gcode, t.weight, t.pw, k)
        layers.append(nxt)
        uppers.append(kernels.superset_min(nxt, t.pw, k))

    # finalisation: the last fibre has no right neighbour
    final = np.full(t.X, INF, dtype=np.int64)
    d = t.inner
    feasible = (d <= k).all(axis=1)
    codes = np.clip(d, 0, k) @ t.pw
    final[feasible] = uppers[-1][np.flatnonzero(feasible), codes[feasible]]
    gamma = int(final.min())
    if gamma >= INF:
        raise RuntimeError("no feasible labeling found; the all-(k+1) labeling should exist")

    # backtrack, preferring the smallest index at every step
    fibres = [0] * n
    x = int(np.flatnonzero(final == gamma)[0])
    fibres[n - 1] = x
    target = gamma
    req = codes[x]
    for j in range(n - 1, 0, -1):
        h = _smallest_dominating(layers[j][x], req, t.pw, k, target)
        # predecessor: fibre code with g-code h, consistent with the transition
        cands = np.flatnonzero(t.gcode == h)
        value_needed = target - int(t.weight[x])
        prev = None
        for xp in cands:
            dd = t.inner[xp] - t.g[x]
            if (dd > k).any():
                continue
            r = int(np.clip(dd, 0, k) @ t.pw)
            if int(uppers[j - 1][xp, r]) == value_needed:
                prev, req = int(xp), r
                break
        assert prev is not None
        fibres[j - 1] = prev
        x, target = prev, value_needed
    values = np.concatenate([t.labels[c] for c in fibres])
    witness = Labeling(grid, k, values)
    return ExactResult(gamma, witness, "profile_dp", alphabet)


def _smallest_dominating(row: np.ndarray, req: int, pw: np.ndarray, k: int, target: int) -> int:
    """Smallest h >= req (componentwise) with row[h] == target."""
    H = row.shape[0]
    hs = np.arange(H, dtype=np.int64)
    digits = (hs[:, None] // pw) % (k + 1)
    need = (req // pw) % (k + 1)
    ok = (digits >= need).all(axis=1) & (row == target)
    return int(np.flatnonzero(ok)[0])


def gamma(grid: CylinderGrid, k: int, method: str = "dp", restrict_alphabet: bool | None = None,
          budget: int | None = None) -> ExactResult:
    if method == "brute":
        return gamma_brute(grid, k, budget)
    if restrict_alphabet is None:
        restrict_alphabet = k >= 2
    return gamma_profile_dp(grid, k, restrict_alphabet, budget)
