"""Explicit [k]-Roman dominating functions on C_m □ P_n for m = 5..8.

Three families per circumference:

``LINm``
    A periodic pattern of ``k+1`` (and a few ``k``) entries along the path,
    with local corrections on the boundary fibres.
``UNIm``
    Every interior vertex gets ``ceil((k+4)/5)``, every boundary-fibre
    vertex ``ceil((k+3-a)/3)``.
``PACKm``
    The uniform labeling with base ``ceil((k+5)/5)``, lowered by one on each
    vertex of an explicit maximum packing.

Every labeling is verified before it is returned; a failure raises
:class:`ConstructionError` carrying the violation report.
"""
from __future__ import annotations

import itertools

import numpy as np

from .bounds import uniform_weights, upper_bound
from .errors import ConstructionError, InputError, PreconditionError
from .grid import CylinderGrid
from .ids import BoundId, ConstructionId
from .labeling import Labeling, Violation, ViolationReport, batch_is_valid
from .packing import packing_pattern

# Pattern columns as {row: is_full} maps, full meaning k+1 and otherwise k.
_LIN5_PERIOD = [{(2 * c) % 5: True} for c in range(5)]
_LIN6_PERIOD = [
    {0: True, 4: True},
    {2: True},
    {5: True},
    {1: True, 3: True},
    {5: True},
    {2: True},
]


def _lin7_column(c: int) -> dict[int, bool]:
    # even offsets hold a pair (r, r+2), odd offsets a single entry; both
    # climb one row every two columns
    if c % 2 == 0:
        r = (-(c // 2)) % 7
        return {r: True, (r + 2) % 7: True}
    return {(4 - (c - 1) // 2) % 7: True}


_LIN7_PERIOD = [_lin7_column(c) for c in range(14)]
_LIN8_FIRST = {0: True, 3: True, 6: False}
_LIN8_PERIOD = [
    {0: True, 5: True},
    {2: True, 7: True},
    {0: False, 4: True},
    {1: True, 6: True},
    {3: True, 7: False},
]
_PERIODS = {5: _LIN5_PERIOD, 6: _LIN6_PERIOD, 7: _LIN7_PERIOD, 8: _LIN8_PERIOD}


def _parse(cid: ConstructionId | str) -> BoundId:
    cid = BoundId.parse(cid)
    if cid is BoundId.LB:
        raise InputError("LB has no construction")
    return cid


def _put(mat: np.ndarray, j: int, column: dict[int, bool], k: int) -> None:
    for r, full in column.items():
        mat[r % mat.shape[0], j] = k + 1 if full else k


def pattern_block(cid: ConstructionId | str, k: int) -> np.ndarray:
    """One period of a linear pattern as an m x p matrix (p = 5, 6, 14, 5)."""
    cid = _parse(cid)
    if cid.family != "LIN":
        raise InputError(f"{cid} is not a periodic construction")
    period = _PERIODS[cid.m]
    mat = np.zeros((cid.m, len(period)), dtype=np.int64)
    for c, column in enumerate(period):
        _put(mat, c, column, k)
    return mat


def _rows_with(mat: np.ndarray, j: int, value: int) -> list[int]:
    return [int(r) for r in np.flatnonzero(mat[:, j] == value)]


def _lin5(n: int, k: int) -> np.ndarray:
    K = k + 1
    mat = np.zeros((5, n), dtype=np.int64)
    for j in range(1, n - 1):
        _put(mat, j, _LIN5_PERIOD[(j - 1) % 5], k)
    # the first fibre is keyed to the pinned phase of F_1 (row 0)
    r = 0
    mat[(r + 1) % 5, 0] = k
    mat[(r - 2) % 5, 0] = K
    (j,) = _rows_with(mat, n - 2, K)
    mat[(j - 1) % 5, n - 1] = k
    mat[(j + 2) % 5, n - 1] = K
    return mat


def _lin6(n: int, k: int) -> np.ndarray:
    K = k + 1
    mat = np.zeros((6, n), dtype=np.int64)
    for j in range(n - 1):
        _put(mat, j, _LIN6_PERIOD[j % 6], k)
    if n % 3 == 0:
        mat[2, n - 1] = K
        mat[5, n - 1] = K
    elif n % 3 == 1:
        # no correction: the last fibre simply continues the pattern
        _put(mat, n - 1, _LIN6_PERIOD[(n - 1) % 6], k)
    else:
        col = _rows_with(mat, n - 2, K)
        (j,) = [r for r in col if (r + 2) % 6 in col]
        mat[(j + 1) % 6, n - 1] = k
        mat[(j - 2) % 6, n - 1] = K
    return mat


def _lin7(n: int, k: int) -> np.ndarray:
    K = k + 1
    mat = np.zeros((7, n), dtype=np.int64)
    for j in range(n - 1):
        _put(mat, j, _LIN7_PERIOD[j % 14], k)
    mat[5, 0] = k
    col = _rows_with(mat, n - 2, K)
    if n % 2 == 0:
        (j,) = [r for r in col if (r + 2) % 7 in col]
        mat[j, n - 1] = K
        mat[(j - 3) % 7, n - 1] = K
    else:
        (j,) = col
        mat[(j - 1) % 7, n - 1] = k
        mat[(j - 3) % 7, n - 1] = K
        mat[(j + 2) % 7, n - 1] = K
    return mat


def _lin8(n: int, k: int) -> np.ndarray:
    """Pattern plus the lexicographically first valid {k+1, k+1, k} last fibre."""
    K = k + 1
    mat = np.zeros((8, n), dtype=np.int64)
    _put(mat, 0, _LIN8_FIRST, k)
    for j in range(1, n - 1):
        _put(mat, j, _LIN8_PERIOD[(j - 1) % 5], k)
    placements = list(itertools.permutations(range(8), 3))
    candidates = np.repeat(mat[None], len(placements), axis=0)
    for t, (a, b, c) in enumerate(placements):
        candidates[t, a, n - 1] = K
        candidates[t, b, n - 1] = K
        candidates[t, c, n - 1] = k
    flat = candidates.transpose(0, 2, 1).reshape(len(placements), -1)
    ok = np.flatnonzero(batch_is_valid(CylinderGrid(8, n), k, flat))
    if ok.size == 0:
        # leave the last fibre empty so the caller reports the violations
        return mat
    return candidates[ok[0]]


def _uniform(m: int, n: int, k: int, base: int) -> np.ndarray:
    interior, boundary = uniform_weights(k, base)
    if boundary > k + 1 or interior > k + 1:
        raise PreconditionError(f"uniform weights exceed k+1 for k={k}")
    mat = np.full((m, n), interior, dtype=np.int64)
    mat[:, 0] = boundary
    mat[:, n - 1] = boundary
    return mat


_LINEAR = {5: _lin5, 6: _lin6, 7: _lin7, 8: _lin8}


def _check_params(cid: BoundId, n: int, k: int) -> None:
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise PreconditionError(f"k must be an integer >= 1, got {k!r}")
    if not isinstance(n, (int, np.integer)) or n < cid.min_n:
        raise PreconditionError(f"{cid} needs n >= {cid.min_n}, got n={n!r}")


def unreduced_labeling(cid: ConstructionId | str, n: int, k: int) -> Labeling:
    """The PACKm labeling before the packing reduction."""
    cid = _parse(cid)
    if cid.family != "PACK":
        raise InputError(f"{cid} has no packing reduction")
    _check_params(cid, n, k)
    return Labeling.from_matrix(_uniform(cid.m, n, k, 5), k)


def raw_labeling(cid: ConstructionId | str, n: int, k: int) -> Labeling:
    """Build the labeling without verifying it."""
    cid = _parse(cid)
    _check_params(cid, n, k)
    m = cid.m
    if cid.family == "LIN":
        mat = _LINEAR[m](n, k)
    elif cid.family == "UNI":
        mat = _uniform(m, n, k, 4)
    else:
        mat = _uniform(m, n, k, 5)
        for i, j in packing_pattern(m, n).members:
            mat[i, j] -= 1
    return Labeling.from_matrix(mat, k)


def construct(cid: ConstructionId | str, n: int, k: int) -> Labeling:
    """Verified construction whose weight equals the matching closed-form bound."""
    cid = _parse(cid)
    lab = raw_labeling(cid, n, k)
    report = lab.violations()
    if report:
        raise ConstructionError(cid, n, k, lab, report)
    expected = upper_bound(cid, n, k)
    if lab.weight() != expected:
        raise ConstructionError(
            cid, n, k, lab, report, detail=f"weight {lab.weight()} != bound {expected}"
        )
    return lab


def packing_slack_violations(cid: ConstructionId | str, n: int, k: int) -> ViolationReport:
    """Vertices near the packing where the unreduced labeling lacks one unit of slack.

    Checked at every vertex of a packed closed neighbourhood whose value after
    the reduction is below ``k`` (those are the vertices the reduction can
    break): the unreduced labeling must give ``f(N[v]) >= k + |AN(v)| + 1``.
    """
    cid = _parse(cid)
    pre = unreduced_labeling(cid, n, k)
    grid = pre.grid
    packing = packing_pattern(cid.m, n)
    entries = []
    touched = sorted(
        {u for v in packing.members for u in grid.closed_neighborhood(v)}, key=grid.index
    )
    for v in touched:
        after = pre[v] - (1 if v in packing.members else 0)
        if after >= k:
            continue
        total = pre.neighborhood_sum(v)
        active = pre.active_neighbors(v)
        if total < k + active + 1:
            entries.append(Violation(v, pre[v], total, active, k + active + 1))
    return ViolationReport(tuple(entries))
