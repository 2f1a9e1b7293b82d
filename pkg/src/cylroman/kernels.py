"""Hot inner loops, each in a numba flavour and a vectorised numpy flavour.

The public entry points pick the flavour from :data:`cylroman._accel.USE_NUMBA`.
Both flavours are importable directly (``*_loops`` / ``*_numpy``) so the
test-suite and the benchmark can compare them on the same inputs.

All kernels share one reformulation of the [k]-Roman condition.  With
``g(x) = max(x - 1, 0)`` a vertex ``v`` with ``f(v) < k`` is satisfied iff

    f(v) + sum_{u in N(v)} g(f(u)) >= k

because each positive neighbour contributes its value and one unit of
``|AN(v)|``.  Absent neighbours are padded with value 0, and ``g(0) = 0``.
"""
from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit

INF = np.int32(2**30)


# ---------------------------------------------------------------- vertex check


@njit
def vertex_ok_loops(values, nbr, k):
    batch, order = values.shape
    ok = np.ones((batch, order), dtype=np.bool_)
    for b in range(batch):
        for p in range(order):
            fv = values[b, p]
            if fv >= k:
                continue
            s = fv
            for t in range(4):
                q = nbr[p, t]
                if q < order:
                    x = values[b, q]
                    if x > 1:
                        s += x - 1
            if s < k:
                ok[b, p] = False
    return ok


def vertex_ok_numpy(values, nbr, k):
    batch = values.shape[0]
    padded = np.concatenate([values, np.zeros((batch, 1), dtype=values.dtype)], axis=1)
    g = np.maximum(padded - 1, 0)
    s = values + g[:, nbr].sum(axis=2)
    return (values >= k) | (s >= k)


def vertex_ok(values: np.ndarray, nbr: np.ndarray, k: int) -> np.ndarray:
    """Per-vertex satisfaction mask for a batch of labelings ``(batch, order)``."""
    values = np.ascontiguousarray(values, dtype=np.int64)
    if USE_NUMBA:
        return vertex_ok_loops(values, nbr, int(k))
    return vertex_ok_numpy(values, nbr, int(k))


# ---------------------------------------------------------------- brute force


@njit
def brute_min_loops(order, nbr, k, base):
    """Scan every labeling in ``{0..base-1}^order``; return (best weight, its index digits).

    Labelings are visited in odometer order with vertex 0 the fastest digit;
    the first labeling reaching the minimum is kept.
    """
    digits = np.zeros(order, dtype=np.int64)
    best = np.zeros(order, dtype=np.int64)
    best_w = 1 << 60
    w = 0
    while True:
        if w < best_w:
            good = True
            for p in range(order):
                fv = digits[p]
                if fv >= k:
                    continue
                s = fv
                for t in range(4):
                    q = nbr[p, t]
                    if q < order:
                        x = digits[q]
                        if x > 1:
                            s += x - 1
                if s < k:
                    good = False
                    break
            if good:
                best_w = w
                for p in range(order):
                    best[p] = digits[p]
        # advance odometer
        p = 0
        while p < order and digits[p] == base - 1:
            w -= digits[p]
            digits[p] = 0
            p += 1
        if p == order:
            break
        digits[p] += 1
        w += 1
    return best_w, best


def brute_min_numpy(order, nbr, k, base, chunk=1 << 18):
    total = base**order
    powers = base ** np.arange(order, dtype=np.int64)
    best_w, best_idx = 1 << 60, -1
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        vals = (idx[:, None] // powers[None, :]) % base
        w = vals.sum(axis=1)
        cand = w < best_w
        if not cand.any():
            continue
        ok = vertex_ok_numpy(vals[cand], nbr, k).all(axis=1)
        if not ok.any():
            continue
        sub_w = w[cand][ok]
        pos = int(np.argmin(sub_w))  # first minimum keeps odometer order
        if sub_w[pos] < best_w:
            best_w = int(sub_w[pos])
            best_idx = int(idx[cand][ok][pos])
    digits = (best_idx // powers) % base if best_idx >= 0 else np.zeros(order, dtype=np.int64)
    return best_w, digits


def brute_min(order: int, nbr: np.ndarray, k: int, base: int):
    if USE_NUMBA:
        w, digits = brute_min_loops(order, nbr, int(k), int(base))
        return int(w), digits
    return brute_min_numpy(order, nbr, int(k), int(base))


# ---------------------------------------------------------------- profile DP
#
# Layer tables are (X, H) int32 arrays: X fibre label-vectors (base |A|
# codes) by H codes of the g-vector of the previous fibre (base k+1).


@njit
def superset_min_loops(table, pw, k):
    """In place: table[x, h] <- min over h' >= h (componentwise) of table[x, h']."""
    X, H = table.shape
    m = pw.shape[0]
    for i in range(m):
        stride = pw[i]
        for h in range(H - 1, -1, -1):
            if (h // stride) % (k + 1) == k:
                continue
            hs = h + stride
            for x in range(X):
                if table[x, hs] < table[x, h]:
                    table[x, h] = table[x, hs]
    return table


def superset_min_numpy(table, pw, k):
    X = table.shape[0]
    m = pw.shape[0]
    cube = table.reshape((X,) + (k + 1,) * m)
    for ax in range(1, m + 1):
        flipped = np.flip(cube, axis=ax)
        cube = np.flip(np.minimum.accumulate(flipped, axis=ax), axis=ax)
    return np.ascontiguousarray(cube.reshape(X, -1))


def superset_min(table: np.ndarray, pw: np.ndarray, k: int) -> np.ndarray:
    if USE_NUMBA:
        return superset_min_loops(table.copy(), pw, int(k))
    return superset_min_numpy(table, pw, int(k))


@njit
def dp_step_loops(upper, inner, gy, gcode, w, pw, k):
    """One fibre transition.

    ``upper`` is the superset-min of the previous layer.  For each pair
    (x = current fibre, y = next fibre) the residual requirement on the
    g-vector of the fibre before x is ``max(inner[x] - gy[y], 0)``; pairs
    whose residual exceeds ``k`` anywhere are infeasible.
    """
    X, H = upper.shape
    m = pw.shape[0]
    out = np.full((X, H), INF, dtype=np.int32)
    for x in range(X):
        s = gcode[x]
        for y in range(X):
            r = 0
            feasible = True
            for i in range(m):
                d = inner[x, i] - gy[y, i]
                if d > k:
                    feasible = False
                    break
                if d > 0:
                    r += d * pw[i]
            if not feasible:
                continue
            u = upper[x, r]
            if u >= INF:
                continue
            v = u + w[y]
            if v < out[y, s]:
                out[y, s] = v
    return out


def dp_step_numpy(upper, inner, gy, gcode, w, pw, k):
    X, H = upper.shape
    out = np.full((X, H), INF, dtype=np.int32)
    for x in range(X):
        d = inner[x][None, :] - gy
        feasible = (d <= k).all(axis=1)
        r = (np.clip(d, 0, k) * pw).sum(axis=1)
        vals = upper[x, r].astype(np.int64) + w
        vals[~feasible | (upper[x, r] >= INF)] = INF
        col = out[:, gcode[x]]
        np.minimum(col, vals.astype(np.int32), out=col)
        out[:, gcode[x]] = col
    return out


def dp_step(upper, inner, gy, gcode, w, pw, k):
    if USE_NUMBA:
        return dp_step_loops(upper, inner, gy, gcode, w, pw, int(k))
    return dp_step_numpy(upper, inner, gy, gcode, w, pw, int(k))
