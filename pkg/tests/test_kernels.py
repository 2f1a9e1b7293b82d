"""The numba loops and the numpy fallback must agree exactly."""
import numpy as np
import pytest

from cylroman import kernels
from cylroman.exact import _Tables
from cylroman.grid import CylinderGrid


@pytest.mark.parametrize("m,n,k", [(5, 3, 1), (6, 2, 3), (3, 1, 2)])
def test_vertex_ok(m, n, k):
    g = CylinderGrid(m, n)
    rng = np.random.default_rng(m * n + k)
    batch = rng.integers(0, k + 2, size=(300, g.order)).astype(np.int64)
    a = kernels.vertex_ok_loops(batch, g.neighbor_table, k)
    b = kernels.vertex_ok_numpy(batch, g.neighbor_table, k)
    assert np.array_equal(np.asarray(a, dtype=bool), np.asarray(b, dtype=bool))


@pytest.mark.parametrize("m,n,k", [(3, 1, 1), (5, 1, 2), (4, 2, 1), (3, 2, 2)])
def test_brute_min(m, n, k):
    g = CylinderGrid(m, n)
    wa, da = kernels.brute_min_loops(g.order, g.neighbor_table, k, k + 2)
    wb, db = kernels.brute_min_numpy(g.order, g.neighbor_table, k, k + 2)
    assert int(wa) == int(wb)
    assert list(da) == list(db)


@pytest.mark.parametrize("m,k", [(3, 1), (4, 2), (3, 3)])
def test_superset_min_and_step(m, k):
    t = _Tables(m, k, tuple(range(k + 2)))
    rng = np.random.default_rng(7)
    table = rng.integers(0, 50, size=(t.X, t.H)).astype(np.int32)
    ua = kernels.superset_min_loops(table, t.pw, k)
    ub = kernels.superset_min_numpy(table, t.pw, k)
    assert np.array_equal(ua, ub)
    sa = kernels.dp_step_loops(ua, t.inner, t.g, t.gcode, t.weight, t.pw, k)
    sb = kernels.dp_step_numpy(ub, t.inner, t.g, t.gcode, t.weight, t.pw, k)
    assert np.array_equal(sa, sb)
