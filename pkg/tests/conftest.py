import numpy as np
import pytest

from cylroman.grid import CylinderGrid

PRINTED_C5P3 = [[0, "K", 0], ["k", 0, 0], [0, 0, "K"], ["K", 0, 0], [0, 0, "k"]]
PRINTED_C5P4 = [
    [0, "K", 0, 0],
    ["k", 0, 0, "k"],
    [0, 0, "K", 0],
    ["K", 0, 0, 0],
    [0, 0, 0, "K"],
]


def symbolic_matrix(rows, k):
    """Substitute k and K = k+1 into a symbolic matrix."""
    sub = {"k": k, "K": k + 1}
    return np.array([[sub.get(x, x) for x in row] for row in rows], dtype=np.int64)


def literal_is_rdf(m, n, k, matrix):
    """Definition check written independently of the package, straight from adjacency."""
    f = np.asarray(matrix)
    for j in range(n):
        for i in range(m):
            if f[i, j] >= k:
                continue
            nbrs = [((i - 1) % m, j), ((i + 1) % m, j)]
            if j > 0:
                nbrs.append((i, j - 1))
            if j < n - 1:
                nbrs.append((i, j + 1))
            total = f[i, j] + sum(f[u] for u in nbrs)
            active = sum(1 for u in nbrs if f[u] > 0)
            if total < k + active:
                return False
    return True


@pytest.fixture
def c5p3():
    return CylinderGrid(5, 3)
