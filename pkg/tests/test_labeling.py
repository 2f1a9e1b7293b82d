import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import PRINTED_C5P3, literal_is_rdf, symbolic_matrix
from cylroman.errors import InputError
from cylroman.grid import CylinderGrid
from cylroman.labeling import Labeling, batch_is_valid


def test_weights():
    assert Labeling.zeros(CylinderGrid(5, 3), 2).weight() == 0
    assert Labeling.constant(CylinderGrid(5, 2), 1, 2).weight() == 20
    ref = Labeling.from_matrix(symbolic_matrix(PRINTED_C5P3, 2), 2)
    assert ref.weight() == 13


def test_active_neighbors():
    g = CylinderGrid(5, 3)
    assert Labeling.zeros(g, 1).active_neighbors((2, 1)) == 0
    assert Labeling.constant(g, 1, 2).active_neighbors((2, 1)) == 4
    ref = Labeling.from_matrix(symbolic_matrix(PRINTED_C5P3, 2), 2)
    assert ref.active_neighbors((1, 0)) == 0


def test_reference_matrix_is_valid():
    assert Labeling.from_matrix(symbolic_matrix(PRINTED_C5P3, 2), 2).is_valid()


def test_all_zero_violations():
    report = Labeling.zeros(CylinderGrid(5, 3), 1).violations()
    assert len(report) == 15
    assert all(v.required == 1 and v.neighborhood_sum == 0 for v in report)


def test_single_label_violation():
    g = CylinderGrid(5, 2)
    vals = np.zeros(g.order, dtype=np.int64)
    vals[g.index((0, 0))] = 3
    report = Labeling(g, 2, vals).violations()
    assert not Labeling(g, 2, vals).is_valid()
    bad = {v.vertex: v for v in report}
    assert bad[(2, 0)].neighborhood_sum == 0
    assert (0, 0) not in bad


def test_value_range_and_length_checked():
    g = CylinderGrid(5, 2)
    with pytest.raises(InputError):
        Labeling(g, 1, np.full(g.order, 3))
    with pytest.raises(InputError):
        Labeling(g, 1, np.zeros(g.order - 1))
    with pytest.raises(InputError):
        Labeling(g, 1, np.full(g.order, -1))


def test_text_roundtrip():
    lab = Labeling.from_matrix(symbolic_matrix(PRINTED_C5P3, 2), 2)
    text = lab.to_text()
    assert text.splitlines()[:2] == ["5 3 2", "0 3 0"]
    assert Labeling.from_text(text) == lab


@pytest.mark.parametrize("bad", ["", "5 3\n", "2 2 1\n0 0\n", "3 1 1\n0\nx\n0\n"])
def test_from_text_rejects(bad):
    with pytest.raises(InputError):
        Labeling.from_text(bad)


@st.composite
def labelings(draw, max_m=7, max_n=4):
    m = draw(st.integers(3, max_m))
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, 4))
    vals = draw(st.lists(st.integers(0, k + 1), min_size=m * n, max_size=m * n))
    return m, n, k, np.array(vals, dtype=np.int64)


@settings(max_examples=300, deadline=None)
@given(labelings())
def test_matches_literal_definition(case):
    m, n, k, vals = case
    lab = Labeling(CylinderGrid(m, n), k, vals)
    assert lab.is_valid() == literal_is_rdf(m, n, k, lab.to_matrix())
    assert batch_is_valid(lab.grid, k, vals[None])[0] == lab.is_valid()


@settings(max_examples=150, deadline=None)
@given(labelings())
def test_rotation_invariance(case):
    m, n, k, vals = case
    lab = Labeling(CylinderGrid(m, n), k, vals)
    rolled = Labeling.from_matrix(np.roll(lab.to_matrix(), 1, axis=0), k)
    flipped = Labeling.from_matrix(lab.to_matrix()[:, ::-1], k)
    assert rolled.is_valid() == lab.is_valid() == flipped.is_valid()


@settings(max_examples=150, deadline=None)
@given(labelings())
def test_raising_to_top_label_keeps_validity(case):
    # setting any vertex to k+1 can only help: it is unconstrained and
    # each neighbour gains at least (k+1) - 1 >= the one unit it may cost
    m, n, k, vals = case
    lab = Labeling(CylinderGrid(m, n), k, vals)
    if not lab.is_valid():
        return
    raised = vals.copy()
    raised[0] = k + 1
    assert lab.with_values(raised).is_valid()


def test_batch_matches_scalar():
    g = CylinderGrid(5, 2)
    rng = np.random.default_rng(3)
    batch = rng.integers(0, 4, size=(500, g.order))
    mask = batch_is_valid(g, 2, batch)
    assert mask.tolist() == [Labeling(g, 2, row).is_valid() for row in batch]
