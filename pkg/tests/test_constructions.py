import numpy as np
import pytest

from conftest import PRINTED_C5P3, PRINTED_C5P4, literal_is_rdf, symbolic_matrix
from cylroman.bounds import upper_bound
from cylroman.constructions import (
    construct,
    packing_slack_violations,
    pattern_block,
    raw_labeling,
    unreduced_labeling,
)
from cylroman.errors import ConstructionError, InputError, PreconditionError
from cylroman.ids import BoundId
from cylroman.packing import packing_pattern


@pytest.mark.parametrize("k", [1, 2, 5])
def test_lin5_reproduces_printed_examples(k):
    assert np.array_equal(construct("LIN5", 3, k).to_matrix(), symbolic_matrix(PRINTED_C5P3, k))
    assert np.array_equal(construct("LIN5", 4, k).to_matrix(), symbolic_matrix(PRINTED_C5P4, k))


@pytest.mark.parametrize(
    "cid,n,k,w",
    [("LIN5", 3, 2, 13), ("LIN5", 4, 2, 16), ("UNI5", 4, 1, 20), ("PACK5", 4, 1, 26),
     ("LIN8", 5, 1, 21), ("LIN6", 6, 1, 18)],
)
def test_example_weights(cid, n, k, w):
    assert construct(cid, n, k).weight() == w


@pytest.mark.parametrize("cid", [b for b in BoundId.upper() if b.family == "LIN"])
def test_linear_family_small_sweep(cid):
    for n in range(2, 16):
        for k in (1, 2, 3, 7):
            lab = construct(cid, n, k)
            assert literal_is_rdf(lab.grid.m, n, k, lab.to_matrix())
            assert lab.weight() == upper_bound(cid, n, k)


@pytest.mark.parametrize("cid", ["UNI5", "UNI6", "UNI7", "UNI8"])
def test_uniform_family(cid):
    for n in (4, 5, 9):
        for k in range(1, 12):
            assert construct(cid, n, k).weight() == upper_bound(cid, n, k)


def test_pattern_block_lin5_shift():
    block = pattern_block("LIN5", 2)
    assert block.shape == (5, 5)
    assert (block.sum(axis=0) == 3).all()
    rows = [int(np.flatnonzero(block[:, c])[0]) for c in range(5)]
    assert all((rows[c + 1] - rows[c]) % 5 == 2 for c in range(4))


@pytest.mark.parametrize("cid,period", [("LIN6", 6), ("LIN7", 14), ("LIN8", 5)])
def test_pattern_block_shapes(cid, period):
    assert pattern_block(cid, 3).shape == (int(cid[-1]), period)


def test_pack_reduction_lowers_packing_vertices():
    pre = unreduced_labeling("PACK6", 6, 4).to_matrix()
    post = raw_labeling("PACK6", 6, 4).to_matrix()
    diff = pre - post
    assert set(np.unique(diff)) == {0, 1}
    assert diff.sum() == len(packing_pattern(6, 6))


def test_pack_failure_is_reported_with_violations():
    # k = 2 puts a packed boundary vertex exactly at the threshold
    with pytest.raises(ConstructionError) as info:
        construct("PACK5", 5, 2)
    err = info.value
    assert err.report and err.labeling.grid.m == 5
    assert all(v.vertex[1] in (0, 4) for v in err.report)
    assert packing_slack_violations("PACK5", 5, 2)


def test_pack_succeeds_off_the_bad_classes():
    for cid in ("PACK5", "PACK6", "PACK7", "PACK8"):
        lab = construct(cid, 8, 3)
        assert lab.weight() == upper_bound(cid, 8, 3)
        assert not packing_slack_violations(cid, 8, 3)


def test_preconditions():
    with pytest.raises(PreconditionError):
        construct("LIN5", 1, 2)
    with pytest.raises(PreconditionError):
        construct("UNI6", 3, 2)
    with pytest.raises(PreconditionError):
        construct("LIN6", 4, 0)
    with pytest.raises(InputError):
        construct("LB", 4, 1)
    with pytest.raises(InputError):
        construct("LIN9", 4, 1)
