from fractions import Fraction

import pytest

from cylroman.bounds import (
    all_upper_bounds,
    asymptotic_slope,
    best_bound,
    crossover_threshold,
    priority_winner,
    lower_bound,
    region_grid,
    relaxed_upper_bound,
    threshold_report,
    upper_bound,
)
from cylroman.errors import InputError, PreconditionError
from cylroman.ids import BoundId


@pytest.mark.parametrize("m,n,k,value", [(5, 4, 2, 12), (7, 3, 1, 10), (5, 1, 1, 2)])
def test_lower_bound(m, n, k, value):
    assert lower_bound(m, n, k) == value


@pytest.mark.parametrize(
    "bid,n,k,value",
    [("UNI5", 4, 22, 130), ("PACK5", 4, 22, 126), ("LIN5", 4, 22, 136), ("LIN7", 5, 1, 18),
     ("PACK6", 110, 53, 7846), ("LIN6", 110, 52, 7843)],
)
def test_upper_bound_examples(bid, n, k, value):
    assert upper_bound(bid, n, k) == value


@pytest.mark.parametrize("bid", ["UNI5", "PACK5", "UNI6", "PACK6"])
def test_relaxation_dominates_ceiling_form(bid):
    for n in range(4, 30):
        for k in range(1, 40):
            assert upper_bound(bid, n, k) <= relaxed_upper_bound(bid, n, k)


def test_relaxation_absent_for_other_ids():
    assert relaxed_upper_bound("LIN5", 4, 1) is None


@pytest.mark.parametrize(
    "m,n,k,best,argmin",
    [(5, 10, 1, 22, {"LIN5"}), (6, 110, 52, 7843, {"LIN6"}), (6, 110, 53, 7846, {"PACK6"})],
)
def test_best_bound(m, n, k, best, argmin):
    value, ids = best_bound(m, n, k)
    assert value == best and {b.value for b in ids} == argmin


def test_applicability():
    assert set(all_upper_bounds(6, 3, 1)) == {BoundId.LIN6}
    with pytest.raises(PreconditionError):
        best_bound(5, 1, 1)
    with pytest.raises(PreconditionError):
        all_upper_bounds(9, 5, 1)
    with pytest.raises(InputError):
        upper_bound("LB", 5, 1)


def test_tie_break_prefers_earlier_family():
    assert priority_winner({BoundId.LIN5: 10, BoundId.UNI5: 10, BoundId.PACK5: 10}) is BoundId.LIN5
    assert priority_winner({BoundId.LIN5: 10, BoundId.UNI5: 11, BoundId.PACK5: 9}) is BoundId.PACK5


def test_region_grid_examples():
    g = region_grid(5, range(4, 21), (1, 2))
    assert all(c.argmin == {BoundId.LIN5} for c in g.iter_cells())
    g8 = region_grid(8, range(4, 21), (1, 2))
    assert all(c.winner is BoundId.LIN8 for c in g8.iter_cells())
    g6 = region_grid(6, range(100, 111), (52, 53))
    assert all(g6[(n, 52)].argmin == {BoundId.LIN6} for n in range(102, 111))
    assert all(g6[(n, 53)].argmin == {BoundId.PACK6} for n in range(100, 111))


def test_region_csv_schema_and_determinism():
    g = region_grid(5, [4, 5], [1])
    text = g.to_csv()
    lines = text.splitlines()
    assert lines[0] == "m,n,k,bound_id,value,is_best"
    assert lines[1] == "5,4,1,LIN5,10,1"
    assert len(lines) == 1 + 2 * 3
    assert text == region_grid(5, [4, 5], [1]).to_csv()
    assert g.to_json() == region_grid(5, [4, 5], [1]).to_json()


@pytest.mark.parametrize(
    "bid,k,slope",
    [("LIN6", 53, Fraction(72)), ("PACK6", 53, Fraction(71)), ("UNI7", 31, Fraction(49)),
     ("LIN7", 31, Fraction(48)), ("LIN8", 1, Fraction(18, 5)), ("PACK8", 10, Fraction(68, 3))],
)
def test_slopes(bid, k, slope):
    assert asymptotic_slope(bid, k) == slope


def test_slope_matches_large_n_growth():
    for bid in BoundId.upper():
        for k in (1, 7, 30):
            n = 3000
            growth = Fraction(upper_bound(bid, n + 30, k) - upper_bound(bid, n, k), 30)
            assert growth == asymptotic_slope(bid, k)


def test_thresholds():
    assert crossover_threshold(6, "UNI6", 1) == 31
    assert all(crossover_threshold(5, b, r) is None for b in ("UNI5", "PACK5") for r in range(5))
    # frozen computed per-residue values (residues 0..4)
    computed = {m: [row["computed"] for row in threshold_report(m)] for m in (6, 7, 8)}
    assert computed == {6: [30, 31, 57, 48, 39], 7: [50, 46, 92, 78, 64], 8: [15, 16, 27, 23, 19]}


def test_threshold_discrepancy_flags():
    flags = {(r["m"], r["residue"]): r["differs"] for m in (6, 7, 8) for r in threshold_report(m)}
    assert flags[(6, 1)] is False
    assert flags[(7, 1)] is True and flags[(8, 2)] is True
    assert flags[(7, 3)] is False and flags[(8, 1)] is False


def test_threshold_input_checks():
    with pytest.raises(InputError):
        crossover_threshold(6, "LIN6", 1)
    with pytest.raises(InputError):
        crossover_threshold(6, "UNI7", 1)
    with pytest.raises(InputError):
        crossover_threshold(6, "UNI6", 5)
