"""Closed-form bounds on the [k]-Roman domination number of C_m □ P_n.

Upper bounds are returned in their exact floor/ceiling form.  Slopes (the
coefficient of n for fixed k) are exact rationals, with each floor or
ceiling of a multiple of n replaced by its density.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InputError, PreconditionError
from .ids import BoundId

SUPPORTED_M = (5, 6, 7, 8)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def uniform_weights(k: int, base: int) -> tuple[int, int]:
    """(interior, boundary) per-vertex weights of the uniform labeling.

    ``base`` is 4 for the plain uniform construction and 5 for the one that
    is later reduced on a packing.
    """
    interior = ceil_div(k + base, 5)
    boundary = ceil_div(k + 3 - interior, 3)
    return interior, boundary


def _packing_size(m: int, n: int) -> int:
    if m == 5:
        return n
    if m == 6:
        return 2 * ceil_div(n, 2)
    if m == 7:
        return n + 2
    return 2 * (n - n // 3)


def lower_bound(m: int, n: int, k: int) -> int:
    """(k+1) * ceil(mn/5).  The domination number is strictly larger."""
    if m < 3 or n < 1 or k < 1:
        raise InputError(f"need m >= 3, n >= 1, k >= 1; got m={m}, n={n}, k={k}")
    return (k + 1) * ceil_div(m * n, 5)


def applicable(bound: BoundId, n: int) -> bool:
    return n >= bound.min_n


def upper_bound(bound: BoundId | str, n: int, k: int) -> int:
    bound = BoundId.parse(bound)
    if bound is BoundId.LB:
        raise InputError("LB is a lower bound; use lower_bound()")
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if n < bound.min_n:
        raise PreconditionError(f"{bound} needs n >= {bound.min_n}, got n={n}")
    K = k + 1
    m = bound.m
    if bound is BoundId.LIN5:
        return n * K + 2 * k
    if bound is BoundId.LIN6:
        return ceil_div(4 * n, 3) * K + (K, 0, k)[n % 3]
    if bound is BoundId.LIN7:
        if n % 2:
            return (n + 1) * K + (n - 1) // 2 * K + 2 * k
        return n * K + n // 2 * K + 2 * k + 1
    if bound is BoundId.LIN8:
        return 2 * n * K - ((n - 2) // 5 + n // 5) + 2 * k
    if bound.family == "UNI":
        a, b = uniform_weights(k, 4)
        return m * (n - 2) * a + 2 * m * b
    a, b = uniform_weights(k, 5)
    return m * (n - 2) * a + 2 * m * b - _packing_size(m, n)


def relaxed_upper_bound(bound: BoundId | str, n: int, k: int) -> Fraction | None:
    """The ceiling-free rational relaxation printed for UNI5/PACK5/UNI6/PACK6."""
    bound = BoundId.parse(bound)
    if bound is BoundId.UNI5:
        return Fraction(3 * n * k + 27 * n + 2 * k - 2, 3)
    if bound is BoundId.PACK5:
        return Fraction(3 * n * k + 30 * n + 2 * k - 10, 3)
    if bound is BoundId.UNI6:
        return Fraction(6 * n * k + 54 * n + 4 * k - 4, 5)
    if bound is BoundId.PACK6:
        return Fraction(6 * n * k + 55 * n + 4 * k - (20 if n % 2 == 0 else 25), 5)
    return None


def all_upper_bounds(m: int, n: int, k: int) -> dict[BoundId, int]:
    if m not in SUPPORTED_M:
        raise PreconditionError(f"upper bounds exist for m in {SUPPORTED_M}, got {m}")
    return {b: upper_bound(b, n, k) for b in BoundId.upper(m) if applicable(b, n)}


def best_bound(m: int, n: int, k: int) -> tuple[int, frozenset[BoundId]]:
    """Smallest applicable upper bound and every id attaining it."""
    if n < 2:
        raise PreconditionError(f"no upper bound applies for n={n} < 2")
    values = all_upper_bounds(m, n, k)
    best = min(values.values())
    return best, frozenset(b for b, v in values.items() if v == best)


def priority_winner(values: dict[BoundId, int]) -> BoundId:
    """Break ties by family priority: a later family must be strictly smaller to win."""
    winner = None
    for b in BoundId.upper():
        if b in values and (winner is None or values[b] < values[winner]):
            winner = b
    assert winner is not None
    return winner


# ---------------------------------------------------------------- region grids


@dataclass(frozen=True)
class Cell:
    n: int
    k: int
    values: dict[BoundId, int]
    best: int
    argmin: frozenset[BoundId]

    @property
    def winner(self) -> BoundId:
        return priority_winner(self.values)


@dataclass(frozen=True)
class RegionGrid:
    m: int
    n_values: tuple[int, ...]
    k_values: tuple[int, ...]
    cells: dict[tuple[int, int], Cell]

    def __getitem__(self, nk: tuple[int, int]) -> Cell:
        return self.cells[nk]

    def iter_cells(self):
        for k in self.k_values:
            for n in self.n_values:
                yield self.cells[(n, k)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "n", "k", "bound_id", "value", "is_best"])
        for cell in self.iter_cells():
            for b in BoundId.upper(self.m):
                if b in cell.values:
                    writer.writerow(
                        [self.m, cell.n, cell.k, b.value, cell.values[b], int(b in cell.argmin)]
                    )
        return buf.getvalue()

    def to_records(self) -> list[dict]:
        return [
            {
                "m": self.m,
                "n": cell.n,
                "k": cell.k,
                "values": {b.value: v for b, v in cell.values.items()},
                "best": cell.best,
                "argmin": sorted(b.value for b in cell.argmin),
                "winner": cell.winner.value,
            }
            for cell in self.iter_cells()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), indent=1) + "\n"


def region_grid(m: int, n_values: Iterable[int], k_values: Iterable[int]) -> RegionGrid:
    ns = tuple(n_values)
    ks = tuple(k_values)
    if not ns or not ks:
        raise InputError("region grid needs nonempty n and k ranges")
    if min(ns) < 2:
        raise PreconditionError("region grids start at n = 2")
    cells = {}
    for k in ks:
        for n in ns:
            values = all_upper_bounds(m, n, k)
            best = min(values.values())
            cells[(n, k)] = Cell(n, k, values, best, frozenset(b for b, v in values.items() if v == best))
    return RegionGrid(m, ns, ks, cells)


# ---------------------------------------------------------------- asymptotics

_LINEAR_DENSITY = {5: Fraction(1), 6: Fraction(4, 3), 7: Fraction(3, 2), 8: Fraction(2)}
_PACKING_DENSITY = {5: Fraction(1), 6: Fraction(1), 7: Fraction(1), 8: Fraction(4, 3)}


def asymptotic_slope(bound: BoundId | str, k: int) -> Fraction:
    bound = BoundId.parse(bound)
    if bound is BoundId.LB:
        raise InputError("slope of LB is not defined per m; use an upper bound id")
    m = bound.m
    if bound.family == "LIN":
        slope = _LINEAR_DENSITY[m] * (k + 1)
        # the floor terms in the m = 8 bound remove 2 of every 5 fibres' worth
        return slope - Fraction(2, 5) if m == 8 else slope
    if bound.family == "UNI":
        return Fraction(m * uniform_weights(k, 4)[0])
    return m * uniform_weights(k, 5)[0] - _PACKING_DENSITY[m]


def crossover_threshold(
    m: int, challenger: BoundId | str, residue: int, cap: int = 2000
) -> int | None:
    """Least k = residue (mod 5) from which the challenger's slope stays below LINm's.

    Persistence is checked for every class member up to ``cap``; ``None``
    when the challenger is not ahead at the cap.
    """
    challenger = BoundId.parse(challenger)
    if challenger.family not in ("UNI", "PACK") or challenger.m != m:
        raise InputError(f"challenger must be UNI{m} or PACK{m}, got {challenger}")
    if not 0 <= residue < 5:
        raise InputError(f"residue must be in [0, 5), got {residue}")
    linear = BoundId(f"LIN{m}")
    ks = [k for k in range(1, cap + 1) if k % 5 == residue]
    threshold = None
    for k in reversed(ks):
        if asymptotic_slope(challenger, k) < asymptotic_slope(linear, k):
            threshold = k
        else:
            break
    return threshold


# Claimed thresholds: (residue-1 class vs UNIm, other classes vs PACKm).
CLAIMED_THRESHOLDS = {6: (31, 53), 7: (31, 78), 8: (16, 18)}


def expected_challenger(m: int, residue: int) -> BoundId:
    """The construction with the smaller slope of the two ceiling-type ones."""
    return BoundId(f"UNI{m}") if residue == 1 else BoundId(f"PACK{m}")


def threshold_report(m: int, cap: int = 2000) -> list[dict]:
    """Per-residue computed thresholds next to the claimed ones.

    ``claimed_in_class`` is the first class member at or above the claimed
    value; ``differs`` flags a mismatch with the computed threshold and
    ``claim_holds`` tells whether the claim is at least sufficient.
    """
    rows = []
    for residue in range(5):
        challenger = expected_challenger(m, residue)
        computed = crossover_threshold(m, challenger, residue, cap)
        claimed = None
        if m in CLAIMED_THRESHOLDS:
            claimed = CLAIMED_THRESHOLDS[m][0 if residue == 1 else 1]
        row = {
            "m": m,
            "residue": residue,
            "challenger": challenger.value,
            "computed": computed,
            "claimed": claimed,
        }
        if claimed is not None:
            in_class = claimed + (residue - claimed) % 5
            row["claimed_in_class"] = in_class
            row["differs"] = computed != in_class
            row["claim_holds"] = computed is not None and computed <= in_class
        rows.append(row)
    return rows
