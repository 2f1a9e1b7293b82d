"""Command-line entry point: ``cylroman <command> ...``.

Data goes to stdout (or ``--out``), diagnostics and timings to stderr.
Exit status: 0 success, 1 domain failure, 2 usage error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import bounds, constructions, efficient, exact, packing
from .errors import BudgetExceeded, ConstructionError, InputError
from .grid import CylinderGrid
from .ids import BoundId
from .labeling import Labeling
from .svg import region_svg

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
REPORT_EXACT_BUDGET = 1 << 20


class _Failure(Exception):
    """Domain failure whose data has already been emitted."""


def parse_range(text: str) -> list[int]:
    """``7``, ``4..20`` (inclusive) or a comma list of either."""
    values: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = (int(t) for t in part.split("..", 1))
                if hi < lo:
                    raise InputError(f"empty range {part!r}")
                values.extend(range(lo, hi + 1))
            else:
                values.append(int(part))
    except ValueError:
        raise InputError(f"cannot parse range {text!r}") from None
    if not values:
        raise InputError(f"empty range {text!r}")
    return values


def _single(text: str, name: str) -> int:
    values = parse_range(text)
    if len(values) != 1:
        raise InputError(f"--{name} takes a single value here, got {text!r}")
    return values[0]


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, indent=1) + "\n"


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


# ---------------------------------------------------------------- commands


def cmd_construct(args) -> None:
    n, k = _single(args.n, "n"), _single(args.k, "k")
    lab = constructions.construct(args.id, n, k)
    if args.format == "json":
        _emit(args, _dump({"id": BoundId.parse(args.id).value, "n": n, "k": k,
                           "weight": lab.weight(), "matrix": lab.to_matrix().tolist()}))
    else:
        _emit(args, lab.to_text())


def cmd_verify(args) -> None:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    lab = Labeling.from_text(text)
    report = lab.violations()
    if args.format == "json":
        _emit(args, _dump({
            "valid": not report,
            "weight": lab.weight(),
            "violations": [
                {"vertex": list(v.vertex), "value": v.value, "sum": v.neighborhood_sum,
                 "active": v.active_neighbor_count, "required": v.required}
                for v in report
            ],
        }))
    else:
        _emit(args, f"valid weight={lab.weight()}\n" if not report else report.to_text())
    if report:
        _note(f"invalid: {len(report)} violating vertices")
        raise _Failure


def cmd_exact(args) -> None:
    m, n, k = _single(args.m, "m"), _single(args.n, "n"), _single(args.k, "k")
    grid = CylinderGrid(m, n)
    start = time.perf_counter()
    if args.method == "brute":
        res = exact.gamma_brute(grid, k, args.budget)
    else:
        restrict = (not args.no_restrict) and k >= 2
        res = exact.gamma_profile_dp(grid, k, restrict, args.budget)
    elapsed = time.perf_counter() - start
    out = {"gamma": res.gamma, "witness": res.witness.to_text(), "method": res.method,
           "alphabet": list(res.alphabet)}
    if args.timing:
        out["elapsed"] = round(elapsed, 6)
    _note(f"elapsed {elapsed:.3f}s")
    _emit(args, _dump(out))


def _bounds_record(m: int, n: int, k: int) -> dict:
    values = bounds.all_upper_bounds(m, n, k)
    best, argmin = bounds.best_bound(m, n, k)
    return {
        "m": m, "n": n, "k": k,
        "lower_bound": bounds.lower_bound(m, n, k),
        "upper_bounds": {b.value: v for b, v in values.items()},
        "best": best,
        "argmin": sorted(b.value for b in argmin),
    }


def cmd_bounds(args) -> None:
    m = _single(args.m, "m")
    records = [_bounds_record(m, n, k) for k in parse_range(args.k) for n in parse_range(args.n)]
    _emit(args, _dump(records[0] if len(records) == 1 else records))


def cmd_regions(args) -> None:
    grid = bounds.region_grid(_single(args.m, "m"), parse_range(args.n), parse_range(args.k))
    if args.format == "csv":
        _emit(args, grid.to_csv())
    elif args.format == "json":
        _emit(args, grid.to_json())
    else:
        _emit(args, region_svg(grid))


def cmd_packing(args) -> None:
    m, n = _single(args.m, "m"), _single(args.n, "n")
    grid = CylinderGrid(m, n)
    modes = [x for x in ("exact", "formula", "pattern") if getattr(args, x)] or ["exact"]
    parts: list[str] = []
    record: dict = {"m": m, "n": n}
    for mode in modes:
        if mode == "exact":
            size, witness = packing.max_packing(grid, args.budget)
            record["exact"] = {"size": size, "members": [list(v) for v in witness.sorted()]}
            parts.append(f"exact {size}\n{witness.render()}")
        elif mode == "formula":
            size = packing.packing_formula(m, n)
            record["formula"] = size
            parts.append(f"formula {size}\n")
        else:
            pat = packing.packing_pattern(m, n)
            record["pattern"] = {"size": len(pat), "members": [list(v) for v in pat.sorted()]}
            parts.append(f"pattern {len(pat)}\n{pat.render()}")
    _emit(args, _dump(record) if args.format == "json" else "".join(parts))


def cmd_efficient(args) -> None:
    m, n = _single(args.m, "m"), _single(args.n, "n")
    grid = CylinderGrid(m, n)
    eds = efficient.find_efficient_dominating_set(grid)
    predicted = efficient.admits_efficient_characterization(m, n)
    out: dict = {
        "exists": eds is not None,
        "witness": [list(v) for v in eds.sorted()] if eds else None,
        "characterization": predicted,
        "characterization_agrees": (eds is not None) == predicted,
    }
    if args.k is not None:
        k = _single(args.k, "k")
        lab = efficient.exists_constant_sum_krdf(grid, k)
        out["k"] = k
        out["constant_sum_exists"] = lab is not None
        out["constant_sum_witness"] = lab.to_text() if lab is not None else None
    _emit(args, _dump(out))


def _exact_entry(m: int, n: int, k: int, budget: int) -> dict | None:
    try:
        res = exact.gamma(CylinderGrid(m, n), k, budget=budget)
    except BudgetExceeded:
        return None
    return {"gamma": res.gamma, "method": res.method}


def cmd_report(args) -> None:
    m = _single(args.m, "m")
    records = []
    for k in parse_range(args.k):
        for n in parse_range(args.n):
            rec = _bounds_record(m, n, k)
            ex = _exact_entry(m, n, k, args.budget)
            rec["exact"] = ex
            if ex is not None:
                rec["sandwich_ok"] = rec["lower_bound"] < ex["gamma"] <= rec["best"]
            records.append(rec)
    _emit(args, _dump(records))


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cylroman",
        description="[k]-Roman domination on the cylinder C_m x P_n: constructions, "
        "exact values, bounds and region plots.",
        epilog="Ranges: 7, 4..20 or comma lists such as 2,5..8. "
        "Default exact budget comes from CYLROMAN_BUDGET.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, out: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_, description=help_)
        if out:
            sp.add_argument("--out", help="write data to this file instead of stdout")
        return sp

    sp = add("construct", "build and verify a construction, print its matrix")
    sp.add_argument("--id", required=True, help="LIN5..LIN8, UNI5..UNI8, PACK5..PACK8")
    sp.add_argument("--n", required=True)
    sp.add_argument("--k", required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_construct)

    sp = add("verify", "check a labeling file (header 'm n k' then m rows)")
    sp.add_argument("file", help="matrix file, or - for stdin")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_verify)

    sp = add("exact", "exact domination number with a minimum witness")
    for name in ("m", "n", "k"):
        sp.add_argument(f"--{name}", required=True)
    sp.add_argument("--method", choices=("dp", "brute"), default="dp")
    sp.add_argument("--no-restrict", action="store_true",
                    help="let the DP use label 1 (always the case for k = 1)")
    sp.add_argument("--budget", type=_positive, default=exact.DEFAULT_BUDGET)
    sp.add_argument("--timing", action="store_true", help="include elapsed seconds in the JSON")
    sp.set_defaults(func=cmd_exact)

    sp = add("bounds", "lower bound, all applicable upper bounds and their argmin")
    for name in ("m", "n", "k"):
        sp.add_argument(f"--{name}", required=True)
    sp.set_defaults(func=cmd_bounds)

    sp = add("regions", "winning bound over an (n, k) grid")
    for name in ("m", "n", "k"):
        sp.add_argument(f"--{name}", required=True)
    sp.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    sp.set_defaults(func=cmd_regions)

    sp = add("packing", "packing number: exact search, closed form or explicit pattern")
    sp.add_argument("--m", required=True)
    sp.add_argument("--n", required=True)
    sp.add_argument("--exact", action="store_true")
    sp.add_argument("--formula", action="store_true")
    sp.add_argument("--pattern", action="store_true")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--budget", type=_positive, default=packing.DEFAULT_PACKING_BUDGET)
    sp.set_defaults(func=cmd_packing)

    sp = add("efficient", "efficient dominating set and constant-sum function search")
    sp.add_argument("--m", required=True)
    sp.add_argument("--n", required=True)
    sp.add_argument("--k", help="also search a function with every N[v]-sum equal to k+1")
    sp.set_defaults(func=cmd_efficient)

    sp = add("report", "bounds plus exact value (when within budget) per (n, k)")
    for name in ("m", "n", "k"):
        sp.add_argument(f"--{name}", required=True)
    sp.add_argument("--budget", type=_positive, default=REPORT_EXACT_BUDGET,
                    help="DP layer budget; larger instances report exact=null")
    sp.set_defaults(func=cmd_report)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        args.func(args)
    except _Failure:
        return EXIT_DOMAIN
    except ConstructionError as exc:
        _note(str(exc))
        sys.stderr.write(exc.report.to_text())
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        _note(f"budget exceeded: {exc}")
        return EXIT_BUDGET
    except (InputError, OSError) as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
