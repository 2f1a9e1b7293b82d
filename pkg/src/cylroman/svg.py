"""Dependency-free SVG rendering of bound-region grids.

One rect per (n, k) cell, n along x and k growing upward.  The fill is a
hatch pattern keyed by the cell's winning family.  Output is a pure function of the grid.
"""
from __future__ import annotations

from .bounds import RegionGrid

CELL = 12
MARGIN = 40
LEGEND_WIDTH = 120

# family -> (pattern id, pattern body, legend label)
_PATTERNS = {
    "LIN": (
        "hatch-lin",
        '<path d="M0,6 L6,0" stroke="#1f4e9c" stroke-width="1.2"/>',
        "linear",
    ),
    "UNI": (
        "hatch-uni",
        '<path d="M3,0 L3,6" stroke="#b5451b" stroke-width="1.2"/>',
        "uniform",
    ),
    "PACK": (
        "hatch-pack",
        '<path d="M0,0 L6,6 M0,6 L6,0" stroke="#2f7d32" stroke-width="1"/>',
        "packing-reduced",
    ),
}


def region_svg(grid: RegionGrid) -> str:
    cols, rows = len(grid.n_values), len(grid.k_values)
    width = 2 * MARGIN + cols * CELL + LEGEND_WIDTH
    height = 2 * MARGIN + rows * CELL
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        "<defs>",
    ]
    for pid, body, _ in _PATTERNS.values():
        out.append(
            f'<pattern id="{pid}" width="6" height="6" patternUnits="userSpaceOnUse">'
            f'<rect width="6" height="6" fill="white"/>{body}</pattern>'
        )
    out.append("</defs>")
    out.append(f'<rect width="{width}" height="{height}" fill="white"/>')
    for ci, n in enumerate(grid.n_values):
        for ri, k in enumerate(grid.k_values):
            cell = grid[(n, k)]
            winner = cell.winner
            pid = _PATTERNS[winner.family][0]
            x = MARGIN + ci * CELL
            y = MARGIN + (rows - 1 - ri) * CELL
            out.append(
                f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="url(#{pid})" '
                f'stroke="#888" stroke-width="0.3"><title>n={n} k={k} {winner.value}='
                f"{cell.best}</title></rect>"
            )
    base_y = MARGIN + rows * CELL
    out.append(
        f'<text x="{MARGIN + cols * CELL / 2}" y="{base_y + 24}" font-size="11" '
        f'text-anchor="middle" font-family="sans-serif">n</text>'
    )
    out.append(
        f'<text x="{MARGIN - 24}" y="{MARGIN + rows * CELL / 2}" font-size="11" '
        f'text-anchor="middle" font-family="sans-serif">k</text>'
    )
    out.append(
        f'<text x="{MARGIN}" y="{MARGIN - 14}" font-size="12" font-family="sans-serif">'
        f"C_{grid.m} x P_n: n {grid.n_values[0]}..{grid.n_values[-1]}, "
        f"k {grid.k_values[0]}..{grid.k_values[-1]}</text>"
    )
    lx = 2 * MARGIN + cols * CELL - 20
    for i, (family, (pid, _, label)) in enumerate(_PATTERNS.items()):
        ly = MARGIN + i * 22
        out.append(
            f'<rect x="{lx}" y="{ly}" width="16" height="16" fill="url(#{pid})" stroke="#444"/>'
        )
        out.append(
            f'<text x="{lx + 22}" y="{ly + 12}" font-size="11" font-family="sans-serif">'
            f"{family}{grid.m} {label}</text>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
