"""Domino tiling counts computed directly from the cells of a region.

Nothing here touches digraphs or determinants; these routines are the
independent check on the determinant pipeline.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import BudgetExceeded
from .regions import Region

DEFAULT_MAX_CELLS = 36
DEFAULT_MAX_WIDTH = 30

Cell = tuple[int, int]


@dataclass(frozen=True)
class Tiling:
    """Dominoes as ``(cell, orientation)``; a horizontal domino covers the cell
    and its east neighbour, a vertical one the cell and its south neighbour."""

    dominoes: tuple[tuple[Cell, str], ...]

    def covered(self) -> list[Cell]:
        out = []
        for (x, y), o in self.dominoes:
            out += [(x, y), (x + 1, y) if o == "h" else (x, y - 1)]
        return out


def _cellset(region: Region | Iterable[Cell]) -> set[Cell]:
    return region.cells() if isinstance(region, Region) else set(region)


def color_balanced(cells: set[Cell]) -> bool:
    black = sum((x + y) % 2 for x, y in cells)
    return 2 * black == len(cells)


def enumerate_tilings(region: Region | Iterable[Cell], max_cells: int = DEFAULT_MAX_CELLS) -> list[Tiling]:
    """Every tiling, covering the first free cell (top row first, then west to east)."""
    cells = _cellset(region)
    if len(cells) > max_cells:
        raise BudgetExceeded(f"{len(cells)} cells exceeds the enumeration bound {max_cells}")
    order = sorted(cells, key=lambda c: (-c[1], c[0]))
    free = set(cells)
    placed: list[tuple[Cell, str]] = []
    out: list[Tiling] = []

    def rec(pos: int) -> None:
        while pos < len(order) and order[pos] not in free:
            pos += 1
        if pos == len(order):
            out.append(Tiling(tuple(placed)))
            return
        x, y = order[pos]
        for o, other in (("h", (x + 1, y)), ("v", (x, y - 1))):
            if other in free:
                free.discard((x, y))
                free.discard(other)
                placed.append(((x, y), o))
                rec(pos + 1)
                placed.pop()
                free.add((x, y))
                free.add(other)

    rec(0)
    return out


def count_tilings(region: Region | Iterable[Cell], max_width: int = DEFAULT_MAX_WIDTH) -> int:
    """Exact tiling count by a broken-profile sweep.

    The sweep runs along the longer side of the bounding box so the frontier
    is the shorter one.  Bit ``t`` of the state says whether the ``t``-th
    cell ahead of the cursor is already covered by a vertical domino.
    """
    cells = _cellset(region)
    if not cells:
        return 1
    if len(cells) % 2 or not color_balanced(cells):
        return 0
    xs = [x for x, _ in cells]
    ys = [y for _, y in cells]
    width = max(xs) - min(xs) + 1
    height = max(ys) - min(ys) + 1
    if width > height:
        # transpose so rows are the short direction
        cells = {(y, x) for x, y in cells}
        xs, ys, width, height = ys, xs, height, width
    if width > max_width:
        raise BudgetExceeded(f"frontier width {width} exceeds bound {max_width}")
    x0, y0 = min(xs), min(ys)
    grid = [[(x0 + c, y0 + r) in cells for c in range(width)] for r in range(height)]

    states = {0: 1}
    full = 1 << width
    for r in range(height):
        row = grid[r]
        below = grid[r + 1] if r + 1 < height else [False] * width
        for c in range(width):
            nxt: dict[int, int] = {}
            inside = row[c]
            for mask, ways in states.items():
                if mask & 1:
                    key = mask >> 1
                    nxt[key] = nxt.get(key, 0) + ways
                    continue
                if not inside:
                    key = mask >> 1
                    nxt[key] = nxt.get(key, 0) + ways
                    continue
                if c + 1 < width and row[c + 1] and not mask & 2:
                    key = (mask | 2) >> 1
                    nxt[key] = nxt.get(key, 0) + ways
                if below[c]:
                    key = (mask | full) >> 1
                    nxt[key] = nxt.get(key, 0) + ways
            states = nxt
    return states.get(0, 0)
