"""Aztec diamonds, odd pillows and generalized Aztec pillows.

Coordinates: the cell ``(x, y)`` is the unit square ``[x, x+1] × [y, y+1]``.
Regions are placed so the central belt lies between row ``y = 0`` (lowest
row of the top half) and row ``y = -1`` (highest row of the bottom half).
A domino is keyed by ``(y, x_left)`` and covers ``(x_left, y)`` and
``(x_left + 1, y)``.

Digraph construction (from the natural all-horizontal tiling): a top-half
domino at ``(y, x)`` points east to ``(y, x+2)``, northeast to ``(y+1, x+1)``
and southeast to ``(y-1, x+1)``; bottom-half dominoes point west, southwest
and northwest.  Edges never cross the belt; crossing happens only through the
vertical pairs of row 0 and row -1.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import RegionError
from .graph import Dag, HamburgerGraph

Row = tuple[int, int, int]  # (y, x_start, length)
Domino = tuple[int, int]  # (y, x_left)


@dataclass(frozen=True)
class Region:
    """Union of unit squares given by one interval per row, top row first."""

    rows: tuple[Row, ...]

    def __init__(self, rows: Iterable[Sequence[int]]):
        norm = sorted(((int(y), int(x), int(n)) for y, x, n in rows), reverse=True)
        if not norm:
            raise RegionError("region has no rows")
        ys = [r[0] for r in norm]
        if len(set(ys)) != len(ys):
            raise RegionError("duplicate row index")
        if ys != list(range(ys[0], ys[0] - len(ys), -1)):
            raise RegionError("rows must be contiguous in y")
        if any(n <= 0 for _, _, n in norm):
            raise RegionError("row lengths must be positive")
        object.__setattr__(self, "rows", tuple(norm))

    @classmethod
    def from_cells(cls, cells: Iterable[tuple[int, int]]) -> "Region":
        by_row: dict[int, list[int]] = {}
        for x, y in cells:
            by_row.setdefault(y, []).append(x)
        rows = []
        for y, xs in by_row.items():
            xs.sort()
            if xs[-1] - xs[0] + 1 != len(xs):
                raise RegionError(f"row {y} is not a single interval")
            rows.append((y, xs[0], len(xs)))
        return cls(rows)

    def cells(self) -> set[tuple[int, int]]:
        return {(x, y) for y, x0, n in self.rows for x in range(x0, x0 + n)}

    @property
    def cell_count(self) -> int:
        return sum(n for _, _, n in self.rows)

    def row(self, y: int) -> Row | None:
        top = self.rows[0][0]
        idx = top - y
        return self.rows[idx] if 0 <= idx < len(self.rows) else None

    def violations(self) -> list[str]:
        """Problems that stop the region from behaving like a pillow."""
        out = []
        cells = self.cells()
        for x in sorted({c[0] for c in cells}):
            ys = sorted(y for cx, y in cells if cx == x)
            if ys[-1] - ys[0] + 1 != len(ys):
                out.append(f"column {x} is not contiguous")
        for y, x0, n in self.rows:
            if n % 2:
                out.append(f"row {y} has odd length {n}")
        top = [(x0 + y) % 2 for y, x0, _ in self.rows if y >= 0]
        bottom = [(x0 + y) % 2 for y, x0, _ in self.rows if y < 0]
        if len(set(top)) > 1 or len(set(bottom)) > 1 or (top and bottom and top[0] == bottom[0]):
            out.append("row offsets are inconsistent with the checkerboard of the natural tiling")
        return out

    def render(self) -> str:
        """ASCII map, ``#`` for cells and ``.`` for empty squares, top row first."""
        lo = min(x0 for _, x0, _ in self.rows)
        hi = max(x0 + n for _, x0, n in self.rows)
        lines = []
        for _, x0, n in self.rows:
            lines.append("." * (x0 - lo) + "#" * n + "." * (hi - x0 - n))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"kind": "explicit", "rows": [list(r) for r in self.rows]}


def aztec_diamond(n: int) -> Region:
    """Cells whose four corners satisfy ``|x| + |y| <= n + 1``."""
    if n < 1:
        raise RegionError("Aztec diamond order must be at least 1")
    rows = []
    for b in range(n):
        rows.append((b, -(n - b), 2 * (n - b)))
        rows.append((-1 - b, -(n - b), 2 * (n - b)))
    return Region(rows)


def q_pillow(n: int, q: int) -> Region:
    """Odd pillow with ``2n`` cells in each central row.

    A cell belongs to the region when all four of its corners satisfy
    ``|x + y| <= n + 1`` and ``|q·y - x| <= n + q``; for ``q = 1`` this is
    exactly the Aztec diamond.
    """
    if n < 1:
        raise RegionError("pillow order must be at least 1")
    if q < 1 or q % 2 == 0:
        raise RegionError(f"pillow step must be a positive odd integer, got {q}")
    span = n + q + 1
    cells = []
    for y in range(-span, span):
        for x in range(-span * q - span, span * q + span):
            corners = ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))
            if all(abs(cx + cy) <= n + 1 and abs(q * cy - cx) <= n + q for cx, cy in corners):
                cells.append((x, y))
    return Region.from_cells(cells)


@dataclass(frozen=True)
class PillowSpec:
    """Boundary step walk of a generalized Aztec pillow.

    The central rows are ``[-n, n)``.  Moving one row away from the belt,
    the left end moves right by the next ``*_left`` step and the right end
    moves left by the next ``*_right`` step.  Every step must be odd.
    """

    n: int
    top_left: tuple[int, ...] = ()
    top_right: tuple[int, ...] = ()
    bottom_left: tuple[int, ...] = ()
    bottom_right: tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("top_left", "top_right", "bottom_left", "bottom_right"):
            object.__setattr__(self, name, tuple(int(s) for s in getattr(self, name)))

    @classmethod
    def uniform(cls, n: int, q: int) -> "PillowSpec":
        """The step walk of ``q_pillow(n, q)``: q-steps on the top-left and
        bottom-right diagonals, unit steps on the other two."""
        h = 1
        while 2 * n - (q + 1) * h > 0:
            h += 1
        return cls(n, (q,) * (h - 1), (1,) * (h - 1), (1,) * (h - 1), (q,) * (h - 1))

    def to_dict(self) -> dict:
        return {"kind": "generalized", "n": self.n, "top_left": list(self.top_left),
                "top_right": list(self.top_right), "bottom_left": list(self.bottom_left),
                "bottom_right": list(self.bottom_right)}


def generalized_pillow(spec: PillowSpec) -> Region:
    if spec.n < 1:
        raise RegionError("pillow order must be at least 1")
    for name in ("top_left", "top_right", "bottom_left", "bottom_right"):
        for s in getattr(spec, name):
            if s < 1 or s % 2 == 0:
                raise RegionError(f"{name} step {s} is not a positive odd integer")
    if len(spec.top_left) != len(spec.top_right):
        raise RegionError("top boundary does not close: left and right step counts differ")
    if len(spec.bottom_left) != len(spec.bottom_right):
        raise RegionError("bottom boundary does not close: left and right step counts differ")

    rows = []
    for sign, lefts, rights in ((1, spec.top_left, spec.top_right), (-1, spec.bottom_left, spec.bottom_right)):
        lo, hi = -spec.n, spec.n
        y = 0 if sign > 0 else -1
        rows.append((y, lo, hi - lo))
        for dl, dr in zip(lefts, rights):
            lo, hi = lo + dl, hi - dr
            y += sign
            if hi - lo <= 0:
                raise RegionError(f"row {y} would be empty; the boundary closes before the steps run out")
            rows.append((y, lo, hi - lo))
    region = Region(rows)
    problems = region.violations()
    if problems:
        raise RegionError("; ".join(problems))
    return region


def random_pillow_spec(rng: random.Random, max_n: int = 5, steps: Sequence[int] = (1, 3, 5)) -> PillowSpec:
    """A random valid generalized pillow spec (used for test corpora)."""
    n = rng.randint(1, max_n)
    walks = []
    for _ in range(2):
        lefts, rights = [], []
        width = 2 * n
        target_rows = rng.randint(0, n)
        while len(lefts) < target_rows:
            options = [(a, b) for a in steps for b in steps if width - a - b > 0]
            if not options:
                break
            a, b = rng.choice(options)
            lefts.append(a)
            rights.append(b)
            width -= a + b
        walks.append((tuple(lefts), tuple(rights)))
    return PillowSpec(n, walks[0][0], walks[0][1], walks[1][0], walks[1][1])


@dataclass(frozen=True)
class NaturalTiling:
    top: tuple[Domino, ...]
    bottom: tuple[Domino, ...]

    @property
    def dominoes(self) -> tuple[Domino, ...]:
        return self.top + self.bottom


def natural_tiling(region: Region) -> NaturalTiling:
    top, bottom = [], []
    for y, x0, n in region.rows:
        if n % 2:
            raise RegionError(f"row {y} has odd length {n}; no all-horizontal tiling")
        for x in range(x0, x0 + n, 2):
            (top if y >= 0 else bottom).append((y, x))
    return NaturalTiling(tuple(sorted(top)), tuple(sorted(bottom, key=lambda d: (-d[0], d[1]))))


@dataclass(frozen=True)
class RegionDigraph:
    graph: HamburgerGraph
    top: tuple[Domino, ...]  # G1 vertex id -> domino
    bottom: tuple[Domino, ...]  # G2 vertex id -> domino

    def labelled_edges(self) -> set[tuple[Domino, Domino]]:
        """Edge set keyed by domino positions, connecting edges included."""
        out = {(self.top[u], self.top[v]) for u, v, _ in self.graph.g1.edges}
        out |= {(self.bottom[u], self.bottom[v]) for u, v, _ in self.graph.g2.edges}
        for a, b in zip(self.graph.g1.distinguished, self.graph.g2.distinguished):
            out.add((self.top[a], self.bottom[b]))
            out.add((self.bottom[b], self.top[a]))
        return out


def region_digraph(region: Region) -> RegionDigraph:
    tiling = natural_tiling(region)
    if not tiling.top or not tiling.bottom:
        raise RegionError("both halves of the region must be non-empty")
    colors = {(x + y) % 2 for y, x in tiling.top}
    colors_b = {(x + y) % 2 for y, x in tiling.bottom}
    if len(colors) != 1 or len(colors_b) != 1 or colors == colors_b:
        raise RegionError("row offsets are inconsistent with the checkerboard of the natural tiling")
    r0, r1 = region.row(0), region.row(-1)
    if r0 is None or r1 is None or r0[1:] != r1[1:]:
        raise RegionError("central belt rows 0 and -1 must be aligned and of equal length")

    top_id = {d: i for i, d in enumerate(tiling.top)}
    bot_id = {d: i for i, d in enumerate(tiling.bottom)}
    e1 = []
    for (y, x), i in top_id.items():
        for t in ((y, x + 2), (y + 1, x + 1), (y - 1, x + 1)):
            if t in top_id:
                e1.append((i, top_id[t]))
    e2 = []
    for (y, x), i in bot_id.items():
        for t in ((y, x - 2), (y - 1, x - 1), (y + 1, x - 1)):
            if t in bot_id:
                e2.append((i, bot_id[t]))
    # tiling.top is sorted by (y, x), so row 0 comes first, west to east
    k = r0[2] // 2
    v = [top_id[(0, r0[1] + 2 * i)] for i in range(k)]
    w = [bot_id[(-1, r1[1] + 2 * i)] for i in range(k)]
    g1 = Dag(len(tiling.top), sorted(e1), v)
    g2 = Dag(len(tiling.bottom), sorted(e2), w)
    return RegionDigraph(HamburgerGraph(g1, g2), tiling.top, tiling.bottom)


def build_digraph(region: Region) -> HamburgerGraph:
    return region_digraph(region).graph


def enclosing_diamond_order(region: Region) -> int:
    """Smallest N such that the region's natural dominoes are natural dominoes of AD_N."""
    parity = {(x0 + y) % 2 for y, x0, _ in region.rows if y >= 0}
    if len(parity) != 1:
        raise RegionError("region has no consistent top-half parity")
    p = parity.pop()
    n = max(1, max(region.rows[0][0] + 1, -region.rows[-1][0]))
    while True:
        if n % 2 == p:
            diamond = aztec_diamond(n)
            if region.cells() <= diamond.cells():
                return n
        n += 1


def region_from_dict(data: dict) -> Region:
    """Build a region from a parsed region file (see README for the schema)."""
    kind = data.get("kind")
    if kind == "diamond":
        return aztec_diamond(int(data["n"]))
    if kind == "pillow":
        return q_pillow(int(data["n"]), int(data.get("q", 3)))
    if kind == "generalized":
        spec = PillowSpec(int(data["n"]), data.get("top_left", ()), data.get("top_right", ()),
                          data.get("bottom_left", ()), data.get("bottom_right", ()))
        return generalized_pillow(spec)
    if kind == "explicit":
        return Region(data["rows"])
    raise RegionError(f"unknown region kind {kind!r}")
