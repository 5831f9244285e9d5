"""Large and modified Schröder numbers as lattice-path counts.

Paths use unit steps east ``(1,0)``, north ``(0,1)`` and diagonal ``(1,1)``
and may not rise above ``y = x``.  The modified numbers additionally keep
every visited point strictly above ``y = x/2`` (``2y > x``); the weak reading
``2y >= x`` would give ``s(1,2) = 2``, which disagrees with the known table.
"""
from __future__ import annotations

from functools import lru_cache

from .linalg import Matrix


def _count(i: int, j: int, allowed) -> int:
    """Paths from (i,i) to (j,j) through points accepted by ``allowed``."""
    if j < i:
        return 0
    # ways[(x, y)] for x,y in [i, j]
    ways: dict[tuple[int, int], int] = {(i, i): 1}
    for x in range(i, j + 1):
        for y in range(i, x + 1):
            if (x, y) == (i, i) or not allowed(x, y):
                continue
            ways[(x, y)] = (ways.get((x - 1, y), 0) + ways.get((x, y - 1), 0)
                            + ways.get((x - 1, y - 1), 0))
    return ways.get((j, j), 0)


@lru_cache(maxsize=None)
def large_schroeder(m: int) -> int:
    """The m-th large Schröder number: 1, 2, 6, 22, 90, 394, ..."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return _count(0, m, lambda x, y: y <= x)


@lru_cache(maxsize=None)
def modified_schroeder(i: int, j: int) -> int:
    """Entry ``s(i, j)`` of the modified Schröder table (1 <= i <= j)."""
    if not 1 <= i <= j:
        raise ValueError("need 1 <= i <= j")
    return _count(i, j, lambda x, y: y <= x and 2 * y > x)


def schroeder_matrix(n: int) -> Matrix:
    """Upper unitriangular ``S_n`` with ``large_schroeder(d)`` on superdiagonal d."""
    if n < 1:
        raise ValueError("n must be positive")
    return Matrix([[large_schroeder(j - i) if j >= i else 0 for j in range(n)] for i in range(n)])


def modified_matrix(n: int) -> Matrix:
    if n < 1:
        raise ValueError("n must be positive")
    return Matrix([[modified_schroeder(i, j) if j >= i else 0 for j in range(1, n + 1)]
                   for i in range(1, n + 1)])


def table_tsv(m: Matrix) -> str:
    """Tab-separated dump, one matrix row per line."""
    return "".join("\t".join(str(x) for x in row) + "\n" for row in m.rows)
