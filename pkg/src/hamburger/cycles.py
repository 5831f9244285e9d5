"""Brute-force cycle systems of hamburger graphs.

This is the ground truth the determinant is checked against, so it works on
the combined digraph directly and never looks at path-count matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import BudgetExceeded
from .graph import AnyHamburger, HamburgerGraph

DEFAULT_MAX_VERTICES = 64
DEFAULT_MAX_SYSTEMS = 10**7

# edge kinds in the combined graph
G1_EDGE, G2_EDGE, V_TO_W, W_TO_V = "g1", "g2", "vw", "wv"


@dataclass(frozen=True)
class CombinedGraph:
    """Both halves plus connecting edges on one vertex set.

    G1 keeps its ids; G2 ids are shifted by ``offset``.  ``edges`` entries are
    ``(u, v, weight, kind)``.
    """

    num_vertices: int
    offset: int
    edges: tuple[tuple[int, int, Fraction, str], ...]
    labels: tuple[str, ...]


def combined_graph(h: AnyHamburger) -> CombinedGraph:
    if isinstance(h, HamburgerGraph):
        h = h.as_generalized()
    g1, g2, k = h.g1, h.g2, h.k
    off = g1.num_vertices
    edges = [(u, v, w, G1_EDGE) for u, v, w in g1.edges]
    edges += [(u + off, v + off, w, G2_EDGE) for u, v, w in g2.edges]
    for i in range(k):
        v_i = g1.distinguished[i]
        edges.append((v_i, g2.distinguished[h.forward[i] - 1] + off, h.forward_weights[i], V_TO_W))
        w_i = g2.distinguished[i] + off
        edges.append((w_i, g1.distinguished[h.backward[i] - 1], h.backward_weights[i], W_TO_V))

    labels = [f"a{x}" for x in range(g1.num_vertices)] + [f"b{x}" for x in range(g2.num_vertices)]
    for i, x in enumerate(g1.distinguished):
        labels[x] = f"v{i + 1}"
    for i, x in enumerate(g2.distinguished):
        labels[x + off] = f"w{k + i + 1}"
    return CombinedGraph(off + g2.num_vertices, off, tuple(edges), tuple(labels))


@dataclass(frozen=True)
class SimpleCycle:
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    weight: Fraction
    crossings: int  # edges travelling from the G2 side to the G1 side

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m


@dataclass(frozen=True)
class CycleSystem:
    cycles: tuple[SimpleCycle, ...]

    @property
    def l(self) -> int:  # noqa: E743
        return sum(c.crossings for c in self.cycles)

    @property
    def m(self) -> int:
        return len(self.cycles)

    @property
    def sign(self) -> int:
        return -1 if (self.l + self.m) % 2 else 1

    @property
    def weight(self) -> Fraction:
        w = Fraction(1)
        for c in self.cycles:
            w *= c.weight
        return w


def _check_size(g: CombinedGraph, max_vertices: int) -> None:
    if g.num_vertices > max_vertices:
        raise BudgetExceeded(f"combined graph has {g.num_vertices} vertices, bound is {max_vertices}")


def enumerate_cycles(h: AnyHamburger, max_vertices: int = DEFAULT_MAX_VERTICES,
                     max_cycles: int = DEFAULT_MAX_SYSTEMS) -> list[SimpleCycle]:
    """Every simple directed cycle once, rotated to start at its least vertex.

    For each start ``s`` the search is confined to vertices ``> s`` that can
    still get back to ``s`` inside that subgraph, so dead branches are cut
    before they are entered.
    """
    g = combined_graph(h)
    _check_size(g, max_vertices)
    n = g.num_vertices
    out_adj: list[list[int]] = [[] for _ in range(n)]
    in_adj: list[list[int]] = [[] for _ in range(n)]
    for idx, (u, v, _, _) in enumerate(g.edges):
        out_adj[u].append(idx)
        in_adj[v].append(idx)

    cycles: list[SimpleCycle] = []
    for s in range(n):
        # vertices >= s that reach s using only vertices >= s
        live = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for idx in in_adj[x]:
                u = g.edges[idx][0]
                if u > s and u not in live:
                    live.add(u)
                    stack.append(u)
        path = [s]
        on_path = {s}
        edge_path: list[int] = []

        def dfs(x: int) -> None:
            for idx in out_adj[x]:
                v = g.edges[idx][1]
                if v == s:
                    eids = tuple(edge_path + [idx])
                    wt = Fraction(1)
                    cross = 0
                    for e in eids:
                        wt *= g.edges[e][2]
                        cross += g.edges[e][3] == W_TO_V
                    cycles.append(SimpleCycle(tuple(path), eids, wt, cross))
                    if len(cycles) > max_cycles:
                        raise BudgetExceeded(f"more than {max_cycles} simple cycles")
                elif v in live and v not in on_path:
                    path.append(v)
                    on_path.add(v)
                    edge_path.append(idx)
                    dfs(v)
                    edge_path.pop()
                    on_path.discard(v)
                    path.pop()

        dfs(s)
    return cycles


def iter_systems(h: AnyHamburger, max_vertices: int = DEFAULT_MAX_VERTICES,
                 max_systems: int = DEFAULT_MAX_SYSTEMS,
                 cycles: list[SimpleCycle] | None = None) -> Iterator[CycleSystem]:
    """Yield every vertex-disjoint cycle system, the empty one first."""
    if cycles is None:
        cycles = enumerate_cycles(h, max_vertices, max_systems)
    masks = [c.mask for c in cycles]
    chosen: list[int] = []
    produced = 0

    def rec(start: int, used: int) -> Iterator[CycleSystem]:
        nonlocal produced
        produced += 1
        if produced > max_systems:
            raise BudgetExceeded(f"more than {max_systems} cycle systems")
        yield CycleSystem(tuple(cycles[i] for i in chosen))
        for i in range(start, len(cycles)):
            if masks[i] & used:
                continue
            chosen.append(i)
            yield from rec(i + 1, used | masks[i])
            chosen.pop()

    yield from rec(0, 0)


def enumerate_systems(h: AnyHamburger, max_vertices: int = DEFAULT_MAX_VERTICES,
                      max_systems: int = DEFAULT_MAX_SYSTEMS) -> list[CycleSystem]:
    return list(iter_systems(h, max_vertices, max_systems))


def count_systems(h: AnyHamburger, max_vertices: int = DEFAULT_MAX_VERTICES,
                  max_systems: int = DEFAULT_MAX_SYSTEMS) -> int:
    return sum(1 for _ in iter_systems(h, max_vertices, max_systems))


@dataclass(frozen=True)
class SystemTotals:
    count: int
    positive: Fraction  # weighted c+
    negative: Fraction  # weighted c-
    positive_count: int
    negative_count: int

    @property
    def signed_sum(self) -> Fraction:
        return self.positive - self.negative


def system_totals(h: AnyHamburger, max_vertices: int = DEFAULT_MAX_VERTICES,
                  max_systems: int = DEFAULT_MAX_SYSTEMS) -> SystemTotals:
    pos = neg = Fraction(0)
    npos = nneg = 0
    for sysm in iter_systems(h, max_vertices, max_systems):
        if sysm.sign > 0:
            pos += sysm.weight
            npos += 1
        else:
            neg += sysm.weight
            nneg += 1
    return SystemTotals(npos + nneg, pos, neg, npos, nneg)


def signed_sum(h: AnyHamburger, max_vertices: int = DEFAULT_MAX_VERTICES,
               max_systems: int = DEFAULT_MAX_SYSTEMS) -> Fraction:
    """Sum of sign times weight over all cycle systems (empty system gives +1)."""
    return system_totals(h, max_vertices, max_systems).signed_sum


def format_system(sysm: CycleSystem, labels: tuple[str, ...]) -> str:
    cyc = " ".join("(" + " ".join(labels[v] for v in c.vertices) + ")" for c in sysm.cycles) or "()"
    sign = "+1" if sysm.sign > 0 else "-1"
    return f"{cyc}\tl={sysm.l}\tm={sysm.m}\tsign={sign}\tweight={sysm.weight}"


def format_systems(h: AnyHamburger, max_vertices: int = DEFAULT_MAX_VERTICES,
                   max_systems: int = DEFAULT_MAX_SYSTEMS) -> str:
    """One system per line followed by a totals line."""
    labels = combined_graph(h).labels
    lines = []
    count = 0
    pos = neg = Fraction(0)
    for sysm in iter_systems(h, max_vertices, max_systems):
        lines.append(format_system(sysm, labels))
        count += 1
        if sysm.sign > 0:
            pos += sysm.weight
        else:
            neg += sysm.weight
    lines.append(f"systems={count} c+={pos} c-={neg} signed_sum={pos - neg}")
    return "\n".join(lines) + "\n"


__all__ = [
    "CombinedGraph", "CycleSystem", "SimpleCycle", "SystemTotals",
    "combined_graph", "count_systems", "enumerate_cycles", "enumerate_systems", "format_systems",
    "iter_systems", "signed_sum", "system_totals",
]
