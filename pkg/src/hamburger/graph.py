"""Hamburger graphs, their matrices and the determinant pipeline.

A hamburger graph glues two acyclic digraphs through ``k`` pairs of
distinguished vertices.  ``G1`` carries ``v_1 .. v_k`` (paths only run from
lower to higher index), ``G2`` carries ``w_{k+1} .. w_{2k}`` (paths only run
from higher to lower index), and the connecting set joins ``v_i`` and
``w_{k+i}`` in both directions.

Indices exposed to users (violation reports, pairings in files) are 1-based
to match the usual ``v_i`` labels; vertex ids inside a :class:`Dag` are
0-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Sequence

from .errors import InvalidGraphError
from .linalg import Matrix, block_assemble, det, schur_complement, schur_reduce

Edge = tuple[int, int, Fraction]


@dataclass(frozen=True)
class Dag:
    """A weighted digraph with an ordered list of distinguished vertices.

    Acyclicity is not enforced here; :func:`validate` reports it.
    """

    num_vertices: int
    edges: tuple[Edge, ...]
    distinguished: tuple[int, ...]

    def __init__(self, num_vertices: int, edges: Iterable[Sequence] = (), distinguished: Iterable[int] = ()):
        norm = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            w = Fraction(e[2]) if len(e) > 2 else Fraction(1)
            norm.append((u, v, w))
        object.__setattr__(self, "num_vertices", int(num_vertices))
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "distinguished", tuple(int(d) for d in distinguished))

    def out_edges(self) -> list[list[tuple[int, Fraction]]]:
        adj: list[list[tuple[int, Fraction]]] = [[] for _ in range(self.num_vertices)]
        for u, v, w in self.edges:
            adj[u].append((v, w))
        return adj

    def topological_order(self) -> list[int]:
        """Vertices in topological order; raises :class:`graphlib.CycleError`."""
        ts = TopologicalSorter({v: () for v in range(self.num_vertices)})
        for u, v, _ in self.edges:
            ts.add(v, u)
        return list(ts.static_order())

    def reachable_from(self, src: int) -> set[int]:
        adj = self.out_edges()
        seen, stack = set(), [src]
        while stack:
            u = stack.pop()
            for v, _ in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen

    def unweighted(self) -> "Dag":
        return Dag(self.num_vertices, [(u, v, 1) for u, v, _ in self.edges], self.distinguished)


@dataclass(frozen=True)
class HamburgerGraph:
    """Standard hamburger graph; ``d1[i]`` weighs ``v_i → w_{k+i}`` and
    ``d2[i]`` weighs ``w_{k+i} → v_i`` (0-based list positions)."""

    g1: Dag
    g2: Dag
    d1: tuple[Fraction, ...]
    d2: tuple[Fraction, ...]

    def __init__(self, g1: Dag, g2: Dag, d1: Iterable | None = None, d2: Iterable | None = None):
        k = len(g1.distinguished)
        d1 = tuple(Fraction(x) for x in d1) if d1 is not None else (Fraction(1),) * k
        d2 = tuple(Fraction(x) for x in d2) if d2 is not None else (Fraction(1),) * k
        object.__setattr__(self, "g1", g1)
        object.__setattr__(self, "g2", g2)
        object.__setattr__(self, "d1", d1)
        object.__setattr__(self, "d2", d2)

    @property
    def k(self) -> int:
        return len(self.g1.distinguished)

    def as_generalized(self) -> "GeneralizedHamburgerGraph":
        ident = tuple(range(1, self.k + 1))
        return GeneralizedHamburgerGraph(self.g1, self.g2, ident, ident, self.d1, self.d2)

    def unweighted(self) -> "HamburgerGraph":
        return HamburgerGraph(self.g1.unweighted(), self.g2.unweighted())


@dataclass(frozen=True)
class GeneralizedHamburgerGraph:
    """Hamburger graph whose connecting edges follow two permutations.

    ``forward[i-1] = j`` means an edge ``v_i → w_{k+j}`` with weight
    ``forward_weights[i-1]``; ``backward[i-1] = j`` means ``w_{k+i} → v_j``.
    Identity permutations give the standard graph.
    """

    g1: Dag
    g2: Dag
    forward: tuple[int, ...]
    backward: tuple[int, ...]
    forward_weights: tuple[Fraction, ...] = field(default=())
    backward_weights: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        k = len(self.forward)
        object.__setattr__(self, "forward", tuple(int(x) for x in self.forward))
        object.__setattr__(self, "backward", tuple(int(x) for x in self.backward))
        fw = tuple(Fraction(x) for x in self.forward_weights) or (Fraction(1),) * k
        bw = tuple(Fraction(x) for x in self.backward_weights) or (Fraction(1),) * len(self.backward)
        object.__setattr__(self, "forward_weights", fw)
        object.__setattr__(self, "backward_weights", bw)

    @classmethod
    def from_edges(cls, g1: Dag, g2: Dag, forward_edges: Iterable[Sequence],
                   backward_edges: Iterable[Sequence]) -> "GeneralizedHamburgerGraph":
        """Build from explicit connecting edges ``(i, j[, wt])`` (1-based).

        Rejects edge sets that are not a bijection in each direction.
        """
        k = len(g1.distinguished)

        def to_perm(edges, label):
            perm = [0] * k
            wts = [Fraction(1)] * k
            for e in edges:
                i, j = int(e[0]), int(e[1])
                if not (1 <= i <= k and 1 <= j <= k):
                    raise InvalidGraphError([Violation("malformed-e3", f"{label} edge {(i, j)} out of range")])
                if perm[i - 1]:
                    raise InvalidGraphError([Violation("malformed-e3", f"{label} edges leave index {i} twice")])
                perm[i - 1] = j
                wts[i - 1] = Fraction(e[2]) if len(e) > 2 else Fraction(1)
            if sorted(perm) != list(range(1, k + 1)):
                raise InvalidGraphError([Violation("malformed-e3", f"{label} edges are not a bijection")])
            return perm, wts

        fwd, fw = to_perm(forward_edges, "v->w")
        bwd, bw = to_perm(backward_edges, "w->v")
        return cls(g1, g2, tuple(fwd), tuple(bwd), tuple(fw), tuple(bw))

    @property
    def k(self) -> int:
        return len(self.g1.distinguished)

    @property
    def is_standard(self) -> bool:
        ident = tuple(range(1, self.k + 1))
        return self.forward == ident and self.backward == ident

    def pairing_permutation(self) -> tuple[int, ...]:
        """The map ``i ↦ backward[forward[i]]`` relative to the natural pairing."""
        return tuple(self.backward[self.forward[i] - 1] for i in range(self.k))


AnyHamburger = HamburgerGraph | GeneralizedHamburgerGraph


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    where: tuple = ()

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


def _dag_violations(g: Dag, name: str, increasing: bool) -> list[Violation]:
    out: list[Violation] = []
    n = g.num_vertices
    bad_edges = [(u, v) for u, v, _ in g.edges if not (0 <= u < n and 0 <= v < n)]
    if bad_edges:
        out.append(Violation("vertex-range", f"{name} edges reference missing vertices {bad_edges}"))
        return out
    dist = g.distinguished
    if len(set(dist)) != len(dist) or any(not 0 <= d < n for d in dist):
        out.append(Violation("distinguished", f"{name} distinguished vertices must be distinct and in range"))
        return out
    try:
        g.topological_order()
    except CycleError as exc:
        out.append(Violation("cycle", f"{name} contains a directed cycle through {exc.args[1]}", (name,)))
    # Paths, not just edges, are constrained, so use reachability.
    for a, src in enumerate(dist):
        reach = g.reachable_from(src)
        for b, dst in enumerate(dist):
            if a == b or dst not in reach:
                continue
            ok = a < b if increasing else a > b
            if not ok:
                if increasing:
                    i, j = a + 1, b + 1
                    label = f"v_{i} reaches v_{j}"
                else:
                    k = len(dist)
                    i, j = k + a + 1, k + b + 1
                    label = f"w_{i} reaches w_{j}"
                out.append(Violation("ordering", f"{name}: {label}", (i, j)))
    return out


def validate(h: AnyHamburger) -> list[Violation]:
    """Collect every structural problem with ``h``; an empty list means valid."""
    out = _dag_violations(h.g1, "G1", increasing=True)
    out += _dag_violations(h.g2, "G2", increasing=False)
    k = len(h.g1.distinguished)
    if len(h.g2.distinguished) != k:
        out.append(Violation("malformed-e3", f"G1 has {k} distinguished vertices, G2 has {len(h.g2.distinguished)}"))
        return out
    if isinstance(h, HamburgerGraph):
        if len(h.d1) != k or len(h.d2) != k:
            out.append(Violation("malformed-e3", "need one weight pair per distinguished index"))
            return out
        for i in range(1, k - 1):
            if h.d1[i] * h.d2[i] != 1:
                out.append(Violation("weight-product",
                                     f"wt(e_{i + 1})·wt(e'_{i + 1}) = {h.d1[i] * h.d2[i]} != 1", (i + 1,)))
    else:
        for label, perm, wts in (("forward", h.forward, h.forward_weights),
                                 ("backward", h.backward, h.backward_weights)):
            if sorted(perm) != list(range(1, k + 1)) or len(wts) != k:
                out.append(Violation("malformed-e3", f"{label} pairing is not a permutation of 1..{k}"))
    return out


def require_valid(h: AnyHamburger) -> None:
    problems = validate(h)
    if problems:
        raise InvalidGraphError(problems)


def path_sums_from(g: Dag, src: int, order: Sequence[int] | None = None) -> list[Fraction]:
    """Weighted path counts from ``src`` to every vertex (empty path counts 1)."""
    if not 0 <= src < g.num_vertices:
        raise IndexError(f"vertex {src} out of range")
    order = g.topological_order() if order is None else order
    adj = g.out_edges()
    total = [Fraction(0)] * g.num_vertices
    total[src] = Fraction(1)
    for u in order:
        tu = total[u]
        if tu:
            for v, w in adj[u]:
                total[v] += tu * w
    return total


def count_paths(g: Dag, src: int, dst: int) -> Fraction:
    """Sum over all directed ``src → dst`` paths of the product of edge weights."""
    if not 0 <= dst < g.num_vertices:
        raise IndexError(f"vertex {dst} out of range")
    return path_sums_from(g, src)[dst]


def path_matrix(g: Dag) -> Matrix:
    """Path-count matrix between the distinguished vertices, in order."""
    order = g.topological_order()
    rows = []
    for s in g.distinguished:
        sums = path_sums_from(g, s, order)
        rows.append([sums[t] for t in g.distinguished])
    return Matrix(rows, ncols=len(g.distinguished))


@dataclass(frozen=True)
class HamburgerMatrix:
    a: Matrix
    b: Matrix
    d1: Matrix
    d2: Matrix
    matrix: Matrix

    @property
    def k(self) -> int:
        return self.a.nrows


def build_matrix(h: HamburgerGraph) -> HamburgerMatrix:
    require_valid(h)
    a = path_matrix(h.g1)
    b = path_matrix(h.g2)
    d1 = Matrix.diagonal(h.d1)
    d2 = Matrix.diagonal(h.d2)
    return HamburgerMatrix(a, b, d1, d2, block_assemble(a, d1, -d2, b))


def hamburger_det(h: HamburgerGraph) -> Fraction:
    return det(build_matrix(h).matrix)


def reduced_matrix(h: HamburgerGraph) -> Matrix:
    hm = build_matrix(h)
    return schur_reduce(hm.a, hm.b, hm.d1, hm.d2)


def reduced_det(h: HamburgerGraph) -> Fraction:
    return det(reduced_matrix(h))


def build_generalized_matrix(h: GeneralizedHamburgerGraph) -> Matrix:
    require_valid(h)
    k = h.k
    a = path_matrix(h.g1)
    b = path_matrix(h.g2)
    ur = [[Fraction(0)] * k for _ in range(k)]
    ll = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        ur[i][h.forward[i] - 1] = h.forward_weights[i]
        ll[i][h.backward[i] - 1] = -h.backward_weights[i]
    return block_assemble(a, Matrix(ur, ncols=k), Matrix(ll, ncols=k), b)


def generalized_reduced_matrix(h: GeneralizedHamburgerGraph) -> Matrix:
    m = build_generalized_matrix(h)
    k = h.k

    def blk(r0: int, c0: int) -> Matrix:
        return Matrix([m.rows[r][c0:c0 + k] for r in range(r0, r0 + k)], ncols=k)

    return schur_complement(blk(0, 0), blk(0, k), blk(k, 0), blk(k, k))


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of ``1..n`` given in one-line notation."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class ParityReport:
    det: Fraction
    system_count: int
    parity_match: bool
    permutation_sign: int


def parity_experiment(h: GeneralizedHamburgerGraph, max_systems: int | None = None) -> ParityReport:
    """Compare the determinant's parity with the cycle-system count.

    Only reports; no sign rule for generalized graphs is implied.
    """
    from .cycles import DEFAULT_MAX_SYSTEMS, count_systems

    d = det(build_generalized_matrix(h))
    n = count_systems(h, max_systems=max_systems or DEFAULT_MAX_SYSTEMS)
    match = d.denominator == 1 and (d.numerator - n) % 2 == 0
    return ParityReport(d, n, match, permutation_sign(h.pairing_permutation()))


# -- named example graphs -----------------------------------------------------

def example_graph() -> HamburgerGraph:
    """The k=3 strongly planar example with seventeen cycle systems.

    G1 is the triangle v1→v2→v3 plus v1→v3; G2 mirrors it, w6→w5→w4 plus w6→w4.
    """
    g1 = Dag(3, [(0, 1), (1, 2), (0, 2)], [0, 1, 2])
    # G2 vertex ids 0,1,2 are w4,w5,w6.
    g2 = Dag(3, [(2, 1), (1, 0), (2, 0)], [0, 1, 2])
    return HamburgerGraph(g1, g2)


def counterexample_graph() -> GeneralizedHamburgerGraph:
    """Generalized graph whose matrix has determinant -5 but 10 cycle systems."""
    g1 = Dag(3, [(0, 1), (1, 2)], [0, 1, 2])
    g2 = Dag(3, [(2, 1), (1, 0)], [0, 1, 2])
    return GeneralizedHamburgerGraph(g1, g2, (1, 2, 3), (1, 3, 2))


def trivial_graph() -> HamburgerGraph:
    """k=1 with no internal edges: just the 2-cycle."""
    return HamburgerGraph(Dag(1, [], [0]), Dag(1, [], [0]))
