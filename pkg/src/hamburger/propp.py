"""Tiling-count series for odd pillows and the square-times-small analysis.

For 3-pillows the small factor ``s_n`` is predicted by two rational
generating functions sharing the denominator ``1 - 2x - 2x^2 - 2x^3 + x^4``;
``check_propp`` divides it out and tests the quotient for being a perfect
square, so no factoring is needed.  Other step lengths fall back to the
squarefree decomposition and are labelled as such in every report.
"""
from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable, Sequence

from sympy import factorint, isprime
from sympy.ntheory import pollard_rho

from .errors import InvariantError
from .graph import reduced_det
from .regions import build_digraph, q_pillow
from .tilings import count_tilings

GF_DENOMINATOR = (1, -2, -2, -2, 1)
GF_EVEN_NUMERATOR = (1, 3, 1, -1)
GF_ODD_NUMERATOR = (2, 1, 2, -1)

TRIAL_LIMIT = 10**6
RHO_MAX_STEPS = 200_000
TWO_SQUARES_BUDGET = 10**14
DECIMAL_DIGITS = 10


# -- counts --------------------------------------------------------------------

def pillow_count(n: int, q: int) -> int:
    """#AP_n^q from the reduced hamburger determinant of the pillow digraph."""
    d = reduced_det(build_digraph(q_pillow(n, q)))
    assert d.denominator == 1
    return d.numerator


@dataclass(frozen=True)
class CountSeries:
    q: int
    entries: tuple[tuple[int, int], ...]

    def count(self, n: int) -> int:
        return dict(self.entries)[n]


def pillow_counts(q: int, n_max: int, oracle_max_n: int = 8, jobs: int = 1) -> CountSeries:
    """Counts for ``n = 1..n_max``; the first ``oracle_max_n`` are re-derived
    by the tiling DP and must agree."""
    if q < 1 or q % 2 == 0:
        raise ValueError(f"q must be a positive odd integer, got {q}")
    ns = list(range(1, n_max + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            counts = list(pool.map(pillow_count, ns, [q] * len(ns)))
    else:
        counts = [pillow_count(n, q) for n in ns]
    for n, c in zip(ns, counts):
        if n <= oracle_max_n:
            dp = count_tilings(q_pillow(n, q))
            if dp != c:
                raise InvariantError(f"AP_{n}^{q}: determinant {c} != tiling DP {dp}")
    return CountSeries(q, tuple(zip(ns, counts)))


# -- generating function ------------------------------------------------------

def series_by_recurrence(numerator: Sequence[int], denominator: Sequence[int], count: int) -> list[int]:
    """First ``count`` power-series coefficients of numerator/denominator.

    Uses ``c_t = num_t - sum_{i>=1} den_i c_{t-i}`` (denominator constant term 1).
    """
    if denominator[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out: list[int] = []
    for t in range(count):
        c = numerator[t] if t < len(numerator) else 0
        for i in range(1, min(t, len(denominator) - 1) + 1):
            c -= denominator[i] * out[t - i]
        out.append(c)
    return out


@lru_cache(maxsize=None)
def _gf_table(parity: int, count: int) -> tuple[int, ...]:
    num = GF_EVEN_NUMERATOR if parity == 0 else GF_ODD_NUMERATOR
    return tuple(series_by_recurrence(num, GF_DENOMINATOR, count))


def propp_gf_s(n: int) -> int:
    """Predicted small factor s_n of #AP_n (coefficient n//2 of the parity's series)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    m = n // 2
    size = max(64, 1 << (m + 1).bit_length())
    return _gf_table(n % 2, size)[m]


# -- square decompositions -----------------------------------------------------

@dataclass(frozen=True)
class SquareDecomposition:
    """``N = l**2 * s``; ``mode`` says how ``s`` was chosen."""

    N: int
    l: int  # noqa: E741
    s: int
    mode: str
    status: str = "ok"

    def __post_init__(self):
        if self.l * self.l * self.s != self.N:
            raise InvariantError(f"{self.N} != {self.l}^2 * {self.s}")


@dataclass(frozen=True)
class ProppVerdict:
    n: int
    N: int
    s: int
    divides: bool
    quotient: int | None
    is_perfect_square: bool
    l: int | None  # noqa: E741

    @property
    def holds(self) -> bool:
        return self.divides and self.is_perfect_square


def check_split(N: int, s: int, n: int = 0) -> ProppVerdict:
    """Does ``s`` divide ``N`` with a perfect-square quotient?  Never raises."""
    if s <= 0 or N % s:
        return ProppVerdict(n, N, s, False, None, False, None)
    quo = N // s
    r = isqrt(quo)
    square = r * r == quo
    return ProppVerdict(n, N, s, True, quo, square, r if square else None)


def check_propp(n: int, count: int | None = None) -> ProppVerdict:
    N = pillow_count(n, 3) if count is None else count
    return check_split(N, propp_gf_s(n), n)


def _split_prime_power(n: int, max_steps: int) -> dict[int, int] | None:
    """Full factorisation of ``n`` (no factors below the trial limit), or None."""
    if n == 1:
        return {}
    if isprime(n):
        return {int(n): 1}
    r = isqrt(n)
    if r * r == n:
        sub = _split_prime_power(r, max_steps)
        return None if sub is None else {p: 2 * e for p, e in sub.items()}
    d = pollard_rho(n, retries=5, max_steps=max_steps)
    if not d:
        return None
    d = int(d)
    out: dict[int, int] = {}
    for part in (d, n // d):
        sub = _split_prime_power(part, max_steps)
        if sub is None:
            return None
        for p, e in sub.items():
            out[p] = out.get(p, 0) + e
    return out


def squarefree_decompose(N: int, trial_limit: int = TRIAL_LIMIT,
                         max_steps: int = RHO_MAX_STEPS) -> SquareDecomposition:
    """Largest ``l`` with ``l**2 | N`` and the squarefree rest.

    Trial division up to ``trial_limit`` then Pollard rho with a step cap.
    If a cofactor cannot be split it stays inside ``s`` and the status is
    ``"unfactored"`` (``s`` is then not guaranteed squarefree).
    """
    if N < 1:
        raise ValueError("N must be positive")
    small = factorint(N, limit=trial_limit, use_rho=False, use_pm1=False, use_ecm=False)
    factors: dict[int, int] = {}
    rest = 1
    for p, e in small.items():
        p, e = int(p), int(e)
        if p <= trial_limit or isprime(p):
            factors[p] = factors.get(p, 0) + e
        else:
            rest *= p**e
    status = "ok"
    leftover = 1
    if rest > 1:
        big = _split_prime_power(rest, max_steps)
        if big is None:
            status = "unfactored"
            leftover = rest
        else:
            for p, e in big.items():
                factors[p] = factors.get(p, 0) + e
    l = s = 1  # noqa: E741
    for p, e in factors.items():
        l *= p ** (e // 2)
        s *= p ** (e % 2)
    return SquareDecomposition(N, l, s * leftover, "squarefree", status)


def aztec_decomposition(n: int) -> SquareDecomposition:
    """``2^{n(n+1)/2} = l^2 s`` with ``s = 2^{ceil(n/2)}``; this ``s`` has
    ``s_n / s_{n-2} = 2`` exactly."""
    e = n * (n + 1) // 2
    se = (n + 1) // 2
    return SquareDecomposition(2**e, 2 ** ((e - se) // 2), 2**se, "closed-form")


def decompose(q: int, n: int, N: int) -> SquareDecomposition:
    """Decomposition used in reports: GF for q=3, closed form for q=1,
    squarefree otherwise."""
    if q == 3:
        v = check_split(N, propp_gf_s(n), n)
        if v.holds:
            return SquareDecomposition(N, v.l, v.s, "conjecture-gf")
        return squarefree_decompose(N)
    if q == 1 and N == 2 ** (n * (n + 1) // 2):
        return aztec_decomposition(n)
    return squarefree_decompose(N)


# -- sums of two squares -------------------------------------------------------

@dataclass(frozen=True)
class TwoSquaresReport:
    N: int
    representations: tuple[tuple[int, int], ...]
    l: int | None = None  # noqa: E741
    divisible: tuple[bool, ...] = ()
    status: str = "ok"

    def summary(self) -> str:
        if self.status != "ok":
            return self.status
        text = f"reps={len(self.representations)}"
        if self.l is not None:
            text += f";l_divides={sum(self.divisible)}"
        return text


def two_square_reps(N: int, l: int | None = None, budget: int = TWO_SQUARES_BUDGET) -> TwoSquaresReport:  # noqa: E741
    """All ``a <= b`` with ``a² + b² = N`` by a direct scan over ``a``."""
    if N < 0:
        raise ValueError("N must be non-negative")
    if N > budget:
        return TwoSquaresReport(N, (), l, (), "budget-exceeded")
    reps = []
    for a in range(isqrt(N // 2) + 1):
        rem = N - a * a
        b = isqrt(rem)
        if b * b == rem and a <= b:
            reps.append((a, b))
    for a, b in reps:
        assert a * a + b * b == N
    div = tuple(a % l == 0 and b % l == 0 for a, b in reps) if l else ()
    return TwoSquaresReport(N, tuple(reps), l, div)


# -- ratio series --------------------------------------------------------------

def decimal_string(x: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return format(Decimal(x.numerator) / Decimal(x.denominator), "f")


@dataclass(frozen=True)
class RatioPoint:
    n: int
    ratio: Fraction

    @property
    def decimal(self) -> str:
        return decimal_string(self.ratio)


@dataclass(frozen=True)
class RhoSeries:
    q: int
    mode: str
    step2: tuple[RatioPoint, ...]  # s_n / s_{n-2}
    step1_even: tuple[RatioPoint, ...] = field(default=())  # s_n / s_{n-1}, n even
    step1_odd: tuple[RatioPoint, ...] = field(default=())  # s_n / s_{n-1}, n odd

    def last(self) -> RatioPoint:
        return self.step2[-1]


def rho_series(q: int, n_max: int, s_values: dict[int, int] | None = None) -> RhoSeries:
    """Ratio series of the small factors.

    q=3 reads s from the generating function, q=1 from the closed form; any
    other q needs ``s_values`` (e.g. from squarefree decompositions).
    """
    if q == 3:
        s = {n: propp_gf_s(n) for n in range(1, n_max + 1)}
        mode = "conjecture-gf"
    elif q == 1:
        s = {n: aztec_decomposition(n).s for n in range(1, n_max + 1)}
        mode = "closed-form"
    else:
        if s_values is None:
            raise ValueError(f"q={q} needs explicit s values")
        s = dict(s_values)
        mode = "squarefree"
    missing = [n for n in range(1, n_max + 1) if n not in s]
    if missing:
        raise ValueError(f"missing s values for n={missing}")
    step2 = tuple(RatioPoint(n, Fraction(s[n], s[n - 2])) for n in range(3, n_max + 1))
    step1 = [RatioPoint(n, Fraction(s[n], s[n - 1])) for n in range(2, n_max + 1)]
    return RhoSeries(q, mode, step2,
                     tuple(p for p in step1 if p.n % 2 == 0),
                     tuple(p for p in step1 if p.n % 2 == 1))


# -- reports -------------------------------------------------------------------

@dataclass(frozen=True)
class ReportRow:
    q: int
    n: int
    count: int
    decomposition: SquareDecomposition
    ratio: Fraction | None
    propp: str
    two_squares: str


@dataclass(frozen=True)
class AnalysisReport:
    q: int
    rows: tuple[ReportRow, ...]


def analyze(q: int, n_max: int, oracle_max_n: int = 8, two_squares_budget: int = TWO_SQUARES_BUDGET,
            jobs: int = 1) -> AnalysisReport:
    series = pillow_counts(q, n_max, oracle_max_n=oracle_max_n, jobs=jobs)
    decs = {n: decompose(q, n, c) for n, c in series.entries}
    rows = []
    for n, c in series.entries:
        dec = decs[n]
        ratio = Fraction(dec.s, decs[n - 2].s) if n >= 3 else None
        propp = "n/a"
        if q == 3:
            propp = "pass" if check_propp(n, c).holds else "fail"
        if c > two_squares_budget:
            ts = "budget-exceeded"
        else:
            ts = two_square_reps(c, dec.l, two_squares_budget).summary()
        rows.append(ReportRow(q, n, c, dec, ratio, propp, ts))
    return AnalysisReport(q, tuple(rows))


REPORT_COLUMNS = ("q", "n", "count", "l", "s", "mode", "status", "ratio", "propp", "two_squares")


def emit_report(reports: Iterable[AnalysisReport], fmt: str = "csv") -> str:
    """Render reports sorted by q then n; byte-identical for identical input."""
    rows = sorted((r for rep in reports for r in rep.rows), key=lambda r: (r.q, r.n))
    table = [[str(r.q), str(r.n), str(r.count), str(r.decomposition.l), str(r.decomposition.s),
              r.decomposition.mode, r.decomposition.status,
              decimal_string(r.ratio) if r.ratio is not None else "", r.propp, r.two_squares]
             for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(REPORT_COLUMNS)
        w.writerows(table)
        return buf.getvalue()
    if fmt == "txt":
        cells = [list(REPORT_COLUMNS)] + table
        widths = [max(len(row[i]) for row in cells) for i in range(len(REPORT_COLUMNS))]
        return "".join("  ".join(c.rjust(wd) for c, wd in zip(row, widths)).rstrip() + "\n" for row in cells)
    raise ValueError(f"unknown format {fmt!r}")


def emit_ratio_series(series: RhoSeries) -> str:
    """Plot-ready ``n,ratio,decimal`` CSV for one q."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("n", "ratio", "decimal"))
    for p in series.step2:
        w.writerow((p.n, str(p.ratio), p.decimal))
    return buf.getvalue()
