from fractions import Fraction

import numpy as np
import pytest
import sympy

import hamburger.propp as propp
from hamburger.errors import InvariantError
from hamburger.propp import (
    GF_DENOMINATOR, GF_EVEN_NUMERATOR, GF_ODD_NUMERATOR, REPORT_COLUMNS, SquareDecomposition, analyze,
    aztec_decomposition, check_propp, check_split, decimal_string, decompose, emit_ratio_series,
    emit_report, pillow_count, pillow_counts, propp_gf_s, rho_series, series_by_recurrence,
    squarefree_decompose, two_square_reps,
)
from oracles import series_long_division
from printed_matrices import RHO_Q3

FIRST_S = [1, 2, 5, 5, 13, 16, 37, 45, 109, 130, 313, 377]
AP3_COUNTS = [2, 5, 20, 117, 1024, 13357, 259920]


# -- generating function ----------------------------------------------------------

@pytest.mark.parametrize("num", [GF_EVEN_NUMERATOR, GF_ODD_NUMERATOR])
def test_recurrence_matches_long_division(num):
    assert series_by_recurrence(num, GF_DENOMINATOR, 41) == series_long_division(num, GF_DENOMINATOR, 41)


def test_recurrence_matches_symbolic_series():
    x = sympy.symbols("x")
    den = sum(c * x**i for i, c in enumerate(GF_DENOMINATOR))
    for num in (GF_EVEN_NUMERATOR, GF_ODD_NUMERATOR):
        f = sum(c * x**i for i, c in enumerate(num)) / den
        poly = sympy.series(f, x, 0, 21).removeO()
        expected = [int(poly.coeff(x, t)) for t in range(21)]
        assert series_by_recurrence(num, GF_DENOMINATOR, 21) == expected


def test_first_small_factors():
    assert [propp_gf_s(n) for n in range(12)] == FIRST_S


def test_recurrence_rejects_non_monic_denominator():
    with pytest.raises(ValueError):
        series_by_recurrence((1,), (2, 1), 3)


def test_far_values_consistent():
    s = series_by_recurrence(GF_EVEN_NUMERATOR, GF_DENOMINATOR, 200)
    assert propp_gf_s(300) == s[150]


# -- counts and the square split --------------------------------------------------

def test_pillow_counts():
    assert [pillow_count(n, 3) for n in range(1, 8)] == AP3_COUNTS
    assert pillow_counts(3, 7, oracle_max_n=7).entries == tuple(zip(range(1, 8), AP3_COUNTS))


def test_pillow_counts_detects_disagreement(monkeypatch):
    monkeypatch.setattr(propp, "count_tilings", lambda region: -1)
    with pytest.raises(InvariantError):
        pillow_counts(3, 2)


def test_pillow_counts_reject_even_q():
    with pytest.raises(ValueError):
        pillow_counts(4, 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_conjecture_small_n(n):
    assert check_propp(n).holds


def test_split_reports_failures():
    v = check_split(12, 5)
    assert not v.divides and not v.holds and v.quotient is None
    v = check_split(18, 3)
    assert v.divides and v.quotient == 6 and not v.is_perfect_square
    v = check_split(12, 3)
    assert v.holds and v.l == 2
    assert not check_split(12, 0).holds


def test_split_with_wrong_count():
    assert not check_propp(4, count=118).holds


# -- decompositions ---------------------------------------------------------------

def test_squarefree_small():
    d = squarefree_decompose(8)
    assert (d.l, d.s, d.status, d.mode) == (2, 2, "ok", "squarefree")
    d = squarefree_decompose(2**21)
    assert (d.l, d.s) == (2**10, 2)
    d = squarefree_decompose(117)
    assert (d.l, d.s) == (3, 13)
    assert squarefree_decompose(1).s == 1


def test_squarefree_large_prime_square():
    p = sympy.nextprime(10**12)
    q = sympy.nextprime(10**9)
    d = squarefree_decompose(int(p) ** 2 * int(q) * 36)
    assert (d.l, d.s, d.status) == (6 * int(p), int(q), "ok")


def test_squarefree_unfactored_cofactor():
    p = int(sympy.nextprime(10**30))
    q = int(sympy.nextprime(10**31))
    d = squarefree_decompose(4 * p * q, max_steps=2000)
    assert d.status == "unfactored"
    assert d.l == 2 and d.s == p * q


def test_squarefree_rejects_zero():
    with pytest.raises(ValueError):
        squarefree_decompose(0)


def test_decomposition_invariant():
    with pytest.raises(InvariantError):
        SquareDecomposition(10, 2, 3, "squarefree")


def test_decompose_modes():
    assert decompose(3, 4, 117).mode == "conjecture-gf"
    assert decompose(3, 4, 117).s == 13
    assert decompose(1, 3, 64).mode == "closed-form"
    assert decompose(5, 3, 20).mode == "squarefree"
    # a count that breaks the conjecture falls back to the squarefree split
    assert decompose(3, 4, 118).mode == "squarefree"


@pytest.mark.parametrize("n", range(1, 12))
def test_aztec_closed_form(n):
    d = aztec_decomposition(n)
    assert d.N == 2 ** (n * (n + 1) // 2)
    assert d.s == 2 ** ((n + 1) // 2)


# -- two squares ------------------------------------------------------------------

def test_two_square_small():
    assert two_square_reps(2).representations == ((1, 1),)
    assert two_square_reps(25).representations == ((0, 5), (3, 4))
    assert two_square_reps(3).representations == ()
    assert two_square_reps(0).representations == ((0, 0),)


def test_two_square_against_double_loop():
    found = {}
    for a in range(21):
        for b in range(a, 21):
            found.setdefault(a * a + b * b, set()).add((a, b))
    for n in range(1, 401):
        assert set(two_square_reps(n).representations) == found.get(n, set()), n


def test_two_square_with_l_and_budget():
    rep = two_square_reps(25, l=5)
    assert rep.divisible == (True, False)
    assert rep.summary() == "reps=2;l_divides=1"
    assert two_square_reps(10**20, budget=10**10).summary() == "budget-exceeded"
    with pytest.raises(ValueError):
        two_square_reps(-1)


# -- ratio series -----------------------------------------------------------------

def dominant_root():
    roots = np.roots(list(reversed(GF_DENOMINATOR)))
    return max(r.real for r in roots if abs(r.imag) < 1e-12)


def test_three_pillow_ratio_converges():
    series = rho_series(3, 40)
    assert series.last().n == 40
    assert abs(float(series.last().ratio) - RHO_Q3) < 1e-4
    assert abs(float(rho_series(3, 200).last().ratio) - dominant_root()) < 1e-9


def test_tau_relation():
    series = rho_series(3, 200)
    tau = float(series.step1_even[-1].ratio)
    assert abs(float(series.step1_odd[-1].ratio) - 2 * tau) < 1e-6 or abs(2 * float(series.step1_odd[-1].ratio) - tau) < 1e-6
    rho = float(series.last().ratio)
    tau_small = min(tau, float(series.step1_odd[-1].ratio))
    assert abs(rho - 2 * tau_small**2) < 1e-6


def test_diamond_ratio_is_exactly_two():
    assert {p.ratio for p in rho_series(1, 30).step2} == {Fraction(2)}


def test_other_q_needs_values():
    with pytest.raises(ValueError):
        rho_series(5, 4)
    with pytest.raises(ValueError):
        rho_series(5, 4, {1: 1, 2: 2})
    assert rho_series(5, 3, {1: 1, 2: 5, 3: 4}).step2[0].ratio == 4


def test_decimal_and_series_output():
    assert decimal_string(Fraction(1, 3)) == "0.3333333333"
    assert decimal_string(Fraction(2)) == "2"
    text = emit_ratio_series(rho_series(3, 5))
    assert text.splitlines() == ["n,ratio,decimal", "3,5/2,2.5", "4,13/5,2.6", "5,16/5,3.2"]


# -- reports ----------------------------------------------------------------------

def test_report_golden(golden):
    assert emit_report([analyze(3, 12)]) == golden("propp_q3_n12.csv")


def test_report_deterministic_and_sorted():
    a = emit_report([analyze(5, 4), analyze(3, 4), analyze(1, 4)])
    b = emit_report([analyze(1, 4), analyze(5, 4), analyze(3, 4)])
    assert a == b
    qs = [int(line.split(",")[0]) for line in a.splitlines()[1:]]
    assert qs == sorted(qs) and set(qs) == {1, 3, 5}


def test_empty_report_is_header_only():
    assert emit_report([]) == ",".join(REPORT_COLUMNS) + "\n"
    assert emit_report([], "txt").split() == list(REPORT_COLUMNS)


def test_text_report_and_bad_format():
    text = emit_report([analyze(1, 3)], "txt")
    assert "closed-form" in text
    with pytest.raises(ValueError):
        emit_report([], "json")


def test_diamond_report_ratios():
    rows = analyze(1, 6).rows
    assert [r.ratio for r in rows[2:]] == [2] * 4
    assert all(r.propp == "n/a" for r in rows)


def test_parallel_counts_match_serial():
    assert pillow_counts(5, 6, jobs=2) == pillow_counts(5, 6)
