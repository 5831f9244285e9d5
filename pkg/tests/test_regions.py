import random

import pytest

from hamburger.errors import RegionError
from hamburger.graph import path_matrix
from hamburger.linalg import exchange_conjugate
from hamburger.regions import (
    PillowSpec, Region, aztec_diamond, build_digraph, enclosing_diamond_order, generalized_pillow,
    natural_tiling, q_pillow, random_pillow_spec, region_digraph, region_from_dict,
)
from hamburger.schroeder import modified_matrix, schroeder_matrix
from oracles import diamond_cells_by_inequality


# -- shapes ---------------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 9))
def test_diamond_cell_count_and_inequality(n):
    region = aztec_diamond(n)
    assert region.cell_count == 2 * n * (n + 1)
    assert region.cells() == diamond_cells_by_inequality(n)


def test_diamond_row_lengths():
    assert [r[2] for r in aztec_diamond(6).rows] == [2, 4, 6, 8, 10, 12, 12, 10, 8, 6, 4, 2]


@pytest.mark.parametrize("n", range(1, 9))
def test_one_pillow_is_the_diamond(n):
    assert q_pillow(n, 1) == aztec_diamond(n)


def test_small_three_pillows():
    assert q_pillow(1, 3).rows == ((0, -1, 2), (-1, -1, 2))
    assert q_pillow(2, 3).rows == ((0, -2, 4), (-1, -2, 4))
    assert q_pillow(3, 3).render() == "...##.\n######\n######\n.##...\n"


@pytest.mark.parametrize("q", [3, 5, 7])
def test_pillow_is_centrally_symmetric(q):
    for n in range(1, 9):
        cells = q_pillow(n, q).cells()
        assert cells == {(-1 - x, -1 - y) for x, y in cells}


@pytest.mark.parametrize("q", [0, 2, 4, -3])
def test_even_or_nonpositive_step_rejected(q):
    with pytest.raises(RegionError):
        q_pillow(3, q)


def test_order_must_be_positive():
    with pytest.raises(RegionError):
        aztec_diamond(0)
    with pytest.raises(RegionError):
        q_pillow(0, 3)


# -- generalized pillows ----------------------------------------------------------

@pytest.mark.parametrize("q", [1, 3, 5, 7])
def test_uniform_spec_reproduces_pillow(q):
    for n in range(1, 9):
        assert generalized_pillow(PillowSpec.uniform(n, q)) == q_pillow(n, q)


def test_all_unit_steps_give_the_diamond():
    for n in range(1, 7):
        ones = (1,) * (n - 1)
        assert generalized_pillow(PillowSpec(n, ones, ones, ones, ones)) == aztec_diamond(n)


def test_mixed_steps():
    spec = PillowSpec(4, (3, 1), (1, 1), (1,), (5,))
    region = generalized_pillow(spec)
    assert region.rows == ((2, 0, 2), (1, -1, 4), (0, -4, 8), (-1, -4, 8), (-2, -3, 2))
    assert region.violations() == []


@pytest.mark.parametrize("spec, message", [
    (PillowSpec(3, (2,), (1,)), "odd"),
    (PillowSpec(3, (3,), ()), "close"),
    (PillowSpec(2, (3,), (1,)), "empty"),
    (PillowSpec(0), "order"),
])
def test_invalid_specs(spec, message):
    with pytest.raises(RegionError, match=message):
        generalized_pillow(spec)


def test_random_specs_are_valid():
    rng = random.Random(1)
    for _ in range(50):
        region = generalized_pillow(random_pillow_spec(rng))
        assert region.violations() == []


def test_region_round_trip_through_dict():
    spec = PillowSpec(3, (3,), (1,), (1,), (1,))
    assert region_from_dict(spec.to_dict()) == generalized_pillow(spec)
    assert region_from_dict({"kind": "diamond", "n": 2}) == aztec_diamond(2)
    r = q_pillow(4, 3)
    assert region_from_dict(r.to_dict()) == r
    with pytest.raises(RegionError):
        region_from_dict({"kind": "hexagon"})


def test_region_constructor_checks():
    with pytest.raises(RegionError):
        Region([(0, 0, 2), (-2, 0, 2)])
    with pytest.raises(RegionError):
        Region([(0, 0, 0)])
    with pytest.raises(RegionError):
        Region.from_cells([(0, 0), (2, 0)])
    assert "odd length" in " ".join(Region([(0, 0, 3), (-1, 0, 3)]).violations())


# -- natural tiling and digraph ---------------------------------------------------

@pytest.mark.parametrize("n", range(1, 7))
def test_natural_tiling_counts(n):
    t = natural_tiling(aztec_diamond(n))
    assert len(t.top) == len(t.bottom) == n * (n + 1) // 2
    assert 2 * len(t.dominoes) == aztec_diamond(n).cell_count


def test_digraph_has_k_equal_half_belt():
    for n in range(1, 7):
        assert build_digraph(aztec_diamond(n)).k == n
        assert build_digraph(q_pillow(n, 3)).k == n


def test_small_diamond_edges():
    rd = region_digraph(aztec_diamond(2))
    # top half: (0,-2) (0,0) (1,-1); bottom mirror
    assert rd.labelled_edges() == {
        ((0, -2), (0, 0)), ((0, -2), (1, -1)), ((1, -1), (0, 0)),
        ((-1, 0), (-1, -2)), ((-1, 0), (-2, -1)), ((-2, -1), (-1, -2)),
        ((0, -2), (-1, -2)), ((-1, -2), (0, -2)), ((0, 0), (-1, 0)), ((-1, 0), (0, 0)),
    }


def restricted(edges, dominoes):
    return {(a, b) for a, b in edges if a in dominoes and b in dominoes}


def check_restriction(region):
    big = enclosing_diamond_order(region)
    mine = region_digraph(region)
    dominoes = set(mine.top) | set(mine.bottom)
    diamond = region_digraph(aztec_diamond(big))
    assert dominoes <= set(diamond.top) | set(diamond.bottom)
    assert mine.labelled_edges() == restricted(diamond.labelled_edges(), dominoes)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_pillow_digraph_is_restriction_of_diamond_digraph(q):
    for n in range(1, 7):
        check_restriction(q_pillow(n, q))


def test_generalized_digraph_is_restriction_of_diamond_digraph():
    rng = random.Random(21)
    for _ in range(25):
        check_restriction(generalized_pillow(random_pillow_spec(rng)))


@pytest.mark.parametrize("n", range(1, 9))
def test_diamond_blocks_are_schroeder(n):
    h = build_digraph(aztec_diamond(n))
    a = path_matrix(h.g1)
    assert a == schroeder_matrix(n)
    assert path_matrix(h.g2) == exchange_conjugate(a)


@pytest.mark.parametrize("n", range(1, 8))
def test_pillow_blocks_are_modified_schroeder(n):
    h = build_digraph(q_pillow(n, 3))
    a = path_matrix(h.g1)
    assert a == modified_matrix(n)
    assert path_matrix(h.g2) == exchange_conjugate(a)


def test_belt_must_align():
    with pytest.raises(RegionError):
        region_digraph(Region([(0, 0, 2), (-1, 2, 2)]))
    with pytest.raises(RegionError):
        region_digraph(Region([(0, 0, 2)]))
