import pytest

from moncurve import bitpoly as bp
from moncurve.curve import (
    BadAlpha,
    Hole,
    NotSmooth,
    OutOfRange,
    CurveError,
    cohomology_dims,
    epsilon,
    from_free_mask,
    from_pairs,
    full_set,
    holes,
    invariants,
    new_generator_set,
    power_support,
    reduction_number,
    regularity,
)
from moncurve.search import enumerate_smooth

import oracles

PAPER = new_generator_set(17, [0, 1, 2, 5, 13, 14, 16, 17])
NINE = new_generator_set(9, [0, 1, 5, 8, 9])
FOUR = new_generator_set(4, [0, 1, 3, 4])


def test_new_generator_set():
    assert PAPER.codim == 6
    assert new_generator_set(2, [0, 1, 2]).codim == 1
    with pytest.raises(NotSmooth):
        new_generator_set(6, [0, 2, 4, 6])
    with pytest.raises(OutOfRange):
        new_generator_set(4, [0, 1, 3, 4, 7])
    with pytest.raises(BadAlpha):
        new_generator_set(1, [0, 1])


def test_from_pairs():
    raw = [(17, 0), (16, 1), (1, 16), (0, 17), (14, 3), (13, 4), (5, 12), (2, 15)]
    assert from_pairs(raw) == PAPER
    with pytest.raises(CurveError):
        from_pairs([(4, 0), (3, 2)])


def test_free_mask_roundtrip():
    for A in enumerate_smooth(9):
        assert from_free_mask(9, A.free_mask) == A


def test_power_support():
    assert power_support(PAPER, 3).support() == [i for i in range(52) if i != 25]
    assert power_support(NINE, 1) == NINE.poly
    two = power_support(FOUR, 2)
    assert two.support() == list(range(9)) and bp.is_full(two)


def test_regularity():
    assert regularity(PAPER) == 4
    for alpha in (2, 5, 11):
        assert regularity(full_set(alpha)) == 1
    assert regularity(NINE) == 4
    assert bp.missing(power_support(NINE, 3), 27) == [4, 12, 20]


def test_reduction_number():
    assert reduction_number(PAPER) == 3
    assert reduction_number(FOUR) == 2
    assert reduction_number(full_set(7)) == 1


def test_epsilon():
    assert epsilon(PAPER) == 1
    assert epsilon(full_set(8)) == 8
    assert epsilon(NINE) == 1


def test_holes():
    assert holes(FOUR) == [Hole(2, 1)]
    assert holes(full_set(6)) == []
    hs = holes(PAPER)
    assert Hole(25, 3) in hs
    assert max(x.degree for x in hs) == 3
    assert Hole(25, 3).point(17) == (25, 26)


def test_cohomology_dims():
    t = cohomology_dims(FOUR, 4)
    assert t.h1 == {1: 1}
    assert t.h2 == {-1: 3, -2: 7, -3: 11, -4: 15}
    assert cohomology_dims(full_set(5)).h1 == {}
    # values from the set-based oracle
    assert cohomology_dims(PAPER).h1 == {1: 10, 2: 8, 3: 1}
    with pytest.raises(ValueError):
        cohomology_dims(FOUR, 0)


def test_h2_matches_lattice_count():
    alpha = 5
    t = cohomology_dims(full_set(alpha), 4)
    for m in range(1, 5):
        # points of G on u1 + u2 = -m*alpha with both coordinates <= -1
        count = sum(1 for u1 in range(-m * alpha, 0) if -m * alpha - u1 <= -1)
        assert t.h2[-m] == count


def test_invariants():
    inv = invariants(PAPER)
    assert inv.as_dict() == {
        "reg": 4, "r": 3, "epsilon": 1, "lambda": 7, "degree": 17, "codim": 6,
        "glp_bound": 11, "improvement_bound": 8,
    }
    small = invariants(new_generator_set(2, [0, 1, 2]))
    assert (small.reg, small.r, small.lambda_) == (1, 1, 0)
    nine = invariants(NINE)
    assert (nine.reg, nine.r, nine.epsilon, nine.lambda_, nine.improvement_bound) == (4, 4, 1, 3, 4)


def small_universe(max_alpha):
    for alpha in range(2, max_alpha + 1):
        yield from enumerate_smooth(alpha)


@pytest.mark.parametrize("A", list(small_universe(10)), ids=str)
def test_against_oracle(A):
    reg = oracles.regularity(A.elements)
    assert regularity(A) == reg
    assert reduction_number(A) == oracles.reduction_number(A.elements, A.alpha)
    assert [(x.u1, x.degree) for x in holes(A)] == oracles.holes(A.elements, A.alpha, reg + 1)
    t = cohomology_dims(A)
    for m in range(1, reg):
        assert t.h1[m] == m * A.alpha + 1 - len(oracles.power(A.elements, m))


def test_exhaustive_relations_up_to_14():
    for A in small_universe(14):
        inv = invariants(A)
        hs = holes(A)
        top = max((x.degree for x in hs), default=0)
        assert top + 1 == inv.reg
        assert inv.r <= inv.reg
        if inv.r >= 2:
            assert inv.reg <= 2 * inv.r - 2
        else:
            assert inv.reg == 1
        if inv.r <= 2 or inv.reg <= 3:
            assert inv.r == inv.reg
        assert (not hs) == A.is_full() == (inv.reg == 1)
        assert inv.reg <= inv.improvement_bound <= inv.glp_bound or inv.reg <= inv.glp_bound


def test_reflection_invariance():
    for A in small_universe(11):
        assert invariants(A) == invariants(A.reflect())
