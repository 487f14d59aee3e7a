import itertools
import random
from fractions import Fraction

import pytest

from cubechaos.coding import Code, DomainError
from cubechaos.shift import shift
from cubechaos.tent import (
    BRANCHES,
    check_semiconjugacy,
    code_interval,
    itinerary,
    tent_eval,
)
from oracles import forward_interval_oracle


@pytest.mark.parametrize(
    "x, y",
    [(Fraction(1, 8), Fraction(1, 2)), (Fraction(1, 2), 0), (Fraction(1, 3), Fraction(2, 3)),
     (Fraction(2, 3), Fraction(2, 3)), (Fraction(1), 0), (Fraction(0), 0), (Fraction(1, 4), 1)],
)
def test_tent_eval(x, y):
    assert tent_eval(x) == y


def test_tent_domain():
    with pytest.raises(DomainError):
        tent_eval(Fraction(3, 2))
    with pytest.raises(DomainError):
        itinerary(Fraction(-1, 2), 3)


def test_branch_surjectivity():
    for br in BRANCHES:
        images = sorted([br.rule(br.lower), br.rule(br.upper)])
        assert images == [0, 1]


@pytest.mark.parametrize(
    "x, k, digits",
    [(Fraction(1, 3), 4, (2, 3, 3, 3)), (Fraction(0), 3, (1, 1, 1)), (Fraction(1), 2, (4, 1))],
)
def test_itinerary(x, k, digits):
    assert itinerary(x, k).digits == digits


@pytest.mark.parametrize(
    "digits, interval",
    [
        ((2, 1), (Fraction(7, 16), Fraction(1, 2))),
        ((1, 1), (Fraction(0), Fraction(1, 16))),
        ((3,), (Fraction(1, 2), Fraction(3, 4))),
    ],
)
def test_code_interval_examples(digits, interval):
    assert forward_interval_oracle(digits) == interval
    assert code_interval(Code(1, digits)) == interval


@pytest.mark.parametrize("k", range(1, 5))
def test_code_interval_matches_forward_oracle(k):
    for digits in itertools.product(range(1, 5), repeat=k):
        lo, hi = code_interval(Code(1, digits))
        assert (lo, hi) == forward_interval_oracle(digits)
        assert hi - lo == Fraction(1, 4**k)
        assert (4**k * lo).denominator == 1


@pytest.mark.parametrize("k", range(1, 5))
def test_refinement_and_orientation(k):
    for digits in itertools.product(range(1, 5), repeat=k):
        plo, phi = code_interval(Code(1, digits))
        kids = [code_interval(Code(1, digits + (d,))) for d in range(1, 5)]
        for lo, hi in kids:
            assert plo <= lo and hi <= phi
        # children tile the parent
        ordered = sorted(kids)
        assert ordered[0][0] == plo and ordered[-1][1] == phi
        assert all(ordered[i][1] == ordered[i + 1][0] for i in range(3))
        # reversed child order exactly when an odd number of decreasing branches was used
        flips = sum(d in (2, 4) for d in digits)
        expected = sorted(kids, reverse=flips % 2 == 1)
        assert kids == expected


@pytest.mark.parametrize("k", range(1, 6))
def test_membership_of_midpoints(k):
    for digits in itertools.product(range(1, 5), repeat=k):
        lo, hi = code_interval(Code(1, digits))
        assert itinerary((lo + hi) / 2, k).digits == digits


def test_tent_differs_from_base4_coding():
    # on the second level the branch-2 children run right to left
    assert code_interval(Code(1, (2, 1)))[1] == Fraction(1, 2)


@pytest.mark.parametrize(
    "x, k", [(Fraction(1, 3), 3), (Fraction(0), 5), (Fraction(1), 4), (Fraction(5, 7), 10)]
)
def test_semiconjugacy(x, k):
    assert check_semiconjugacy(x, k)
    assert itinerary(tent_eval(x), k) == shift(itinerary(x, k + 1))


def test_semiconjugacy_sweep_small():
    rng = random.Random(7)
    for _ in range(200):
        x = Fraction(rng.randint(0, 4**10), 4**10)
        assert check_semiconjugacy(x, 9)
