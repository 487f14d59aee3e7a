"""Double-humped tent map on [0, 1] and its itinerary coding.

Four affine branches of slope +4, -4, +4, -4 on the quarters
``[0,1/4], (1/4,1/2], (1/2,3/4], (3/4,1]``.  Intervals returned by
:func:`code_interval` are closed; endpoint membership under the decreasing
branches is not tracked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .coding import Code, DomainError
from .shift import shift

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Branch:
    index: int
    lower: Fraction
    upper: Fraction
    slope: int
    rule: Callable[[Fraction], Fraction]
    inverse: Callable[[Fraction], Fraction]

    @property
    def lower_closed(self) -> bool:
        return self.index == 1


BRANCHES = (
    Branch(1, Fraction(0), QUARTER, 4, lambda x: 4 * x, lambda y: y / 4),
    Branch(2, QUARTER, HALF, -4, lambda x: 4 * (HALF - x), lambda y: HALF - y / 4),
    Branch(3, HALF, 3 * QUARTER, 4, lambda x: 4 * (x - HALF), lambda y: HALF + y / 4),
    Branch(4, 3 * QUARTER, Fraction(1), -4, lambda x: 4 * (1 - x), lambda y: 1 - y / 4),
)


def _check_unit(x: Fraction) -> Fraction:
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise DomainError(f"{x} outside [0, 1]")
    return x


def branch_of(x: Fraction) -> Branch:
    x = _check_unit(x)
    for br in BRANCHES:
        if x <= br.upper:
            return br
    raise AssertionError("unreachable")


def tent_eval(x: Fraction) -> Fraction:
    return branch_of(x).rule(_check_unit(x))


def itinerary(x: Fraction, k: int) -> Code:
    """Branch indices visited by ``x, tent(x), ..., tent^(k-1)(x)``."""
    x = _check_unit(x)
    digits = []
    for _ in range(k):
        br = branch_of(x)
        digits.append(br.index)
        x = br.rule(x)
    return Code(1, tuple(digits))


def code_interval(c: Code) -> tuple[Fraction, Fraction]:
    """Closed interval of points whose itinerary starts with ``c``.

    Pulls the last digit's quarter back through the inverse branches of the
    earlier digits, right to left.
    """
    if c.dimension != 1:
        raise DomainError("tent itineraries are one-dimensional")
    if c.order < 1:
        raise DomainError("code_interval needs order >= 1")
    last = BRANCHES[c.digits[-1] - 1]
    lo, hi = last.lower, last.upper
    for d in reversed(c.digits[:-1]):
        inv = BRANCHES[d - 1].inverse
        a, b = inv(lo), inv(hi)
        lo, hi = min(a, b), max(a, b)
    return lo, hi


def check_semiconjugacy(x: Fraction, k: int) -> bool:
    """Does the tent map act on itineraries as the shift does?"""
    if k < 1:
        raise DomainError("k must be >= 1")
    return itinerary(tent_eval(x), k) == shift(itinerary(x, k + 1))
