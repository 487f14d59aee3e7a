"""Subdivision codes for the unit cube and the exact geometry of their boxes.

A code of order k over dimension n is a tuple of digits in ``1..4**n``; digit
``d`` picks one of the ``4**n`` equal sub-cubes of the current box.  The
sub-cube ordering is mixed radix with axis 0 least significant, so in one
dimension the digits 1..4 name the quarters from left to right.

All coordinates are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

DEFAULT_MAX_ORDER = 256


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class CapacityError(ValueError):
    """A construction needs more digits (or more work) than allowed."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class InsufficientDepthError(CapacityError):
    """Raised when iterating a code further than its order allows."""

    def __init__(self, message: str, max_steps: int):
        super().__init__(message, required=None)
        self.max_steps = max_steps


def _check_dimension(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"dimension must be a positive integer, got {n!r}")


@dataclass(frozen=True)
class Code:
    """Finite index sequence naming a nested sub-cube of ``[0, 1]**dimension``."""

    dimension: int
    digits: tuple[int, ...] = ()

    def __post_init__(self):
        _check_dimension(self.dimension)
        digits = tuple(self.digits)
        object.__setattr__(self, "digits", digits)
        top = 4 ** self.dimension
        for d in digits:
            if not isinstance(d, int) or not 1 <= d <= top:
                raise DomainError(f"digit {d!r} outside 1..{top}")

    @property
    def order(self) -> int:
        return len(self.digits)

    @property
    def base(self) -> int:
        """Number of first-order parts, ``4**dimension``."""
        return 4 ** self.dimension

    def __len__(self):
        return len(self.digits)

    def prefix(self, k: int) -> Code:
        return Code(self.dimension, self.digits[:k])

    def extend(self, *digits: int) -> Code:
        return Code(self.dimension, self.digits + digits)

    def serialize(self) -> str:
        return ",".join(map(str, self.digits))

    @classmethod
    def parse(cls, text: str, dimension: int) -> Code:
        text = text.strip()
        if not text:
            return cls(dimension)
        try:
            digits = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise DomainError(f"cannot parse code {text!r}") from exc
        return cls(dimension, digits)


@dataclass(frozen=True)
class SubCubeBox:
    """Axis-aligned box with exact bounds and per-endpoint openness."""

    lower: tuple[Fraction, ...]
    upper: tuple[Fraction, ...]
    lower_open: tuple[bool, ...]
    upper_open: tuple[bool, ...]

    @property
    def dimension(self) -> int:
        return len(self.lower)

    def contains(self, point: Sequence[Fraction]) -> bool:
        """Membership honoring the openness flags."""
        for x, lo, hi, lo_open, hi_open in zip(
            point, self.lower, self.upper, self.lower_open, self.upper_open
        ):
            if x < lo or (lo_open and x == lo):
                return False
            if x > hi or (hi_open and x == hi):
                return False
        return True

    def closed_contains(self, point: Sequence[Fraction]) -> bool:
        return all(lo <= x <= hi for x, lo, hi in zip(point, self.lower, self.upper))

    def closed_contains_box(self, other: SubCubeBox) -> bool:
        return all(
            lo <= olo and ohi <= hi
            for lo, hi, olo, ohi in zip(self.lower, self.upper, other.lower, other.upper)
        )


def digit_to_axes(d: int, n: int) -> tuple[int, ...]:
    """Split a 1-based digit into ``n`` quaternary axis digits (axis 0 first)."""
    _check_dimension(n)
    if not isinstance(d, int) or not 1 <= d <= 4**n:
        raise DomainError(f"digit {d!r} outside 1..{4 ** n}")
    r = d - 1
    axes = []
    for _ in range(n):
        r, q = divmod(r, 4)
        axes.append(q)
    return tuple(axes)


def axes_to_digit(q: Sequence[int], n: int) -> int:
    _check_dimension(n)
    if len(q) != n:
        raise DomainError(f"expected {n} axis digits, got {len(q)}")
    d = 0
    for j, qj in enumerate(q):
        if not isinstance(qj, int) or not 0 <= qj <= 3:
            raise DomainError(f"axis digit {qj!r} outside 0..3")
        d += qj * 4**j
    return d + 1


def _axis_numerators(c: Code) -> list[int]:
    # lower corner of axis j is numerators[j] / 4**order
    nums = [0] * c.dimension
    for d in c.digits:
        axes = digit_to_axes(d, c.dimension)
        for j in range(c.dimension):
            nums[j] = 4 * nums[j] + axes[j]
    return nums


def subcube_bounds(c: Code) -> SubCubeBox:
    """Exact box of ``c``; lower end closed only on the cube's own face."""
    scale = 4**c.order
    nums = _axis_numerators(c)
    lower = tuple(Fraction(m, scale) for m in nums)
    upper = tuple(Fraction(m + 1, scale) for m in nums)
    return SubCubeBox(
        lower=lower,
        upper=upper,
        lower_open=tuple(m != 0 for m in nums),
        upper_open=(False,) * c.dimension,
    )


def diameter_squared(c: Code) -> Fraction:
    return Fraction(c.dimension, 16**c.order)


def box_distance_squared(a: SubCubeBox, b: SubCubeBox) -> Fraction:
    """Squared infimum distance between the closures of two boxes."""
    if a.dimension != b.dimension:
        raise DomainError("boxes have different dimensions")
    total = Fraction(0)
    for alo, ahi, blo, bhi in zip(a.lower, a.upper, b.lower, b.upper):
        gap = max(Fraction(0), alo - bhi, blo - ahi)
        total += gap * gap
    return total


def subcube_distance_squared(a: Code, b: Code) -> Fraction:
    if a.dimension != b.dimension:
        raise DomainError(
            f"dimension mismatch: {a.dimension} vs {b.dimension}"
        )
    return box_distance_squared(subcube_bounds(a), subcube_bounds(b))


def point_distance_squared(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise DomainError("points have different dimensions")
    return sum(((a - b) ** 2 for a, b in zip(x, y)), Fraction(0))


def encode_point(x: Sequence[Fraction], k: int) -> Code:
    """Order-``k`` code of the half-open box containing ``x``."""
    n = len(x)
    _check_dimension(n)
    if k < 0:
        raise DomainError("order must be non-negative")
    x = [Fraction(v) for v in x]
    for v in x:
        if not 0 <= v <= 1:
            raise DomainError(f"coordinate {v} outside [0, 1]")
    scale = 4**k
    # index m of the interval (m/4^k, (m+1)/4^k], with [0, 1/4^k] for m = 0
    index = []
    for v in x:
        scaled = v * scale
        m = -(-scaled.numerator // scaled.denominator) - 1
        index.append(max(m, 0))
    digits = []
    for p in range(k - 1, -1, -1):
        axes = [(m >> (2 * p)) & 3 for m in index]
        digits.append(axes_to_digit(axes, n))
    return Code(n, tuple(digits))


def decode_code(c: Code) -> tuple[Fraction, ...]:
    """Lower corner of the box of ``c``."""
    scale = 4**c.order
    return tuple(Fraction(m, scale) for m in _axis_numerators(c))


def first_order_codes(n: int) -> list[Code]:
    return [Code(n, (d,)) for d in range(1, 4**n + 1)]
