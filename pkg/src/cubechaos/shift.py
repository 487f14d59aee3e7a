"""The shift on subdivision codes and constructive chaos witnesses.

Dropping the leading digit of a code maps the box ``F_{i1 i2 ... ik}`` onto
``F_{i2 ... ik}``.  Everything here is a finite truncation of the infinite
sequences the dynamics really lives on; each construction documents how many
digits it needs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .coding import (
    DEFAULT_MAX_ORDER,
    CapacityError,
    Code,
    DomainError,
    InsufficientDepthError,
    decode_code,
    diameter_squared,
    digit_to_axes,
    point_distance_squared,
    subcube_distance_squared,
)


def separation_bound(n: int) -> Fraction:
    """Squared separation constant ``(sqrt(n)/4)**2``."""
    return Fraction(n, 16)


def shift(c: Code, times: int = 1) -> Code:
    if times < 0:
        raise DomainError("cannot shift a negative number of times")
    if times > c.order:
        if c.order == 0:
            raise DomainError("the order-0 code (whole cube) cannot be shifted")
        raise InsufficientDepthError(
            f"cannot shift {times} times a code of order {c.order}",
            max_steps=c.order,
        )
    return Code(c.dimension, c.digits[times:])


@dataclass(frozen=True)
class OrbitStep:
    t: int
    code: Code
    point: tuple[Fraction, ...]


@dataclass(frozen=True)
class OrbitRecord:
    steps: tuple[OrbitStep, ...]

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    @property
    def points(self) -> list[tuple[Fraction, ...]]:
        return [s.point for s in self.steps]


def orbit(c: Code, steps: int) -> OrbitRecord:
    """Iterate the shift ``steps`` times, recording lower corners.

    Decoding is incremental: after dropping a digit with axis parts ``q`` the
    lower corner numerators lose ``q * 4**(remaining order)``.
    """
    if steps < 0:
        raise DomainError("steps must be non-negative")
    if steps > c.order:
        raise InsufficientDepthError(
            f"orbit of {steps} steps needs order >= {steps}, code has order {c.order}; "
            f"at most {c.order} steps are usable",
            max_steps=c.order,
        )
    n = c.dimension
    k = c.order
    nums = [0] * n
    for d in c.digits:
        axes = digit_to_axes(d, n)
        nums = [4 * m + q for m, q in zip(nums, axes)]
    records = []
    for t in range(steps + 1):
        scale = 4 ** (k - t)
        records.append(
            OrbitStep(t, Code(n, c.digits[t:]), tuple(Fraction(m, scale) for m in nums))
        )
        if t < steps:
            axes = digit_to_axes(c.digits[t], n)
            top = 4 ** (k - t - 1)
            nums = [m - q * top for m, q in zip(nums, axes)]
    return OrbitRecord(tuple(records))


def periodic_code(block: Sequence[int], repetitions: int, n: int) -> Code:
    block = tuple(block)
    if not block:
        raise DomainError("periodic block must be non-empty")
    if repetitions < 1:
        raise DomainError("repetitions must be positive")
    return Code(n, block * repetitions)


def periodic_approximant(target: Code, depth: int = DEFAULT_MAX_ORDER) -> Code:
    """Repeat the digits of ``target`` in whole blocks, up to ``depth`` digits."""
    p = target.order
    if p < 1:
        raise DomainError("target must have order >= 1")
    return periodic_code(target.digits, max(1, depth // p), target.dimension)


def dense_code_length(n: int, q: int) -> int:
    """Length of the block enumeration: sum of ``j * (4**n)**j`` for ``j <= q``."""
    base = 4**n
    return sum(j * base**j for j in range(1, q + 1))


def dense_code(n: int, q: int, depth_limit: int = DEFAULT_MAX_ORDER) -> Code:
    """Every block of length 1..q, lexicographic within each length, concatenated."""
    if q < 1:
        raise DomainError("maximum block order must be >= 1")
    required = dense_code_length(n, q)
    if required > depth_limit:
        raise CapacityError(
            f"dense code for n={n}, q={q} needs {required} digits, limit is {depth_limit}",
            required=required,
        )
    alphabet = range(1, 4**n + 1)
    digits: list[int] = []
    for j in range(1, q + 1):
        for block in itertools.product(alphabet, repeat=j):
            digits.extend(block)
    return Code(n, tuple(digits))


@lru_cache(maxsize=None)
def separated_digit(d: int, n: int) -> int:
    """First-order digit farthest from ``d``; smallest index wins ties."""
    me = Code(n, (d,))
    best, best_dist = None, Fraction(-1)
    for j in range(1, 4**n + 1):
        dist = subcube_distance_squared(me, Code(n, (j,)))
        if dist > best_dist:
            best, best_dist = j, dist
    if best_dist < separation_bound(n):
        raise RuntimeError(f"no first-order cube is separated from digit {d} (n={n})")
    return best


@dataclass(frozen=True)
class SensitivityWitness:
    original: Code
    perturbed: Code
    agree_prefix: int
    separation_step: int
    guaranteed_squared_separation: Fraction

    @property
    def initial_diameter_squared(self) -> Fraction:
        return diameter_squared(self.original.prefix(self.agree_prefix))


def sensitivity_witness(c: Code, k: int) -> SensitivityWitness:
    """Perturb ``c`` after its first ``k`` digits so the orbits split at step ``k``."""
    if k < 0:
        raise DomainError("k must be non-negative")
    if c.order < k + 1:
        raise CapacityError(
            f"sensitivity witness needs order >= {k + 1}, got {c.order}", required=k + 1
        )
    digits = list(c.digits)
    digits[k] = separated_digit(digits[k], c.dimension)
    return SensitivityWitness(
        original=c,
        perturbed=Code(c.dimension, tuple(digits)),
        agree_prefix=k,
        separation_step=k,
        guaranteed_squared_separation=separation_bound(c.dimension),
    )


def liyorke_schedule(m: int) -> list[tuple[int, int]]:
    return [(s, s) for s in range(1, m + 1)]


def liyorke_length(m: int) -> int:
    return m * (m + 1)


@dataclass(frozen=True)
class ScrambledPair:
    code_a: Code
    code_b: Code
    schedule: tuple[tuple[int, int], ...]

    def checkpoints(self):
        """Yield ``(kind, t, s)``: segment ``s`` agrees or disagrees from step ``t``."""
        t = 0
        for s, (agree, disagree) in enumerate(self.schedule, start=1):
            yield "agree", t, agree
            t += agree
            for offset in range(disagree):
                yield "disagree", t + offset, s
            t += disagree


def liyorke_pair(base: Code, m: int) -> ScrambledPair:
    """Pair that alternately shares ``s`` digits and differs in ``s`` digits, s = 1..m."""
    if m < 1:
        raise DomainError("number of segments must be >= 1")
    length = liyorke_length(m)
    if base.order < length:
        raise CapacityError(
            f"Li-Yorke pair with {m} segments needs {length} base digits, got {base.order}",
            required=length,
        )
    a = base.digits[:length]
    b: list[int] = []
    t = 0
    for agree, disagree in liyorke_schedule(m):
        b.extend(a[t : t + agree])
        t += agree
        b.extend(separated_digit(d, base.dimension) for d in a[t : t + disagree])
        t += disagree
    return ScrambledPair(
        Code(base.dimension, a), Code(base.dimension, tuple(b)), tuple(liyorke_schedule(m))
    )


@dataclass
class RecurrenceStats:
    horizon: int
    closeness_order: int
    return_times: list[int] = field(default_factory=list)
    separation_times: list[int] = field(default_factory=list)


def recurrence_stats(c: Code, horizon: int, closeness_order: int) -> RecurrenceStats:
    """Finite-horizon returns to, and separations from, the starting box.

    Only a report; an empty list is a valid outcome.
    """
    need = horizon + closeness_order
    if c.order < need:
        raise CapacityError(
            f"recurrence statistics need order >= {need}, got {c.order}", required=need
        )
    n = c.dimension
    head = c.digits[:closeness_order]
    lead = Code(n, c.digits[:1])
    bound = separation_bound(n)
    stats = RecurrenceStats(horizon, closeness_order)
    for t in range(1, horizon + 1):
        if c.digits[t : t + closeness_order] == head:
            stats.return_times.append(t)
        if subcube_distance_squared(lead, Code(n, c.digits[t : t + 1])) >= bound:
            stats.separation_times.append(t)
    return stats


def orbit_distance_squared(a: Code, b: Code, t: int) -> Fraction:
    """Squared distance between lower corners after ``t`` shifts."""
    return point_distance_squared(decode_code(shift(a, t)), decode_code(shift(b, t)))
