"""Exact, brute-force checks of the cube's chaos ingredients.

Each ``verify_*`` function returns a :class:`VerificationReport`.  Reports are
deterministic for fixed parameters and seed and round-trip through JSON with
every rational kept exact as a ``"num/den"`` string.
"""

from __future__ import annotations

import itertools
import json
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .coding import (
    DEFAULT_MAX_ORDER,
    CapacityError,
    Code,
    box_distance_squared,
    decode_code,
    diameter_squared,
    first_order_codes,
    point_distance_squared,
    subcube_bounds,
    subcube_distance_squared,
)
from .shift import (
    dense_code,
    dense_code_length,
    liyorke_length,
    liyorke_pair,
    periodic_approximant,
    separation_bound,
    shift,
)

MAX_SEPARATION_DIMENSION = 4
MAX_DIMENSION = 16
TRANSITIVITY_BUDGET = 4**8

_RATIONAL = re.compile(r"^-?\d+/\d+$")


@dataclass
class VerificationReport:
    property: str
    dimension: int
    params: dict[str, Any] = field(default_factory=dict)
    passed: bool = True
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    counterexample: dict[str, Any] | None = None

    def fail(self, **counterexample):
        # keep the first counterexample found
        if self.passed:
            self.passed = False
            self.counterexample = counterexample

    def to_dict(self) -> dict[str, Any]:
        return {
            "property": self.property,
            "dimension": self.dimension,
            "params": _encode(self.params),
            "pass": self.passed,
            "witnesses": _encode(self.witnesses),
            "counterexample": _encode(self.counterexample),
        }

    def render(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> VerificationReport:
        return cls(
            property=data["property"],
            dimension=data["dimension"],
            params=_decode(data["params"]),
            passed=data["pass"],
            witnesses=_decode(data["witnesses"]),
            counterexample=_decode(data["counterexample"]),
        )

    @classmethod
    def parse(cls, text: str) -> VerificationReport:
        return cls.from_dict(json.loads(text))


def _encode(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _decode(value):
    if isinstance(value, str) and _RATIONAL.match(value):
        return Fraction(value)
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode(v) for v in value]
    return value


def _check_dimension(n: int, cap: int) -> None:
    if n < 1:
        raise CapacityError(f"dimension must be >= 1, got {n}")
    if n > cap:
        raise CapacityError(f"dimension {n} exceeds configured maximum {cap}")


def random_code(rng: random.Random, n: int, k: int) -> Code:
    top = 4**n
    return Code(n, tuple(rng.randint(1, top) for _ in range(k)))


def verify_diagonal(
    n: int,
    k_max: int,
    samples: int = 100,
    seed: int = 0,
    diameter: Callable[[Code], Fraction] = diameter_squared,
    max_dimension: int = MAX_DIMENSION,
) -> VerificationReport:
    """Diameters of sampled order-k boxes equal ``n / 16**k`` and shrink with k.

    ``diameter`` is the routine under test; each value is compared against
    ``n / 16**k`` and against the squared diagonal of the box bounds.
    """
    _check_dimension(n, max_dimension)
    if k_max < 1:
        raise CapacityError("k_max must be >= 1")
    rng = random.Random(seed)
    report = VerificationReport(
        "diagonal", n, {"k_max": k_max, "samples": samples, "seed": seed}
    )
    previous = None
    for k in range(k_max + 1):
        expected = Fraction(n, 16**k)
        for _ in range(samples):
            c = random_code(rng, n, k)
            got = diameter(c)
            box = subcube_bounds(c)
            geometric = sum(((hi - lo) ** 2 for lo, hi in zip(box.lower, box.upper)), Fraction(0))
            if got != expected or geometric != expected:
                report.fail(code=list(c.digits), order=k, value=got, expected=expected)
        if previous is not None and not expected < previous:
            report.fail(order=k, value=expected, previous=previous)
        previous = expected
        report.witnesses.append({"order": k, "diameter_squared": expected})
    return report


def verify_separation(n: int, max_dimension: int = MAX_SEPARATION_DIMENSION) -> VerificationReport:
    """Every first-order cube has a partner at squared distance >= n/16.

    All ``(4**n)**2`` pairs are compared; the witness for ``i`` is the smallest
    qualifying ``j``.
    """
    _check_dimension(n, max_dimension)
    bound = separation_bound(n)
    codes = first_order_codes(n)
    boxes = [subcube_bounds(c) for c in codes]
    report = VerificationReport("separation", n, {"bound": bound, "pairs": len(codes) ** 2})
    for i, box_i in enumerate(boxes, start=1):
        partner = None
        farthest = Fraction(0)
        for j, box_j in enumerate(boxes, start=1):
            dist = box_distance_squared(box_i, box_j)
            farthest = max(farthest, dist)
            if partner is None and j != i and dist >= bound:
                partner = (j, dist)
        if partner is None:
            report.fail(i=i, max_distance_squared=farthest, bound=bound)
            continue
        report.witnesses.append(
            {"i": i, "j": partner[0], "distance_squared": partner[1], "max_distance_squared": farthest}
        )
    return report


def verify_transitivity(
    n: int, q: int, budget: int = TRANSITIVITY_BUDGET, code: Code | None = None
) -> VerificationReport:
    """Some shift of the block-enumeration code lands in every order-q box."""
    if q < 1:
        raise CapacityError("order must be >= 1")
    _check_dimension(n, MAX_DIMENSION)
    targets = (4**n) ** q
    if targets > budget:
        raise CapacityError(
            f"{targets} order-{q} codes exceed the enumeration budget {budget}", required=targets
        )
    if code is None:
        code = dense_code(n, q, depth_limit=dense_code_length(n, q))
    report = VerificationReport(
        "transitivity", n, {"order": q, "code_length": code.order, "targets": targets}
    )
    first_visit: dict[tuple[int, ...], int] = {}
    for t in range(code.order - q + 1):
        first_visit.setdefault(code.digits[t : t + q], t)
    visited = 0
    for target in _all_codes(n, q):
        t = first_visit.get(target.digits)
        if t is None or shift(code, t).digits[:q] != target.digits:
            report.fail(code=list(target.digits))
            continue
        visited += 1
        report.witnesses.append({"code": list(target.digits), "first_visit": t})
    report.params["visited"] = visited
    return report


def _all_codes(n: int, q: int):
    for digits in itertools.product(range(1, 4**n + 1), repeat=q):
        yield Code(n, digits)


def verify_periodic_density(
    n: int,
    p: int,
    trials: int = 100,
    seed: int = 0,
    depth: int = DEFAULT_MAX_ORDER,
    targets: list[Code] | None = None,
) -> VerificationReport:
    """Periodic approximants of random order-p targets lie in the target boxes."""
    _check_dimension(n, MAX_DIMENSION)
    if not 1 <= p <= depth:
        raise CapacityError(f"order {p} outside 1..{depth}")
    rng = random.Random(seed)
    if targets is None:
        targets = [random_code(rng, n, p) for _ in range(trials)]
    eps_sq = Fraction(n, 16**p)
    report = VerificationReport(
        "periodic", n,
        {"order": p, "trials": len(targets), "seed": seed, "depth": depth, "epsilon_squared": eps_sq},
    )
    for target in targets:
        approx = periodic_approximant(target, depth)
        box = subcube_bounds(target)
        inside = box.closed_contains_box(subcube_bounds(approx)) and box.contains(decode_code(approx))
        diam_ok = diameter_squared(target) == eps_sq
        if not (inside and diam_ok):
            report.fail(target=list(target.digits), contained=inside, diameter_ok=diam_ok)
        report.witnesses.append(
            {"target": list(target.digits), "approximant_order": approx.order, "contained": inside}
        )
    return report


def verify_liyorke(
    n: int, m: int, seed: int = 0, base: Code | None = None, depth: int = DEFAULT_MAX_ORDER
) -> VerificationReport:
    """Finite-horizon Li-Yorke checks on a constructed scrambled pair.

    At the start of agree segment ``s`` the shifted points lie in one order-s
    box (squared distance <= n/16**s); at every disagree step their leading
    first-order boxes are at squared distance >= n/16.
    """
    _check_dimension(n, MAX_DIMENSION)
    length = liyorke_length(m)
    if m < 1 or length > depth:
        raise CapacityError(f"{m} segments need {length} digits, depth cap is {depth}", required=length)
    if base is None:
        base = random_code(random.Random(seed), n, length)
    pair = liyorke_pair(base, m)
    bound = separation_bound(n)
    report = VerificationReport("liyorke", n, {"segments": m, "seed": seed, "length": length})
    agree_min = disagree_min = disagree_max = None
    a, b = pair.code_a.digits, pair.code_b.digits
    for kind, t, s in pair.checkpoints():
        if kind == "agree":
            dist = point_distance_squared(
                decode_code(shift(pair.code_a, t)), decode_code(shift(pair.code_b, t))
            )
            limit = Fraction(n, 16**s)
            ok = a[t : t + s] == b[t : t + s] and dist <= limit
            agree_min = dist if agree_min is None else min(agree_min, dist)
            report.witnesses.append({"kind": kind, "t": t, "distance_squared": dist, "bound": limit})
        else:
            dist = subcube_distance_squared(Code(n, a[t : t + 1]), Code(n, b[t : t + 1]))
            ok = dist >= bound
            disagree_min = dist if disagree_min is None else min(disagree_min, dist)
            disagree_max = dist if disagree_max is None else max(disagree_max, dist)
            report.witnesses.append({"kind": kind, "t": t, "distance_squared": dist, "bound": bound})
        if not ok:
            report.fail(kind=kind, t=t, distance_squared=dist)
    report.params.update(
        {
            "min_agree_distance_squared": agree_min,
            "min_disagree_distance_squared": disagree_min,
            "max_disagree_distance_squared": disagree_max,
        }
    )
    return report


VERIFIERS = {
    "diagonal": verify_diagonal,
    "separation": verify_separation,
    "transitivity": verify_transitivity,
    "periodic": verify_periodic_density,
    "liyorke": verify_liyorke,
}
