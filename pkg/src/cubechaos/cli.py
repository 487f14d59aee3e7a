"""``cubechaos`` command line: orbits, verification suites and witness export.

Exit codes: 0 on success (or a passing verification), 1 when a verification
fails, 2 on usage or capacity errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .coding import (
    DEFAULT_MAX_ORDER,
    CapacityError,
    Code,
    DomainError,
    decode_code,
    encode_point,
    subcube_bounds,
)
from .shift import (
    dense_code,
    liyorke_length,
    liyorke_pair,
    orbit,
    periodic_approximant,
    sensitivity_witness,
)
from .tent import check_semiconjugacy, code_interval, itinerary, tent_eval
from .verifiers import (
    MAX_DIMENSION,
    MAX_SEPARATION_DIMENSION,
    VERIFIERS,
    random_code,
    verify_diagonal,
    verify_liyorke,
    verify_periodic_density,
    verify_separation,
    verify_transitivity,
)

CSV_PLACES = 12


class UsageError(Exception):
    pass


def format_decimal(x: Fraction, places: int = CSV_PLACES) -> str:
    """Round a non-negative rational to ``places`` decimals, ties to even."""
    scale = 10**places
    q = round(x * scale)
    return f"{q // scale}.{q % scale:0{places}d}"


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_point(text: str, n: int) -> tuple[Fraction, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise UsageError(f"--init has {len(parts)} coordinates, --dim is {n}")
    try:
        point = tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse initial point {text!r}") from exc
    for x in point:
        if not 0 <= x <= 1:
            raise UsageError(f"coordinate {x} outside [0, 1]")
    return point


def parse_code(text: str, n: int) -> Code:
    try:
        return Code.parse(text, n)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def code_json(c: Code) -> dict:
    return {
        "digits": list(c.digits),
        "order": c.order,
        "point": [fraction_str(x) for x in decode_code(c)],
    }


def orbit_rows(n: int, init: str, steps: int, depth: int | None) -> list[str]:
    if steps < 0:
        raise UsageError("--steps must be non-negative")
    if depth is None:
        depth = steps + 30
    if depth < steps:
        raise CapacityError(f"--depth {depth} is smaller than --steps {steps}")
    code = encode_point(parse_point(init, n), depth)
    record = orbit(code, steps)
    lines = ["step," + ",".join(f"x{j + 1}" for j in range(n))]
    for step in record:
        lines.append(f"{step.t}," + ",".join(format_decimal(x) for x in step.point))
    return lines


def run_orbit(args) -> int:
    lines = orbit_rows(args.dim, args.init, args.steps, args.depth)
    if args.format == "json":
        header, *rows = lines
        payload = {
            "command": "orbit",
            "dimension": args.dim,
            "steps": args.steps,
            "rows": [row.split(",") for row in rows],
        }
        _write(args.out, json.dumps(payload, indent=2) + "\n")
    else:
        _write(args.out, "\n".join(lines) + "\n")
    return 0


def run_verify(args) -> int:
    n = args.dim
    prop = args.property
    if prop == "diagonal":
        report = verify_diagonal(n, args.order or 8, samples=args.trials, seed=args.seed)
    elif prop == "separation":
        report = verify_separation(n, max_dimension=MAX_SEPARATION_DIMENSION)
    elif prop == "transitivity":
        report = verify_transitivity(n, args.order or 2)
    elif prop == "periodic":
        report = verify_periodic_density(
            n, args.order or 8, trials=args.trials, seed=args.seed, depth=args.depth or DEFAULT_MAX_ORDER
        )
    else:
        report = verify_liyorke(n, args.segments, seed=args.seed, depth=args.depth or DEFAULT_MAX_ORDER)
    _write(args.out, report.render())
    return 0 if report.passed else 1


def run_dense(args) -> int:
    limit = args.depth or DEFAULT_MAX_ORDER
    code = dense_code(args.dim, args.order or 1, depth_limit=limit)
    payload = {"command": "dense", "dimension": args.dim, "max_order": args.order or 1}
    payload.update(code_json(code))
    _emit_json(args, payload)
    return 0


def run_periodic(args) -> int:
    if not args.target:
        raise UsageError("periodic needs --target")
    target = parse_code(args.target, args.dim)
    approx = periodic_approximant(target, args.depth or DEFAULT_MAX_ORDER)
    box = subcube_bounds(target)
    payload = {
        "command": "periodic",
        "dimension": args.dim,
        "target": list(target.digits),
        "approximant": code_json(approx),
        "containment": box.closed_contains_box(subcube_bounds(approx))
        and box.contains(decode_code(approx)),
    }
    _emit_json(args, payload)
    return 0


def run_sensitivity(args) -> int:
    if args.prefix is None:
        raise UsageError("sensitivity needs --prefix")
    code = parse_code(args.prefix, args.dim)
    k = args.k
    # short prefixes are padded with digit 1 so position k+1 exists
    order = max(code.order, k + 1, args.depth or 0)
    code = code.extend(*([1] * (order - code.order)))
    w = sensitivity_witness(code, k)
    payload = {
        "command": "sensitivity",
        "dimension": args.dim,
        "original": code_json(w.original),
        "perturbed": code_json(w.perturbed),
        "agree_prefix": w.agree_prefix,
        "separation_step": w.separation_step,
        "initial_diameter_squared": fraction_str(w.initial_diameter_squared),
        "separation": fraction_str(w.guaranteed_squared_separation),
    }
    _emit_json(args, payload)
    return 0


def run_liyorke(args) -> int:
    base = random_code(random.Random(args.seed), args.dim, liyorke_length(args.segments))
    report = verify_liyorke(
        args.dim, args.segments, base=base, depth=args.depth or DEFAULT_MAX_ORDER
    )
    pair = liyorke_pair(base, args.segments)
    payload = {
        "command": "liyorke",
        "dimension": args.dim,
        "segments": args.segments,
        "schedule": [list(seg) for seg in pair.schedule],
        "code_a": code_json(pair.code_a),
        "code_b": code_json(pair.code_b),
        "verification": report.to_dict(),
    }
    _emit_json(args, payload)
    return 0 if report.passed else 1


def run_tent(args) -> int:
    if args.dim != 1:
        raise UsageError("the tent realization is one-dimensional; use --dim 1")
    (x,) = parse_point(args.init or "0", 1)
    k = args.steps
    if k < 1:
        raise UsageError("--steps must be >= 1 for tent")
    itin = itinerary(x, k)
    lo, hi = code_interval(itin)
    iterates = [x]
    for _ in range(k - 1):
        iterates.append(tent_eval(iterates[-1]))
    payload = {
        "command": "tent",
        "x": fraction_str(x),
        "iterates": [fraction_str(v) for v in iterates],
        "itinerary": list(itin.digits),
        "interval": [fraction_str(lo), fraction_str(hi)],
        "semiconjugacy": check_semiconjugacy(x, k),
    }
    _emit_json(args, payload)
    return 0


def _emit_json(args, payload) -> None:
    if args.format == "csv":
        raise UsageError(f"{args.command} only writes json")
    _write(args.out, json.dumps(payload, indent=2) + "\n")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


COMMANDS = {
    "orbit": run_orbit,
    "verify": run_verify,
    "dense": run_dense,
    "periodic": run_periodic,
    "sensitivity": run_sensitivity,
    "liyorke": run_liyorke,
    "tent": run_tent,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, default=1, help="cube dimension n")
    common.add_argument("--depth", type=int, default=None, help="code truncation order")
    common.add_argument("--steps", type=int, default=10)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--order", type=int, default=None)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--segments", type=int, default=10)
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), default=None)

    parser = argparse.ArgumentParser(
        prog="cubechaos", description="Exact symbolic dynamics on the unit n-cube."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", parents=[common], help="iterate the shift from a point, CSV out")
    p.add_argument("--init", required=True, help="comma-separated decimal coordinates")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("property", choices=sorted(VERIFIERS))

    sub.add_parser("dense", parents=[common], help="block-enumeration code with dense orbit")

    p = sub.add_parser("periodic", parents=[common], help="periodic approximant of a target code")
    p.add_argument("--target", help="comma-separated digits")

    p = sub.add_parser("sensitivity", parents=[common], help="sensitivity witness")
    p.add_argument("--prefix", help="comma-separated digits of the original code")
    p.add_argument("--k", type=int, default=0, help="length of the shared prefix")

    sub.add_parser("liyorke", parents=[common], help="scrambled pair with checks")

    p = sub.add_parser("tent", parents=[common], help="tent-map itinerary of a point")
    p.add_argument("--init", help="x in [0,1], decimal or p/q")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.dim < 1 or args.dim > MAX_DIMENSION:
        print(f"cubechaos: error: --dim {args.dim} outside 1..{MAX_DIMENSION}", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DomainError, CapacityError) as exc:
        print(f"cubechaos: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
