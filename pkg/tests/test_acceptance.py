"""Exit criteria, one test each, all exact.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary lists one
PASS/FAIL line per criterion.
"""

import itertools
import random
from fractions import Fraction

from cubechaos.cli import main
from cubechaos.coding import (
    Code,
    decode_code,
    diameter_squared,
    encode_point,
    point_distance_squared,
    subcube_bounds,
    subcube_distance_squared,
)
from cubechaos.shift import (
    dense_code,
    dense_code_length,
    periodic_approximant,
    sensitivity_witness,
    shift,
)
from cubechaos.tent import check_semiconjugacy, code_interval
from cubechaos.verifiers import (
    random_code,
    verify_liyorke,
    verify_periodic_density,
    verify_separation,
)
from oracles import closed_gap_squared, forward_interval_oracle

SEED = 20240601


def test_c01_first_order_distances_1d(criterion):
    with criterion(1, "first-order distances d(F1,F3)=d(F1,F4)=d(F2,F4)=1/4 in 1D", 1.0):
        got = {
            (a, b): subcube_distance_squared(Code(1, (a,)), Code(1, (b,)))
            for a, b in [(1, 3), (1, 4), (2, 4)]
        }
        wrong = {pair: v for pair, v in got.items() if v != Fraction(1, 16)}
        assert not wrong, f"squared distances differing from 1/16: {wrong}"


def test_c02_diagonal_property(criterion):
    with criterion(2, "diameter^2 = n/16^k, n<=5, k<=10, 100 codes each", 1.0):
        rng = random.Random(SEED)
        for n in range(1, 6):
            for k in range(0, 11):
                for _ in range(100):
                    c = random_code(rng, n, k)
                    assert diameter_squared(c) == Fraction(n, 16**k)
                    box = subcube_bounds(c)
                    assert all(hi - lo == Fraction(1, 4**k) for lo, hi in zip(box.lower, box.upper))


def test_c03_separation_property(criterion):
    with criterion(3, "every first-order cube has a partner at distance^2 >= n/16, n<=4", 10.0):
        for n in range(1, 5):
            report = verify_separation(n)
            assert report.passed, report.counterexample
            assert len(report.witnesses) == 4**n
            for w in report.witnesses:
                a = subcube_bounds(Code(n, (w["i"],)))
                b = subcube_bounds(Code(n, (w["j"],)))
                assert closed_gap_squared((a.lower, a.upper), (b.lower, b.upper)) >= Fraction(n, 16)


def test_c04_semiconjugacy_sweep(criterion):
    with criterion(4, "tent semiconjugacy on 1000 rationals with denominator 4^20, k=19", 10.0):
        rng = random.Random(SEED)
        for _ in range(1000):
            x = Fraction(rng.randint(0, 4**20), 4**20)
            assert check_semiconjugacy(x, 19), x


def test_c05_tent_interval_oracle(criterion):
    with criterion(5, "code_interval == forward preimage oracle, all codes of order <= 6", 30.0):
        count = 0
        for k in range(1, 7):
            for digits in itertools.product(range(1, 5), repeat=k):
                lo, hi = code_interval(Code(1, digits))
                assert (lo, hi) == forward_interval_oracle(digits), digits
                assert hi - lo == Fraction(1, 4**k)
                count += 1
        assert count == sum(4**k for k in range(1, 7))


def test_c06_transitivity(criterion):
    with criterion(6, "dense_code(1,3) length 228 visits 64 boxes; dense_code(2,2) visits 256", 30.0):
        for n, q, length in [(1, 3, 228), (2, 2, 528)]:
            code = dense_code(n, q, depth_limit=dense_code_length(n, q))
            assert code.order == length
            visited = set()
            for t in range(code.order - q + 1):
                visited.add(shift(code, t).digits[:q])
            assert len(visited) == (4**n) ** q


def test_c07_periodic_density(criterion):
    with criterion(7, "100 order-8 periodic approximants in n=2 lie in target boxes", 5.0):
        report = verify_periodic_density(2, 8, trials=100, seed=SEED)
        assert report.passed, report.counterexample
        rng = random.Random(SEED)
        for _ in range(100):
            target = random_code(rng, 2, 8)
            approx = periodic_approximant(target)
            box = subcube_bounds(target)
            assert box.closed_contains_box(subcube_bounds(approx))
            assert diameter_squared(target) == Fraction(2, 16**8)


def test_c08_sensitivity(criterion):
    with criterion(8, "sensitivity witnesses, n in {1,2,3}, k in {0,2,5}", 5.0):
        rng = random.Random(SEED)
        for n in (1, 2, 3):
            for _ in range(100):
                c = random_code(rng, n, 8)
                for k in (0, 2, 5):
                    w = sensitivity_witness(c, k)
                    assert diameter_squared(w.original.prefix(k)) == Fraction(n, 16**k)
                    assert w.perturbed.digits[:k] == c.digits[:k]
                    start = point_distance_squared(decode_code(w.original), decode_code(w.perturbed))
                    assert start <= Fraction(n, 16**k)
                    a, b = shift(w.original, k), shift(w.perturbed, k)
                    sep = subcube_distance_squared(Code(n, a.digits[:1]), Code(n, b.digits[:1]))
                    assert sep >= Fraction(n, 16)


def test_c09_liyorke(criterion):
    with criterion(9, "Li-Yorke pair, m=10, n=1: agree <= 16^-10, disagree >= 1/16", 5.0):
        report = verify_liyorke(1, 10, seed=SEED)
        assert report.passed, report.counterexample
        agree = [w["distance_squared"] for w in report.witnesses if w["kind"] == "agree"]
        disagree = [w["distance_squared"] for w in report.witnesses if w["kind"] == "disagree"]
        assert min(agree) <= Fraction(1, 16**10)
        assert len(disagree) == sum(range(1, 11))
        assert all(d >= Fraction(1, 16) for d in disagree)


def test_c10_square_trajectory(criterion, tmp_path):
    with criterion(10, "orbit from (0.5746337359, 0.3027738565), 1000 steps at depth 1030", 10.0):
        init = "0.5746337359,0.3027738565"
        argv = ["orbit", "--dim", "2", "--init", init, "--steps", "1000", "--depth", "1030"]
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(argv + ["--out", str(first)]) == 0
        assert main(argv + ["--out", str(second)]) == 0
        data = first.read_bytes()
        assert data == second.read_bytes()

        rows = data.decode().splitlines()
        assert rows[0] == "step,x1,x2"
        assert len(rows) == 1002
        for row in rows[1:]:
            assert all(0 <= Fraction(v) <= 1 for v in row.split(",")[1:])

        digits = encode_point([Fraction(v) for v in init.split(",")], 1030).digits
        tail = digits[len(digits) // 2 :]
        for p in range(1, 21):
            assert any(digits[i] != digits[i + p] for i in range(len(digits) - p)), p
            assert any(tail[i] != tail[i + p] for i in range(len(tail) - p)), p
