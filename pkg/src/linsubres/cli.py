"""Command line interface.

Subcommands: compute (one subresultant, optional cofactors), psres (all
principal subresultants), verify (self-check sweeps against the
determinant oracle and the Jacobi identities), bench (operation counts
and wall times in CSV).

Exit codes: 0 success, 2 usage or invalid values, 3 unsupported
characteristic case, 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import CharacteristicError, LinsubresError
from .field import (
    FieldDescriptor,
    char_of,
    count_ops,
    binary_pow,
    parse_field_spec,
    prime_field,
    rationals,
)
from .fastsubres import (
    CharCase,
    bernstein_to_monomial,
    classify,
    cofactors,
    result_to_json,
    sres_bernstein,
    sres_fast,
)
from .jacobi import (
    JacobiParams,
    jacobi_hypergeometric,
    jacobi_rodrigues,
    shifted_jacobi,
    verify_pade_identity,
)
from .poly import ProblemSpec, poly_to_json, power_of_linear, psres_oracle, sres_oracle
from .psres import psres_all

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_VERIFY_FAILED = 4

CSV_HEADER = ["m", "n", "d", "field", "algorithm", "adds", "muls", "divs", "wall_ns"]


@dataclass
class BenchRow:
    """One benchmark measurement; counts are the tally of exactly one run."""

    m: int
    n: int
    d: int
    field: str
    algorithm: str
    adds: int
    muls: int
    divs: int
    wall_ns: int

    def to_csv(self) -> list:
        return [
            str(self.m), str(self.n), str(self.d), self.field, self.algorithm,
            str(self.adds), str(self.muls), str(self.divs), str(self.wall_ns),
        ]

    @classmethod
    def from_csv(cls, row) -> "BenchRow":
        return cls(
            m=int(row[0]), n=int(row[1]), d=int(row[2]),
            field=row[3], algorithm=row[4],
            adds=int(row[5]), muls=int(row[6]), divs=int(row[7]),
            wall_ns=int(row[8]),
        )


class _Report:
    """Pass/fail tally with the first counterexample kept for printing."""

    def __init__(self):
        self.passed = 0
        self.failed = 0
        self.first_failure = None

    def record(self, ok: bool, detail: dict) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = detail

    @property
    def total(self) -> int:
        return self.passed + self.failed


def _sample_pairs(descriptor: FieldDescriptor, rng: random.Random, count: int):
    """Deterministic distinct (alpha, beta) samples; small integers over Q."""
    p = descriptor.characteristic
    pairs = []
    while len(pairs) < count:
        if p:
            a, b = rng.randrange(p), rng.randrange(p)
        else:
            a, b = rng.randint(-9, 9), rng.randint(-9, 9)
        if a != b:
            pairs.append((descriptor.element(a), descriptor.element(b)))
    return pairs


def _suite_oracle(max_degree: int, primes, rng: random.Random, report: _Report) -> None:
    """Fast algorithms against the determinant definition, plus the Bezout
    identity and principal-subresultant vector, over Q and each F_p."""
    fields = [rationals()] + [prime_field(p) for p in primes]
    for descriptor in fields:
        p = descriptor.characteristic
        field_name = descriptor.spec_string()
        for m in range(1, max_degree + 1):
            for n in range(1, max_degree + 1):
                if p and p < max(m, n):
                    continue  # unsupported for every d; nothing to claim
                for alpha, beta in _sample_pairs(descriptor, rng, 3):
                    f = power_of_linear(alpha, m)
                    g = power_of_linear(beta, n)
                    base = {
                        "suite": "oracle", "field": field_name, "m": m, "n": n,
                        "alpha": str(alpha), "beta": str(beta),
                    }
                    for d in range(min(m, n)):
                        spec = ProblemSpec(m, n, d, alpha, beta)
                        expected = sres_oracle(f, g, d)
                        result = sres_fast(spec)
                        ok = result.polynomial() == expected
                        # cofactor formulas are not covered for d = 0 with
                        # max(m, n) <= p < m + n - 1 (the value still is)
                        if not (d == 0 and p and p < m + n - 1):
                            pair = cofactors(spec)
                            identity = pair.f * f + pair.g * g
                            ok = ok and identity == expected
                            ok = ok and (pair.f.is_zero() or pair.f.degree < n - d)
                            ok = ok and (pair.g.is_zero() or pair.g.degree < m - d)
                        report.record(
                            ok, dict(base, d=d, case=result.case.value)
                        )
                    if p == 0 or p >= m + n:
                        values = psres_all(m, n, alpha, beta)
                        ok = all(
                            values[d] == psres_oracle(f, g, d)
                            for d in range(min(m, n))
                        )
                        report.record(ok, dict(base, d="all", case="psres"))


def _suite_jacobi(max_degree: int, primes, rng: random.Random, report: _Report) -> None:
    """Hypergeometric vs derivative evaluation, endpoint values, and the
    subresultant = scalar * shifted-Jacobi correspondence, over Q."""
    rationals_field = rationals()
    box = min(max_degree, 6)
    for r in range(box + 1):
        for k in range(-box, box + 1):
            for l in range(-box, box + 1):
                params = JacobiParams(r, k, l)
                hyp = jacobi_hypergeometric(params, rationals_field)
                rod = jacobi_rodrigues(params, rationals_field)
                report.record(
                    hyp == rod,
                    {"suite": "jacobi", "check": "routes", "r": r, "k": k, "l": l},
                )
    one = rationals_field.one
    for r in range(max_degree + 3):
        k = rng.randint(-6, 6)
        l = rng.randint(-6, 6)
        poly = jacobi_hypergeometric(JacobiParams(r, k, l), rationals_field)
        fact = Fraction(math.factorial(r))
        at_plus = Fraction(math.prod(range(k + 1, k + r + 1)), 1) / fact
        at_minus = Fraction((-1) ** r * math.prod(range(l + 1, l + r + 1)), 1) / fact
        ok = poly.evaluate(one) == rationals_field.element(at_plus)
        ok = ok and poly.evaluate(-one) == rationals_field.element(at_minus)
        report.record(ok, {"suite": "jacobi", "check": "endpoints", "r": r, "k": k, "l": l})
    for m in range(1, max_degree + 1):
        for n in range(1, max_degree + 1):
            (alpha, beta), = _sample_pairs(rationals_field, rng, 1)
            delta = alpha - beta
            for d in range(min(m, n)):
                spec = ProblemSpec(m, n, d, alpha, beta)
                scalar = Fraction(1)
                for i in range(1, d + 1):
                    scalar *= Fraction(
                        math.factorial(i) * math.factorial(m + n - d - i - 1),
                        math.factorial(m - i) * math.factorial(n - i),
                    )
                value = rationals_field.element(scalar) * binary_pow(
                    delta, (m - d) * (n - d)
                )
                ok = sres_fast(spec).polynomial() == shifted_jacobi(spec).scale(value)
                report.record(
                    ok,
                    {
                        "suite": "jacobi", "check": "correspondence", "m": m, "n": n,
                        "d": d, "alpha": str(alpha), "beta": str(beta),
                    },
                )


def _suite_pade(max_degree: int, primes, rng: random.Random, report: _Report) -> None:
    """Rational-approximation identity for (1-x)^k, characteristic 0."""
    rationals_field = rationals()
    cap = min(max_degree, 5)
    for m in range(1, cap + 1):
        for n in range(1, cap + 1):
            for k in range(m, max_degree + 3):
                ok = verify_pade_identity(m, n, k, rationals_field)
                report.record(
                    ok, {"suite": "pade", "m": m, "n": n, "k": k, "field": "q"}
                )


def _suite_bernstein(max_degree: int, primes, rng: random.Random, report: _Report) -> None:
    """Pair-basis output: integrality over Z inputs and agreement with the
    monomial route after conversion."""
    fields = [rationals()] + [prime_field(p) for p in primes]
    for descriptor in fields:
        field_name = descriptor.spec_string()
        for m in range(1, max_degree + 1):
            for n in range(1, max_degree + 1):
                for alpha, beta in _sample_pairs(descriptor, rng, 2):
                    for d in range(min(m, n)):
                        spec = ProblemSpec(m, n, d, alpha, beta)
                        if classify(spec) is not CharCase.GENERIC_LARGE:
                            continue
                        result = sres_bernstein(spec)
                        ok = True
                        if descriptor.characteristic == 0:
                            ok = all(c.payload.denominator == 1 for c in result.coeffs)
                        converted = bernstein_to_monomial(result)
                        ok = ok and converted.polynomial() == sres_fast(spec).polynomial()
                        report.record(
                            ok,
                            {
                                "suite": "bernstein", "field": field_name, "m": m,
                                "n": n, "d": d, "alpha": str(alpha), "beta": str(beta),
                            },
                        )


_SUITES = {
    "oracle": _suite_oracle,
    "jacobi": _suite_jacobi,
    "pade": _suite_pade,
    "bernstein": _suite_bernstein,
}


def run_verify(max_degree: int, primes, seed: int, suite: str) -> int:
    rng = random.Random(seed)
    names = list(_SUITES) if suite == "all" else [suite]
    report = _Report()
    for name in names:
        before_passed, before_failed = report.passed, report.failed
        _SUITES[name](max_degree, primes, rng, report)
        suite_failed = report.failed - before_failed
        print(
            f"{name}: {'PASS' if suite_failed == 0 else 'FAIL'} "
            f"{report.passed - before_passed}/"
            f"{report.total - before_passed - before_failed} cases"
        )
    if report.failed:
        print(f"FAIL {report.passed}/{report.total} cases")
        print("first counterexample:")
        print(json.dumps(report.first_failure))
        return EXIT_VERIFY_FAILED
    print(f"PASS {report.passed}/{report.total} cases")
    return EXIT_OK


BENCH_ALGORITHMS = ("fast", "psres_all", "oracle")


def run_bench(sizes, descriptor: FieldDescriptor, oracle_cutoff: int,
              algorithms=BENCH_ALGORITHMS):
    """One row per (size, algorithm): m = n = size, d = size // 2,
    alpha = 1, beta = 2.  Oracle runs are skipped above the cutoff."""
    rows = []
    field_name = descriptor.spec_string()
    alpha = descriptor.element(1)
    beta = descriptor.element(2)
    for size in sizes:
        m = n = size
        d = size // 2
        for algorithm in algorithms:
            if algorithm == "oracle":
                if size > oracle_cutoff:
                    continue
                f = power_of_linear(alpha, m)
                g = power_of_linear(beta, n)
                with count_ops() as counter:
                    start = time.perf_counter_ns()
                    sres_oracle(f, g, d)
                    wall = time.perf_counter_ns() - start
            elif algorithm == "psres_all":
                with count_ops() as counter:
                    start = time.perf_counter_ns()
                    psres_all(m, n, alpha, beta)
                    wall = time.perf_counter_ns() - start
            else:
                spec = ProblemSpec(m, n, d, alpha, beta)
                start = time.perf_counter_ns()
                result = sres_fast(spec)
                wall = time.perf_counter_ns() - start
                counter = result.op_count
            rows.append(BenchRow(m, n, d, field_name, algorithm,
                                 counter.adds, counter.muls, counter.divs, wall))
    return rows


def _parse_int_list(text: str, what: str):
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ValueError(f"bad {what} list {text!r}") from exc
    if not values:
        raise ValueError(f"empty {what} list")
    return values


def cmd_compute(args) -> int:
    descriptor = parse_field_spec(args.field)
    alpha = descriptor.from_str(args.alpha)
    beta = descriptor.from_str(args.beta)
    spec = ProblemSpec(args.m, args.n, args.d, alpha, beta)
    if args.basis == "bernstein":
        result = sres_bernstein(spec)
    else:
        result = sres_fast(spec)
    payload = result_to_json(result)
    if args.cofactors:
        pair = cofactors(spec)
        payload["cofactors"] = {"f": poly_to_json(pair.f), "g": poly_to_json(pair.g)}
    print(json.dumps(payload))
    return EXIT_OK


def cmd_psres(args) -> int:
    descriptor = parse_field_spec(args.field)
    alpha = descriptor.from_str(args.alpha)
    beta = descriptor.from_str(args.beta)
    with count_ops() as counter:
        values = psres_all(args.m, args.n, alpha, beta)
    payload = {
        "m": args.m,
        "n": args.n,
        "alpha": str(alpha),
        "beta": str(beta),
        "field": descriptor.spec_string(),
        "psres": [str(v) for v in values],
        "ops": counter.as_dict(),
    }
    print(json.dumps(payload))
    return EXIT_OK


def cmd_verify(args) -> int:
    primes = _parse_int_list(args.primes, "prime")
    for p in primes:
        prime_field(p)  # validates primality up front
    return run_verify(args.max_degree, primes, args.seed, args.suite)


def cmd_bench(args) -> int:
    sizes = _parse_int_list(args.sizes, "size")
    if any(s < 1 for s in sizes):
        raise ValueError("sizes must be >= 1")
    algorithms = [part.strip() for part in args.algorithms.split(",") if part.strip()]
    unknown = [a for a in algorithms if a not in BENCH_ALGORITHMS]
    if unknown or not algorithms:
        raise ValueError(
            f"bad algorithm list {args.algorithms!r}; "
            f"choose from {', '.join(BENCH_ALGORITHMS)}"
        )
    descriptor = parse_field_spec(args.field)
    rows = run_bench(sizes, descriptor, args.oracle_cutoff, algorithms)
    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(CSV_HEADER)
            writer.writerows(row.to_csv() for row in rows)
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(CSV_HEADER)
        writer.writerows(row.to_csv() for row in rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linsubres",
        description="Exact subresultants of (x-alpha)^m and (x-beta)^n "
        "in linear arithmetic complexity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser(
        "compute", help="one subresultant, optionally with Bezout cofactors"
    )
    compute.add_argument("--m", type=int, required=True, help="exponent of x - alpha")
    compute.add_argument("--n", type=int, required=True, help="exponent of x - beta")
    compute.add_argument("--d", type=int, required=True, help="subresultant index")
    compute.add_argument("--alpha", required=True, help="root of f (e.g. 3 or -5/2)")
    compute.add_argument("--beta", required=True, help="root of g")
    compute.add_argument("--field", default="q", help="q or fp:<prime> (default q)")
    compute.add_argument(
        "--basis", choices=["monomial", "bernstein"], default="monomial",
        help="coefficient basis of the output",
    )
    compute.add_argument(
        "--cofactors", action="store_true", help="also emit the Bezout cofactors"
    )
    compute.set_defaults(func=cmd_compute)

    psres = sub.add_parser("psres", help="all principal subresultants at once")
    psres.add_argument("--m", type=int, required=True)
    psres.add_argument("--n", type=int, required=True)
    psres.add_argument("--alpha", required=True)
    psres.add_argument("--beta", required=True)
    psres.add_argument("--field", default="q")
    psres.set_defaults(func=cmd_psres)

    verify = sub.add_parser(
        "verify", help="self-check sweeps against the determinant oracle"
    )
    verify.add_argument("--max-degree", type=int, default=6)
    verify.add_argument(
        "--suite", choices=["oracle", "jacobi", "pade", "bernstein", "all"],
        default="all",
    )
    verify.add_argument("--primes", default="11,13,101",
                        help="comma-separated prime moduli")
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="operation counts and wall times (CSV)")
    bench.add_argument("--sizes", default="16,32,64,128,256,512,1024",
                       help="comma-separated values of m = n")
    bench.add_argument("--field", default="fp:10007")
    bench.add_argument("--algorithms", default=",".join(BENCH_ALGORITHMS),
                       help="comma-separated subset of fast, psres_all, oracle")
    bench.add_argument("--csv", help="write rows to this file instead of stdout")
    bench.add_argument("--oracle-cutoff", type=int, default=64,
                       help="run the determinant oracle only up to this size")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CharacteristicError as exc:
        # Includes UnsupportedCase: a well-formed request outside the
        # supported characteristic hypotheses.
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (LinsubresError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
