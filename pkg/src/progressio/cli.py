"""Command-line front end.

Subcommands: construct, certify, search, count, factor, selftest. Exit
codes separate the failure families: 0 success, 1 the mathematics said
no (no admissible exponent, field too small, a certification clause
failed), 2 the invocation was malformed. Outputs are bit-deterministic
for a fixed argv and seed; seeded commands print the seed in a header
comment so published artifacts can be replayed.
"""

from __future__ import annotations

import argparse
import random
import sys

from .construct import (
    build_stable,
    certificate_from_text,
    certificate_to_text,
    certificate_violations,
)
from .dirichlet import density_scan, search_constructed, search_exhaustive
from .errors import MathError, UsageError
from .factor import count_irreducibles, factorize
from .ff import PrimeField
from .galois import certify_sn
from .oracle import enumerate_irreducibles, naive_factor, naive_mul
from .poly import Poly, parse_poly


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_construct(args) -> int:
    field = PrimeField(args.p)
    a = parse_poly(field, args.a)
    b = parse_poly(field, args.b)
    cert = build_stable(a, b, args.n, args.seed)
    _emit(f"# seed: {args.seed}\n" + certificate_to_text(cert), args.output)
    return 0


def _cmd_certify(args) -> int:
    with open(args.cert, encoding="utf-8") as fh:
        cert = certificate_from_text(fh.read())
    violated = certificate_violations(cert)
    if violated:
        for name in violated:
            print(f"violated: {name}", file=sys.stderr)
        return 1
    sn = certify_sn(cert)
    _emit(sn.to_text(), args.output)
    return 0


def _cmd_search(args) -> int:
    field = PrimeField(args.p)
    a = parse_poly(field, args.a)
    b = parse_poly(field, args.b)
    if args.strategy == "constructed":
        report = search_constructed(a, b, args.n, args.max_hits, args.seed)
    else:
        report = search_exhaustive(a, b, args.n)
    body = report.to_csv() if args.format == "csv" else report.to_detail_text()
    _emit(f"# seed: {args.seed}\n" + body, args.output)
    return 0


def _cmd_count(args) -> int:
    with open(args.cert, encoding="utf-8") as fh:
        cert = certificate_from_text(fh.read())
    result = density_scan(cert)
    _emit(result.to_csv(), args.output)
    return 0


def _cmd_factor(args) -> int:
    field = PrimeField(args.p)
    f = parse_poly(field, args.f)
    _emit(factorize(f, args.seed).to_text() + "\n", args.output)
    return 0


def _selftest_suites(level: str):
    degree_cap = 4 if level == "quick" else 6
    yield "necklace counts match enumeration", lambda: all(
        count_irreducibles(2, n) == len(enumerate_irreducibles(2, n))
        for n in range(1, degree_cap + 1)
    )

    def factor_agreement() -> bool:
        moduli = (2,) if level == "quick" else (2, 3)
        for p in moduli:
            field = PrimeField(p)
            for code in range(1, p ** (degree_cap + 1)):
                coeffs, rest = [], code
                while rest:
                    rest, digit = divmod(rest, p)
                    coeffs.append(digit)
                f = Poly(field, coeffs)
                if f.degree < 1:
                    continue
                ours = factorize(f)
                ref = naive_factor(f)
                if ours.unit != ref.unit or set(ours.factors) != set(ref.factors):
                    return False
                if ours.expand() != f:
                    return False
        return True

    yield "factorization agrees with trial division", factor_agreement

    def mul_agreement() -> bool:
        rng = random.Random(7)
        rounds = 100 if level == "quick" else 1000
        for _ in range(rounds):
            p = rng.choice((2, 3, 101))
            field = PrimeField(p)
            f = Poly(field, [rng.randrange(p) for _ in range(rng.randrange(1, 65))])
            g = Poly(field, [rng.randrange(p) for _ in range(rng.randrange(1, 65))])
            if f * g != naive_mul(f, g):
                return False
        return True

    yield "product kernel agrees with convolution", mul_agreement

    def roundtrip() -> bool:
        field = PrimeField(13)
        a = parse_poly(field, "X+1")
        b = parse_poly(field, "1")
        cert = build_stable(a, b, 9, 0)
        replay = certificate_from_text(certificate_to_text(cert))
        return not certificate_violations(replay) and certify_sn(replay).n == 9

    yield "certificate round-trip certifies", roundtrip


def _cmd_selftest(args) -> int:
    failures = 0
    for name, suite in _selftest_suites(args.level):
        ok = suite()
        print(f"{'ok' if ok else 'FAIL'}  {name}")
        if not ok:
            failures += 1
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="progressio",
        description=(
            "Search for irreducible polynomials in arithmetic progressions "
            "over prime fields, and certify the constructions behind the search."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pencil_args(sp):
        sp.add_argument("-p", type=int, required=True, help="prime modulus")
        sp.add_argument("-a", required=True, help="polynomial a (text grammar)")
        sp.add_argument("-b", required=True, help="polynomial b (text grammar)")
        sp.add_argument("-n", type=int, required=True, help="target degree")

    sp = sub.add_parser("construct", help="build and print a certificate")
    add_pencil_args(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=_cmd_construct)

    sp = sub.add_parser("certify", help="replay a certificate file")
    sp.add_argument("--cert", required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=_cmd_certify)

    sp = sub.add_parser("search", help="search the progression for members")
    add_pencil_args(sp)
    sp.add_argument(
        "--strategy", choices=("constructed", "exhaustive"), default="constructed"
    )
    sp.add_argument("--max-hits", type=int, default=16)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("csv", "structured-text"), default="csv")
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=_cmd_search)

    sp = sub.add_parser("count", help="exhaustive density scan of a certificate")
    sp.add_argument("--cert", required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=_cmd_count)

    sp = sub.add_parser("factor", help="factor a polynomial over F_p")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-f", required=True, help="polynomial (text grammar)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=_cmd_factor)

    sp = sub.add_parser("selftest", help="run the built-in oracle cross-checks")
    sp.add_argument("--level", choices=("quick", "full"), default="quick")
    sp.set_defaults(fn=_cmd_selftest)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except MathError as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
