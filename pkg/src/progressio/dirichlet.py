"""Searches for irreducible members of the progression {a + b*c : c}.

Over a prime field the progression is guaranteed to contain irreducibles
of every sufficiently large degree (the polynomial-ring analogue of
primes in arithmetic progressions, due to Kornblum and Artin). Two
strategies are offered: the constructed scan rescales the certificate
multiplier through all nonzero field elements, and the exhaustive scan
enumerates every admissible c at desk scale as a brute-force oracle.

Density: when the geometric group of the rescaled family is the full
symmetric group, a fraction of about 1/n of specializations is
irreducible (the n-cycle proportion), so an exhaustive scan over the
p - 1 nonzero scales should find about p/n hits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._par import run_chunked, split_range, worker_count
from .construct import StableCertificate, build_stable, verify_certificate
from .errors import PreconditionViolated, TooLarge
from .factor import _rabin_irreducible, is_irreducible
from .ff import PrimeField
from .poly import Poly, format_poly, gcd

_EXHAUSTIVE_GUARD = 10**7


@dataclass(frozen=True, slots=True)
class SearchReport:
    """Outcome of one progression search."""

    a: Poly
    b: Poly
    n: int
    strategy: str
    hits: tuple[tuple[Poly, Poly], ...]
    scanned: int
    density: Fraction

    def to_csv(self) -> str:
        header = "strategy,p,n,scanned,hits,density"
        row = (
            f"{self.strategy},{self.a.field.modulus},{self.n},"
            f"{self.scanned},{len(self.hits)},{self.density}"
        )
        return header + "\n" + row + "\n"

    def to_detail_text(self) -> str:
        blocks = []
        for c, member in self.hits:
            blocks.append(f"c: {format_poly(c)}\nmember: {format_poly(member)}")
        return "\n\n".join(blocks) + ("\n" if blocks else "")


def _report(a, b, n, strategy, hits, scanned) -> SearchReport:
    density = Fraction(len(hits), scanned) if scanned else Fraction(0)
    return SearchReport(
        a=a, b=b, n=n, strategy=strategy,
        hits=tuple(hits), scanned=scanned, density=density,
    )


def search_constructed(
    a: Poly, b: Poly, n: int, max_hits: int = 16, seed: int = 0
) -> SearchReport:
    """Scan the constructed family {alpha * c : alpha != 0} for members.

    Builds a certificate first (rebuildable bit-for-bit from the same
    seed), so its errors propagate; a report with zero hits is a valid
    outcome, not an error. Each hit records the rescaled multiplier
    alpha*c, so member = a + b*(alpha*c) replays exactly.
    """
    cert = build_stable(a, b, n, seed)
    p = a.field.modulus
    bc = b * cert.c
    hits = []
    scanned = 0
    for alpha in range(1, p):
        if len(hits) >= max_hits:
            break
        scanned += 1
        member = a + alpha * bc
        if is_irreducible(member):
            hits.append((alpha * cert.c, member))
    return _report(a, b, n, "constructed-scan", hits, scanned)


def search_exhaustive(a: Poly, b: Poly, n: int) -> SearchReport:
    """Try every c with deg c = n - deg b; a desk-scale brute-force oracle."""
    if a.field != b.field:
        raise PreconditionViolated("pencil parts over different fields")
    if b.is_zero() or not gcd(a, b).is_one():
        raise PreconditionViolated("need gcd(a, b) = 1 with b != 0")
    field = a.field
    p = field.modulus
    deg_b = int(b.degree)
    deg_c = n - deg_b
    if deg_c < 0:
        return _report(a, b, n, "exhaustive", [], 0)
    if p ** (deg_c + 1) > _EXHAUSTIVE_GUARD:
        raise TooLarge(f"{p}^{deg_c + 1} candidate space exceeds the guard")
    hits = []
    scanned = 0
    small = p <= 64
    for lead in range(1, p):
        for code in range(p**deg_c):
            coeffs = []
            rest = code
            for _ in range(deg_c):
                rest, digit = divmod(rest, p)
                coeffs.append(digit)
            coeffs.append(lead)
            c = Poly(field, coeffs)
            member = a + b * c
            scanned += 1
            if member.degree != n:
                continue
            if n >= 2 and small and any(
                member(x) == 0 for x in range(p)
            ):
                continue  # a rational root refutes irreducibility cheaply
            if _rabin_irreducible(list(member.coeffs), p):
                hits.append((c, member))
    return _report(a, b, n, "exhaustive", hits, scanned)


def _density_chunk(job):
    p, a_coeffs, bc_coeffs, lo, hi = job
    field = PrimeField(p)
    a = Poly(field, a_coeffs)
    bc = Poly(field, bc_coeffs)
    count = 0
    for alpha in range(lo, hi):
        member = a + alpha * bc
        if _rabin_irreducible(list(member.coeffs), p):
            count += 1
    return count


@dataclass(frozen=True, slots=True)
class DensityResult:
    """Irreducible-member count over the full nonzero scale scan."""

    p: int
    n: int
    count: int
    expected: Fraction
    ratio: Fraction

    def to_csv(self) -> str:
        header = "p,n,count,expected,ratio"
        row = f"{self.p},{self.n},{self.count},{self.expected},{self.ratio}"
        return header + "\n" + row + "\n"


def density_scan(cert: StableCertificate, workers: int | None = None) -> DensityResult:
    """Count irreducible members over every nonzero scale, exactly.

    The expectation p/n comes from the n-cycle proportion 1/n in the full
    symmetric group; the ratio count/(p/n) should sit near 1, with an
    error that depends on the curve's genus and is not computed here.
    """
    if not verify_certificate(cert):
        raise PreconditionViolated("density scan needs a valid certificate")
    p = cert.field.modulus
    if workers is None:
        workers = worker_count()
    bc = cert.b * cert.c
    spans = split_range(1, p, workers * 8)
    jobs = [
        (p, list(cert.a.coeffs), list(bc.coeffs), lo, hi) for lo, hi in spans
    ]
    count = sum(run_chunked(_density_chunk, jobs, workers))
    expected = Fraction(p, cert.n)
    return DensityResult(
        p=p,
        n=cert.n,
        count=count,
        expected=expected,
        ratio=Fraction(count) / expected,
    )
