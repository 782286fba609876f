"""Cycle-type evidence and symmetric-group certification.

Specializing the rescaled family a + b·c·Y at Y = alpha and factoring
over F_p reads off permutation-group data: for squarefree specializations
the factor-degree multiset is the cycle type of a Frobenius element, and
for the designated ramified specializations the multiplicity pattern
(e_1, ..., e_r) yields an inertia element of that cycle type, provided
every e_i is coprime to p, with one wild exception: characteristic 2
with a single doubled point, which still yields the transposition.

``certify_sn`` draws only certified conclusions: transitivity comes from
a gcd that is stable under constant-field extension, the long cycle and
the transposition come from the two ramification witnesses, and a
transitive group containing both (with n/2 < e < n, gcd(e, n) = 1) is the
full symmetric group. ``cycle_type_histogram`` is empirical evidence, kept
deliberately separate from certification.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from ._par import run_chunked, split_range, worker_count
from .construct import StableCertificate, verify_certificate
from .errors import (
    ClauseFailed,
    DegreeDrop,
    FieldMismatch,
    NonSquarefreeUnramifiedPart,
    PreconditionViolated,
)
from .factor import factorize
from .ff import FieldElem, PrimeField
from .poly import Poly, gcd

_SEED_MIX = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


def derive_seed(seed: int, alpha: int) -> int:
    """Per-specialization seed, independent of scan partitioning."""
    return (seed ^ (alpha * _SEED_MIX)) & _MASK64


def specialize(pencil_c: tuple[Poly, Poly, Poly], alpha: FieldElem | int) -> Poly:
    """The member a + alpha*(b*c); alpha = 0 would drop the leading term."""
    a, b, c = pencil_c
    alpha = a.field(alpha)
    if not alpha:
        raise DegreeDrop("specializing at 0 kills the degree-n coefficient")
    return a + alpha * (b * c)


@dataclass(frozen=True, slots=True)
class RamificationType:
    """Multiplicity pattern of one specialization, as inertia evidence."""

    exponents: tuple[int, ...]
    n: int
    tame_flags: tuple[bool, ...]
    wild_exception: bool

    @property
    def is_valid_evidence(self) -> bool:
        """Tame everywhere, or the characteristic-2 single-double exception."""
        return all(self.tame_flags) or self.wild_exception


def ramification_type(f_alpha: Poly, p: int | None = None) -> RamificationType:
    """Extract the ramification pattern from one specialization.

    Every repeated factor must be linear (the certificate construction
    only ever ramifies at rational points; nonlinear repeated factors are
    outside the evidence this module is prepared to certify), and the
    multiplicity-one part must be squarefree.
    """
    if p is not None and p != f_alpha.field.modulus:
        raise FieldMismatch(
            f"characteristic {p} does not match the field of the polynomial"
        )
    p = f_alpha.field.modulus
    result = factorize(f_alpha)
    exponents: list[int] = []
    plain = Poly.one(f_alpha.field)
    for factor, mult in result.factors:
        d = int(factor.degree)
        if mult >= 2:
            if d != 1:
                raise NonSquarefreeUnramifiedPart(
                    f"repeated factor of degree {d} is not linear"
                )
            exponents.append(mult)
        elif d == 1:
            exponents.append(1)
        else:
            exponents.extend([1] * d)
            plain = plain * factor
    if plain.degree >= 1 and not gcd(plain, plain.derivative()).is_one():
        raise NonSquarefreeUnramifiedPart("multiplicity-one part not separable")
    exponents.sort(reverse=True)
    evens = [x for x in exponents if x % 2 == 0]
    wild = p == 2 and evens == [2]
    return RamificationType(
        exponents=tuple(exponents),
        n=sum(exponents),
        tame_flags=tuple(math.gcd(x, p) == 1 for x in exponents),
        wild_exception=wild,
    )


@dataclass(frozen=True, slots=True)
class TransitivityEvidence:
    gcd_is_one: bool
    justification: str


_TRANSITIVITY_NOTE = (
    "gcd(a, b*c) = 1 over the prime field; the Euclidean algorithm is "
    "unchanged by constant-field extension, so the rescaled family stays "
    "irreducible, hence transitive, over the algebraic closure"
)


@dataclass(frozen=True, slots=True)
class SnCertificate:
    """Clause record concluding the geometric group is all of S_n."""

    n: int
    e: int
    witness_alpha1: FieldElem
    witness_alpha2: FieldElem
    transitive_reason: TransitivityEvidence
    checks: tuple[tuple[str, bool, str], ...]

    def to_text(self) -> str:
        lines = ["clause,passed,detail"]
        for name, passed, detail in self.checks:
            safe = detail.replace('"', '""')
            lines.append(f'{name},{str(passed).lower()},"{safe}"')
        return "\n".join(lines) + "\n"


def long_cycle_evidence(rt: RamificationType, n: int, e: int) -> bool:
    """Does this inertia type witness a tame e-cycle forcing primitivity?

    Needs the type to be exactly {e, 1, ..., 1} summing to n, fully tame,
    with n/2 < e < n and gcd(e, n) = 1; a transitive group containing
    such a cycle preserves no nontrivial block system.
    """
    big = [x for x in rt.exponents if x != 1]
    return (
        rt.n == n
        and big == [e]
        and all(rt.tame_flags)
        and 2 * e > n
        and e < n
        and math.gcd(e, n) == 1
    )


def transposition_evidence(rt: RamificationType, n: int) -> bool:
    """Does this inertia type witness a transposition (type {2, 1, ..., 1})?"""
    big = [x for x in rt.exponents if x != 1]
    return rt.n == n and big == [2] and rt.is_valid_evidence


def certify_sn(cert: StableCertificate) -> SnCertificate:
    """All-or-nothing certification; raises ClauseFailed at the first gap."""
    if not verify_certificate(cert):
        raise ClauseFailed("certificate", "certificate replay failed")
    n, e = cert.n, cert.e
    checks: list[tuple[str, bool, str]] = []

    def clause(name: str, ok: bool, detail: str):
        checks.append((name, ok, detail))
        if not ok:
            raise ClauseFailed(name, detail)

    transitive = gcd(cert.a, cert.b * cert.c).is_one()
    clause("transitive", transitive, _TRANSITIVITY_NOTE)

    pencil = (cert.a, cert.b, cert.c)
    rt1 = ramification_type(specialize(pencil, cert.alpha1))
    clause(
        "long-cycle",
        long_cycle_evidence(rt1, n, e),
        f"inertia type {rt1.exponents} gives a tame {e}-cycle, "
        f"{n}/2 < {e} < {n}, gcd({e},{n})=1",
    )

    rt2 = ramification_type(specialize(pencil, cert.alpha2))
    clause(
        "transposition",
        transposition_evidence(rt2, n),
        f"inertia type {rt2.exponents} gives a transposition"
        + (" (wild characteristic-2 case)" if rt2.wild_exception else ""),
    )

    clause(
        "symmetric-group",
        True,
        "a transitive group with such a long cycle is primitive, and a "
        "primitive group containing a transposition is the full symmetric group",
    )
    return SnCertificate(
        n=n,
        e=e,
        witness_alpha1=cert.alpha1,
        witness_alpha2=cert.alpha2,
        transitive_reason=TransitivityEvidence(transitive, _TRANSITIVITY_NOTE),
        checks=tuple(checks),
    )


# ---------------------------------------------------------------------------
# Empirical cycle-type sampling (evidence, not proof).


def _histogram_chunk(job):
    p, a_coeffs, bc_coeffs, alphas, seed = job
    field = PrimeField(p)
    a = Poly(field, a_coeffs)
    bc = Poly(field, bc_coeffs)
    counts: Counter = Counter()
    skipped = 0
    for alpha in alphas:
        if alpha % p == 0:
            skipped += 1
            continue
        member = a + alpha * bc
        result = factorize(member, seed=derive_seed(seed, alpha))
        if any(mult > 1 for _, mult in result.factors):
            skipped += 1
            continue
        counts[result.degrees()] += 1
    return counts, skipped


@dataclass(frozen=True)
class CycleTypeHistogram:
    """Counts of factor-degree multisets over sampled specializations."""

    counts: dict[tuple[int, ...], int]
    skipped: int

    def to_csv(self) -> str:
        lines = ["cycle_type,count"]
        for ctype in sorted(self.counts, reverse=True):
            label = "-".join(str(x) for x in ctype)
            lines.append(f"{label},{self.counts[ctype]}")
        return "\n".join(lines) + "\n"


def cycle_type_histogram(
    pencil_c: tuple[Poly, Poly, Poly],
    sample,
    seed: int = 0,
    workers: int | None = None,
) -> CycleTypeHistogram:
    """Factor a + alpha*b*c over a sample of alphas and bin the cycle types.

    Specializations at 0 or with repeated factors are skipped and counted;
    they are the finitely many branch points, not errors. Per-alpha
    factorization seeds derive from (seed, alpha), so the result does not
    depend on how the sample is partitioned across workers.
    """
    a, b, c = pencil_c
    if a.field != b.field or a.field != c.field:
        raise PreconditionViolated("pencil parts over different fields")
    p = a.field.modulus
    alphas = sorted({int(a.field(x)) for x in sample})
    if not alphas:
        return CycleTypeHistogram({}, 0)
    if workers is None:
        workers = worker_count()
    bc = b * c
    spans = split_range(0, len(alphas), workers * 4)
    jobs = [
        (p, list(a.coeffs), list(bc.coeffs), alphas[lo:hi], seed)
        for lo, hi in spans
    ]
    merged: Counter = Counter()
    skipped = 0
    for counts, skip in run_chunked(_histogram_chunk, jobs, workers):
        merged.update(counts)
        skipped += skip
    return CycleTypeHistogram(dict(merged), skipped)
