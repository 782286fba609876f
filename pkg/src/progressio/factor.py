"""Irreducibility testing and complete factorization over prime fields.

Irreducibility uses the classic criterion: f of degree n is irreducible
iff X^(p^n) = X (mod f) and gcd(X^(p^(n/r)) - X, f) = 1 for every prime
divisor r of n. Frobenius powers X^(p^k) mod f are built by modular
composition from X^p mod f, so the cost never depends on the magnitude
of p^k.

Factorization runs squarefree decomposition (with p-th-root recursion
when the derivative vanishes), then distinct-degree splitting, then
randomized equal-degree splitting. Every randomized routine takes an
explicit seed and produces a canonically ordered result, so equal seeds
give byte-identical output; the splitting retry budget is 64 shots per
degree, after which the routine errors rather than looping silently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    ConstantPolynomial,
    PreconditionViolated,
    RetryBudgetExceeded,
    ZeroPolynomial,
)
from .ff import FieldElem
from .poly import (
    Poly,
    _compose_mod,
    _gcd,
    _monic,
    _pow_mod,
    _sub,
    format_poly,
    gcd,
    pow_mod,
)


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _mobius(n: int) -> int:
    mu = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    if n > 1:
        mu = -mu
    return mu


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(out + [n // d for d in out]))


def count_irreducibles(p: int, n: int) -> int:
    """Exact number of monic irreducibles of degree n over F_p."""
    if n < 1:
        raise PreconditionViolated("degree must be >= 1")
    return sum(_mobius(d) * p ** (n // d) for d in _divisors(n)) // n


# ---------------------------------------------------------------------------
# Irreducibility.


def _rabin_irreducible(coeffs, p: int) -> bool:
    """Raw-kernel irreducibility test; coeffs normalized, degree >= 1."""
    n = len(coeffs) - 1
    if n == 1:
        return True
    f = _monic(coeffs, p)
    x = [0, 1]
    memo: dict[int, list[int]] = {}

    def frob(k: int) -> list[int]:
        # X^(p^k) mod f, by composition doubling from X^p mod f.
        v = memo.get(k)
        if v is None:
            if k == 1:
                v = _pow_mod(x, p, f, p)
            else:
                half = k >> 1
                v = _compose_mod(frob(k - half), frob(half), f, p)
            memo[k] = v
        return v

    for k in sorted({n // r for r in _prime_divisors(n)}):
        if len(_gcd(_sub(frob(k), x, p), f, p)) > 1:
            return False
    return frob(n) == x


def is_irreducible(f: Poly) -> bool:
    """True iff f is irreducible over its prime field (degree >= 1)."""
    if f.degree < 1:
        raise ConstantPolynomial("irreducibility needs degree >= 1")
    return _rabin_irreducible(list(f.coeffs), f.field.modulus)


# ---------------------------------------------------------------------------
# Factorization.


def _squarefree_list(f: Poly) -> list[tuple[Poly, int]]:
    # f monic of degree >= 1; returns pairwise coprime squarefree parts
    # with their multiplicities.
    field = f.field
    p = field.modulus
    mult, out = 1, []
    while True:
        deriv = f.derivative()
        done = False
        if not deriv.is_zero():
            g = gcd(f, deriv)
            h = f // g
            i = 1
            while not h.is_one():
                step = gcd(g, h)
                part = h // step
                if part.degree > 0:
                    out.append((part, i * mult))
                g, h, i = g // step, step, i + 1
            if g.is_one():
                done = True
            else:
                f = g
        if done:
            return out
        # Here f' = 0, so f = u(X^p); u is its p-th root coefficient-wise.
        stride = [f.coeffs[i * p] for i in range(f.degree // p + 1)]
        f = Poly(field, stride)
        mult *= p


def _distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    # f monic squarefree, degree >= 1; returns (product of factors, degree).
    p = f.field.modulus
    out = []
    h = Poly.x(f.field) % f
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = pow_mod(h, p, f)
        g = gcd(h - Poly.x(f.field), f)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f, int(f.degree)))
    return out


def _equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    # f monic squarefree, all irreducible factors of degree exactly d.
    field = f.field
    p = field.modulus
    budget = 64 * int(f.degree)
    pieces = [f]
    done: list[Poly] = []
    exponent = (p**d - 1) // 2 if p != 2 else 0
    while pieces:
        g = pieces.pop()
        if g.degree == d:
            done.append(g)
            continue
        while True:
            if budget <= 0:
                raise RetryBudgetExceeded(
                    f"equal-degree splitting exceeded {64 * int(f.degree)} shots"
                )
            budget -= 1
            t = Poly(field, [rng.randrange(p) for _ in range(int(g.degree))])
            if t.degree < 1:
                continue
            if p == 2:
                # Trace map into GF(2): t + t^2 + t^4 + ... (d terms).
                acc = t % g
                tr = acc
                for _ in range(d - 1):
                    acc = pow_mod(acc, 2, g)
                    tr = tr + acc
                cand = gcd(tr, g) if not tr.is_zero() else g
            else:
                w = pow_mod(t, exponent, g) - 1
                cand = gcd(w, g) if not w.is_zero() else g
            if 0 < cand.degree < g.degree:
                pieces.append(cand)
                pieces.append(g // cand)
                break
    return done


def _graded_lex_key(f: Poly):
    return (len(f.coeffs), tuple(reversed(f.coeffs)))


@dataclass(frozen=True, slots=True)
class FactorizationResult:
    """Unit times a product of distinct monic irreducibles with multiplicities."""

    unit: FieldElem
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        """Multiply the factorization back out, exactly."""
        out = Poly.constant(self.unit.field, self.unit)
        for f, mult in self.factors:
            out = out * f**mult
        return out

    def degrees(self) -> tuple[int, ...]:
        """Factor degrees, each repeated by multiplicity, descending."""
        out: list[int] = []
        for f, mult in self.factors:
            out.extend([int(f.degree)] * mult)
        return tuple(sorted(out, reverse=True))

    def to_text(self) -> str:
        lines = []
        if int(self.unit) != 1 or not self.factors:
            lines.append(str(self.unit))
        for f, mult in self.factors:
            lines.append(f"({format_poly(f)})^{mult}")
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()


def factorize(f: Poly, seed: int = 0) -> FactorizationResult:
    """Complete factorization into monic irreducibles, canonically ordered."""
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    unit = f.lc()
    if f.degree < 1:
        return FactorizationResult(unit, ())
    rng = random.Random(seed)
    found: list[tuple[Poly, int]] = []
    for part, mult in _squarefree_list(f.monic()):
        for prod, d in _distinct_degree(part):
            for irr in _equal_degree(prod, d, rng):
                found.append((irr, mult))
    found.sort(key=lambda pair: _graded_lex_key(pair[0]))
    return FactorizationResult(unit, tuple(found))
