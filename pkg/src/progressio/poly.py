"""Dense univariate polynomial algebra over a prime field.

A ``Poly`` owns an immutable, normalized coefficient tuple (index i holds
the coefficient of X^i; the tuple is empty for the zero polynomial and
never ends in 0 otherwise) together with its ``PrimeField``. The degree of
the zero polynomial is the sentinel ``ZERO_DEGREE`` (minus infinity), which
compares below every integer but poisons arithmetic instead of silently
acting like -1.

Module-level helpers (``gcd``, ``xgcd``, ``pow_mod``, ``compose_mod``)
operate on Poly values; the underscore-prefixed kernels work on raw
coefficient lists and carry the performance-sensitive inner loops.

Text grammar (both directions, bit-exact): a polynomial is either a
comma-separated low-to-high coefficient list ("1,0,3") or a symbolic sum
("3*X^2+1"). The printer emits the symbolic form with descending powers
and coefficients reduced to [0, p).
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import BothZero, FieldMismatch, ParseError, ZeroPolynomial
from .ff import FieldElem, PrimeField

ZERO_DEGREE = float("-inf")

_KARATSUBA_CUTOFF = 64


# ---------------------------------------------------------------------------
# Raw kernels on normalized coefficient lists (low-to-high, ints in [0, p)).


def _trim(c: list[int]) -> list[int]:
    while c and not c[-1]:
        c.pop()
    return c


def _add(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] = (out[i] + bi) % p
    return _trim(out)


def _sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, bi in enumerate(b):
        out[i] = (out[i] - bi) % p
    return _trim(out)


def _neg(a: Sequence[int], p: int) -> list[int]:
    return [(-ai) % p for ai in a]


def _mul_school(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([v % p for v in out])


def _mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) <= _KARATSUBA_CUTOFF:
        return _mul_school(a, b, p)
    k = max(len(a), len(b)) // 2
    a0, a1 = list(a[:k]), list(a[k:])
    b0, b1 = list(b[:k]), list(b[k:])
    lo = _mul(_trim(a0), _trim(b0), p)
    hi = _mul(_trim(a1), _trim(b1), p)
    mid = _mul(_add(a0, a1, p), _add(b0, b1, p), p)
    mid = _sub(_sub(mid, lo, p), hi, p)
    out = [0] * (len(a) + len(b) - 1)
    for i, v in enumerate(lo):
        out[i] = v
    for i, v in enumerate(mid):
        out[i + k] = (out[i + k] + v) % p
    for i, v in enumerate(hi):
        out[i + 2 * k] = (out[i + 2 * k] + v) % p
    return _trim(out)


def _mul_scalar(a: Sequence[int], s: int, p: int) -> list[int]:
    s %= p
    if s == 0:
        return []
    return [ai * s % p for ai in a]


def _divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    inv_lc = pow(b[-1], -1, p)
    rem = list(a)
    nb = len(b)
    quot = [0] * (len(a) - nb + 1)
    for i in range(len(a) - nb, -1, -1):
        if len(rem) == i + nb:
            q = rem[-1] * inv_lc % p
            quot[i] = q
            if q:
                for j in range(nb - 1):
                    rem[i + j] = (rem[i + j] - q * b[j]) % p
            rem.pop()
            _trim(rem)
    return quot, rem


def _mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return _divmod(a, b, p)[1]


def _monic(a: Sequence[int], p: int) -> list[int]:
    if not a or a[-1] == 1:
        return list(a)
    return _mul_scalar(a, pow(a[-1], -1, p), p)


def _gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _mod(a, b, p)
    return _monic(a, p)


def _xgcd(a, b, p):
    a, b = list(a), list(b)
    s, s1 = [1], []
    t, t1 = [], [1]
    while b:
        q, r = _divmod(a, b, p)
        a, b = b, r
        s, s1 = s1, _sub(s, _mul(q, s1, p), p)
        t, t1 = t1, _sub(t, _mul(q, t1, p), p)
    if a:
        inv_lc = pow(a[-1], -1, p)
        a = _mul_scalar(a, inv_lc, p)
        s = _mul_scalar(s, inv_lc, p)
        t = _mul_scalar(t, inv_lc, p)
    return a, s, t


def _pow_mod(base: Sequence[int], k: int, modulus: Sequence[int], p: int) -> list[int]:
    result = _mod([1], modulus, p)
    acc = _mod(base, modulus, p)
    while k:
        if k & 1:
            result = _mod(_mul(result, acc, p), modulus, p)
        k >>= 1
        if k:
            acc = _mod(_mul(acc, acc, p), modulus, p)
    return result


def _compose_mod(outer, inner, modulus, p):
    # Horner evaluation of outer at inner, reduced mod modulus.
    result: list[int] = []
    for coeff in reversed(list(outer)):
        result = _mod(_mul(result, inner, p), modulus, p)
        if coeff:
            result = _add(result, [coeff], p)
    return result


def _deriv(a: Sequence[int], p: int) -> list[int]:
    return _trim([i * ai % p for i, ai in enumerate(a)][1:])


def _eval(a: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for coeff in reversed(list(a)):
        acc = (acc * x + coeff) % p
    return acc


# ---------------------------------------------------------------------------
# The Poly value type.


class Poly:
    """An immutable dense polynomial over a PrimeField."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs: Iterable[int | FieldElem] = ()):
        p = field.modulus
        raw = [int(c) % p for c in coeffs]
        _trim(raw)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(raw))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors

    @classmethod
    def zero(cls, field: PrimeField) -> Poly:
        return cls(field, ())

    @classmethod
    def one(cls, field: PrimeField) -> Poly:
        return cls(field, (1,))

    @classmethod
    def x(cls, field: PrimeField) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: PrimeField, c: int | FieldElem) -> Poly:
        return cls(field, (int(c),))

    @classmethod
    def monomial(cls, field: PrimeField, c: int | FieldElem, k: int) -> Poly:
        return cls(field, [0] * k + [int(c)])

    @classmethod
    def linear(cls, field: PrimeField, root: int | FieldElem) -> Poly:
        """The monic polynomial X - root."""
        return cls(field, (-int(root), 1))

    # -- structure

    @property
    def degree(self) -> int | float:
        """Degree, or ZERO_DEGREE (-inf) for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def lc(self) -> FieldElem:
        """Leading coefficient (zero for the zero polynomial)."""
        return self.field(self.coeffs[-1] if self.coeffs else 0)

    def coeff(self, i: int) -> FieldElem:
        return self.field(self.coeffs[i] if 0 <= i < len(self.coeffs) else 0)

    def monic(self) -> Poly:
        return self._wrap(_monic(self.coeffs, self.field.modulus))

    def _wrap(self, raw: list[int]) -> Poly:
        out = object.__new__(Poly)
        object.__setattr__(out, "field", self.field)
        object.__setattr__(out, "coeffs", tuple(raw))
        return out

    def _coerce(self, other) -> tuple[int, ...] | None:
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch("polynomials over different fields")
            return other.coeffs
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatch("scalar from a different field")
            return (other.residue,) if other.residue else ()
        if isinstance(other, int):
            r = other % self.field.modulus
            return (r,) if r else ()
        return None

    # -- ring operations

    def __add__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return self._wrap(_add(self.coeffs, oc, self.field.modulus))

    __radd__ = __add__

    def __sub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return self._wrap(_sub(self.coeffs, oc, self.field.modulus))

    def __rsub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return self._wrap(_sub(oc, self.coeffs, self.field.modulus))

    def __mul__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return self._wrap(_mul(self.coeffs, oc, self.field.modulus))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(_neg(self.coeffs, self.field.modulus))

    def __divmod__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        q, r = _divmod(self.coeffs, oc, self.field.modulus)
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other):
        qr = self.__divmod__(other)
        return qr[0] if qr is not NotImplemented else NotImplemented

    def __mod__(self, other):
        qr = self.__divmod__(other)
        return qr[1] if qr is not NotImplemented else NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Poly.one(self.field)
        acc = self
        while k:
            if k & 1:
                result = result * acc
            k >>= 1
            if k:
                acc = acc * acc
        return result

    def derivative(self) -> Poly:
        """Formal derivative; exponents divisible by p drop out."""
        return self._wrap(_deriv(self.coeffs, self.field.modulus))

    def __call__(self, x: int | FieldElem) -> FieldElem:
        """Horner evaluation; empty polynomial evaluates to 0."""
        xr = int(self.field(x))
        return self.field(_eval(self.coeffs, xr, self.field.modulus))

    # -- comparisons / hashing

    def __eq__(self, other):
        if isinstance(other, Poly):
            return other.field == self.field and other.coeffs == self.coeffs
        if isinstance(other, (int, FieldElem)):
            return self.coeffs == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.modulus, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly(F{self.field.modulus}, {format_poly(self)})"


# ---------------------------------------------------------------------------
# Module-level algebra on Poly values.


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor; BothZero if f = g = 0."""
    if f.field != g.field:
        raise FieldMismatch("gcd of polynomials over different fields")
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    return f._wrap(_gcd(f.coeffs, g.coeffs, f.field.modulus))


def xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns (g0, u, v) with u*f + v*g = g0, g0 monic."""
    if f.field != g.field:
        raise FieldMismatch("xgcd of polynomials over different fields")
    if f.is_zero() and g.is_zero():
        raise BothZero("xgcd(0, 0) is undefined")
    d, u, v = _xgcd(f.coeffs, g.coeffs, f.field.modulus)
    return f._wrap(d), f._wrap(u), f._wrap(v)


def pow_mod(base: Poly, k: int, modulus: Poly) -> Poly:
    """base^k reduced modulo a nonzero polynomial."""
    if base.field != modulus.field:
        raise FieldMismatch("pow_mod operands over different fields")
    if modulus.is_zero():
        raise ZeroDivisionError("pow_mod modulus is zero")
    return base._wrap(_pow_mod(base.coeffs, k, modulus.coeffs, base.field.modulus))


def compose_mod(outer: Poly, inner: Poly, modulus: Poly) -> Poly:
    """outer(inner) reduced modulo a nonzero polynomial."""
    if outer.field != inner.field or outer.field != modulus.field:
        raise FieldMismatch("compose_mod operands over different fields")
    if modulus.is_zero():
        raise ZeroDivisionError("compose_mod modulus is zero")
    return outer._wrap(
        _compose_mod(outer.coeffs, inner.coeffs, modulus.coeffs, outer.field.modulus)
    )


def is_separable(f: Poly) -> bool:
    """True iff gcd(f, f') = 1; constants count as separable.

    A nonconstant polynomial with vanishing derivative is a p-th power,
    hence inseparable.
    """
    if f.is_zero():
        raise ZeroPolynomial("separability of the zero polynomial is undefined")
    if f.degree == 0:
        return True
    fp = f.derivative()
    if fp.is_zero():
        return False
    return gcd(f, fp).is_one()


# ---------------------------------------------------------------------------
# Text grammar.

_TERM_RE = re.compile(
    r"^(?:(?P<coeff>[+-]?\d+)\*?)?(?:[Xx](?:\^(?P<exp>\d+))?)?$"
)


def parse_poly(field: PrimeField, text: str) -> Poly:
    """Parse either "1,0,3" (low-to-high coefficients) or "3*X^2+1"."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text")
    if "," in s:
        try:
            coeffs = [int(part) for part in s.split(",")]
        except ValueError as exc:
            raise ParseError(f"bad coefficient list {text!r}") from exc
        return Poly(field, coeffs)
    compact = s.replace(" ", "")
    # Split into signed terms; normalize a leading bare sign.
    pieces = re.split(r"(?=[+-])", compact)
    coeffs: dict[int, int] = {}
    for piece in pieces:
        if piece in ("", "+", "-"):
            if piece:
                raise ParseError(f"dangling sign in {text!r}")
            continue
        sign = 1
        body = piece
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        m = _TERM_RE.match(body)
        if not m or (m.group("coeff") is None and "X" not in body.upper()):
            raise ParseError(f"bad term {piece!r} in {text!r}")
        coeff = int(m.group("coeff")) if m.group("coeff") is not None else 1
        if "X" in body.upper():
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
    top = max(coeffs, default=0)
    dense = [coeffs.get(i, 0) for i in range(top + 1)]
    return Poly(field, dense)


def format_poly(f: Poly) -> str:
    """Symbolic form, descending powers, coefficients in [0, p)."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append("X" if c == 1 else f"{c}*X")
        else:
            parts.append(f"X^{i}" if c == 1 else f"{c}*X^{i}")
    return "+".join(parts)
