"""Exception types shared across the package.

Two families matter to callers: ``UsageError`` subclasses mean the caller
handed us something malformed or out of contract, while ``MathError``
subclasses mean the inputs were well-formed but the mathematics said no
(no admissible integer, field too small, a certification clause failed).
The CLI maps the former to exit code 2 and the latter to exit code 1.
"""


class UsageError(ValueError):
    """Malformed or out-of-contract input; the caller's fault."""


class NotPrime(UsageError):
    """Requested modulus is not a prime number."""


class OutOfRange(UsageError):
    """Requested modulus is outside the supported range."""


class FieldMismatch(UsageError):
    """Operands belong to different prime fields."""


class BothZero(UsageError):
    """Both arguments of a gcd-style operation are zero."""


class ZeroPolynomial(UsageError):
    """Operation is undefined for the zero polynomial."""


class ConstantPolynomial(UsageError):
    """Operation is undefined for constant polynomials."""


class PreconditionViolated(UsageError):
    """A documented operation precondition does not hold."""


class ParseError(UsageError):
    """Text input does not match the expected grammar."""


class MathError(Exception):
    """Well-formed inputs for which the mathematics yields no result."""


class NoValidE(MathError):
    """No admissible exponent exists in the required open interval."""


class FieldTooSmall(MathError):
    """The prime field has too few elements for the construction."""


class FieldExhausted(MathError):
    """Every candidate field element was scanned and rejected."""


class DegreeDrop(MathError):
    """Specialization kills the leading coefficient."""


class NonSquarefreeUnramifiedPart(MathError):
    """Factorization shape is outside what ramification evidence allows."""


class TooLarge(MathError):
    """Input exceeds the guard bound of a desk-scale exhaustive routine."""


class RetryBudgetExceeded(MathError):
    """A randomized splitting routine ran out of retries."""


class ClauseFailed(MathError):
    """A named certification clause failed; certification is all-or-nothing."""

    def __init__(self, clause, detail=""):
        self.clause = clause
        self.detail = detail
        message = clause if not detail else f"{clause}: {detail}"
        super().__init__(message)
