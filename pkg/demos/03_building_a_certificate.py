"""Build a replayable certificate for a pencil a + b*c*Y of degree n.

The certificate pins two specializations with prescribed factorization
shapes: a long ramified point of order e and a doubled point. Both are
plain polynomial identities over F_p, so anyone can replay them.
"""

import dataclasses

from progressio import (
    PrimeField,
    build_stable,
    certificate_to_text,
    certificate_violations,
    parse_poly,
    verify_certificate,
)
from progressio.poly import Poly

F13 = PrimeField(13)
a = parse_poly(F13, "X^2+1")
b = parse_poly(F13, "X")
n = 12

cert = build_stable(a, b, n, seed=0)
print(f"pencil: ({a}) + ({b})*c*Y,  target degree {n}")
print(f"chosen exponent e = {cert.e} in ({n}/2, {n} - {cert.m}), "
      f"gcd({cert.e}, {n}*13) = 1")
print(f"multiplier c = {cert.c}")

w1 = a + cert.alpha1 * b * cert.c
lead1 = Poly.linear(F13, cert.gamma1) ** cert.e
print(f"\nwitness 1 at alpha = {cert.alpha1}:")
print(f"  a + {cert.alpha1}*b*c = (X-{cert.gamma1})^{cert.e} * ({cert.h1})")
print(f"  identity holds: {w1 == lead1 * cert.h1}")

w2 = a + cert.alpha2 * b * cert.c
lead2 = Poly.linear(F13, cert.gamma2) ** 2
print(f"witness 2 at alpha = {cert.alpha2}:")
print(f"  a + {cert.alpha2}*b*c = (X-{cert.gamma2})^2 * ({cert.h2})")
print(f"  identity holds: {w2 == lead2 * cert.h2}")

print(f"\nfull verification: {verify_certificate(cert)}")

tampered = dataclasses.replace(cert, e=cert.e + 1)
print(f"tampering e -> {cert.e + 1} violates: {certificate_violations(tampered)}")

print("\nserialized certificate (replayable from this text alone):")
print(certificate_to_text(cert))
