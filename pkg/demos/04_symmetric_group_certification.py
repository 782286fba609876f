"""From ramification witnesses to the full symmetric group.

A transitive permutation group of degree n that contains an e-cycle with
n/2 < e < n, gcd(e, n) = 1 is primitive, and a primitive group with a
transposition is all of S_n. The two certificate witnesses supply exactly
that cycle and transposition as inertia elements.
"""

from progressio import (
    PrimeField,
    build_stable,
    certify_sn,
    parse_poly,
    ramification_type,
    specialize,
)
from progressio.poly import Poly

F11 = PrimeField(11)
a = parse_poly(F11, "X+3")
b = parse_poly(F11, "1")
cert = build_stable(a, b, 9, seed=0)
pencil = (cert.a, cert.b, cert.c)

for label, alpha in (("long cycle", cert.alpha1), ("transposition", cert.alpha2)):
    rt = ramification_type(specialize(pencil, alpha))
    print(f"{label} witness at alpha = {alpha}: inertia type {rt.exponents}, "
          f"tame = {all(rt.tame_flags)}")

sn = certify_sn(cert)
print(f"\ncertified: geometric group of the degree-{sn.n} family is S_{sn.n}")
print("clause record:")
print(sn.to_text())

# characteristic 2 allows exactly one wild doubled point as a transposition
F2 = PrimeField(2)
wild = Poly.linear(F2, 1) ** 2 * parse_poly(F2, "X^3+X+1")
rt = ramification_type(wild)
print(f"char 2, shape (X-1)^2 * irreducible cubic: type {rt.exponents}, "
      f"wild exception = {rt.wild_exception}, usable = {rt.is_valid_evidence}")
