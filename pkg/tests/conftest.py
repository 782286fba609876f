import pytest

from progressio import PrimeField, gcd, is_separable, parse_poly
from progressio.poly import Poly, xgcd


def witness_pencil_quintic(field: PrimeField):
    """A degree-5 pencil over the given field with both ramification witnesses.

    The exponent window n/2 < e < n - m is empty at n = 5 (m is at least 2),
    so no certificate object can package this; the witnesses still exist.
    Solves c = -a/alpha_i (mod p_i) for p_1 = (X-g1)^3, p_2 = (X-g2)^2 by
    CRT and stretches c to degree 5 with a scanned scalar multiple of p1*p2,
    so that a + alpha_i*c = p_i*h_i with separable coprime h_i.
    """
    a = parse_poly(field, "X+1")
    b = parse_poly(field, "1")
    gammas = [g for g in range(field.modulus) if a(g) != 0][:2]
    gamma1, gamma2 = gammas
    p1 = Poly.linear(field, gamma1) ** 3
    p2 = Poly.linear(field, gamma2) ** 2
    alpha1, alpha2 = field(1), field(2)
    r1 = (-a) * alpha1.inv()
    r2 = (-a) * alpha2.inv()
    g, u, v = xgcd(p1, p2)
    assert g.is_one()
    c0 = (r2 * u * p1 + r1 * v * p2) % (p1 * p2)
    for lam in range(1, field.modulus):
        c = c0 + lam * p1 * p2
        h1, rem1 = divmod(a + alpha1 * c, p1)
        h2, rem2 = divmod(a + alpha2 * c, p2)
        assert rem1.is_zero() and rem2.is_zero()
        if not (is_separable(h1) and is_separable(h2)):
            continue
        if not gcd(h1, Poly.linear(field, gamma1) * a).is_one():
            continue
        if not gcd(h2, Poly.linear(field, gamma2) * a).is_one():
            continue
        if not gcd(a, c).is_one():
            continue
        return {
            "a": a, "b": b, "c": c,
            "alpha1": alpha1, "alpha2": alpha2,
            "gamma1": field(gamma1), "gamma2": field(gamma2),
            "e": 3, "h1": h1, "h2": h2,
        }
    raise AssertionError("no admissible stretch scalar in this field")


@pytest.fixture(scope="session")
def quintic_pencil_f101():
    return witness_pencil_quintic(PrimeField(101))
