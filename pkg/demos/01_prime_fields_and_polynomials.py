"""Tour of the base layer: prime fields and dense polynomials."""

from progressio import PrimeField, gcd, is_separable, parse_poly, xgcd
from progressio.poly import Poly

F7 = PrimeField(7)
print(f"working in F_{F7.modulus} (characteristic {F7.characteristic})")

x = F7(3)
print(f"3 + 5 = {x + 5},  3 * 5 = {x * 5},  3^-1 = {x.inv()},  3^6 = {x**6}")

# two ways to write the same polynomial
f = parse_poly(F7, "2*X^3+X+4")
g = parse_poly(F7, "4,1,0,2")
print(f"\nparsed {f} == {g}: {f == g}")

h = parse_poly(F7, "X+2")
q, r = divmod(f, h)
print(f"divmod({f}, {h}) -> quotient {q}, remainder {r}")
print(f"replay: ({h})*({q}) + {r} = {h * q + r}")

k = parse_poly(F7, "X+3")
d, u, v = xgcd(f, k)
print(f"\nxgcd with {k}: gcd = {d}, Bezout ({u})*f + ({v})*k = {u * f + v * k}")

print(f"\nderivative of {f}: {f.derivative()}")
# f hides a repeated factor: f = 2*(X+2)*(X+6)^2
print(f"{f} separable? {is_separable(f)}")
print(f"X^2+1 separable? {is_separable(parse_poly(F7, 'X^2+1'))}")

print(f"\nevaluation: f(2) = {f(2)}, f(0) = {f(0)}")
print(f"gcd(X^2-1, X-1) = {gcd(parse_poly(F7, 'X^2-1'), parse_poly(F7, 'X-1'))}")

# the zero polynomial has a degree below every integer
z = Poly.zero(F7)
print(f"\ndegree of zero polynomial: {z.degree} (compares below all ints: {z.degree < -10**9})")
