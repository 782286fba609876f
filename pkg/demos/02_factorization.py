"""Irreducibility testing and complete factorization over F_p."""

from progressio import (
    PrimeField,
    count_irreducibles,
    enumerate_irreducibles,
    factorize,
    is_irreducible,
    naive_factor,
    parse_poly,
)

F5 = PrimeField(5)

f = parse_poly(F5, "X^2+1")
print(f"{f} irreducible over F_5? {is_irreducible(f)}")
print(f"factorization:\n{factorize(f)}")

g = parse_poly(F5, "3*X^6+X^5+4*X^2+2")
result = factorize(g, seed=0)
print(f"\n{g} ->")
print(result)
print(f"multiply-back check: {result.expand() == g}")
print(f"cycle type (factor degrees): {result.degrees()}")

# the naive trial-division oracle agrees
print(f"\ntrial-division oracle agrees: "
      f"{set(naive_factor(g).factors) == set(result.factors)}")

# counting irreducibles: exact formula vs explicit sieve
print("\nmonic irreducibles over F_2 by degree:")
for n in range(1, 9):
    formula = count_irreducibles(2, n)
    sieved = len(enumerate_irreducibles(2, n))
    print(f"  degree {n}: formula {formula}, sieve {sieved}")

print("\nthe two irreducible cubics over F_2:")
for q in enumerate_irreducibles(2, 3):
    print(f"  {q}")
