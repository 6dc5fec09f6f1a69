"""The semigroup algebra, its coproduct, and the duality that ties them together."""
from fdsemi.algebra import Polynomial, convolve, convolve_at, coproduct, duality_sides, poly_mul
from fdsemi.semigroup import builtin

nat = builtin("nat-plus")
P = Polynomial.parse("1 + 1/2*2", nat)
Q = Polynomial.parse("3", nat)
R = Polynomial.parse("4 - 5", nat)

# %% products and coproducts, exact rationals throughout
print(poly_mul(nat, P, Q))
print(coproduct(nat, R))

# %% <P.Q|R> = <P(x)Q|Delta R>
print(duality_sides(nat, P, Q, R))

# %% the same on a finite table
Z = builtin("zmul-6")
A = Polynomial.parse("2 + 3", Z)
print(coproduct(Z, Polynomial.parse("0", Z)))
print(duality_sides(Z, A, A, Polynomial.parse("0", Z)))

# %% convolution only needs decompositions, so it works pointwise on infinite supports
ones = lambda m: 1
for m in range(1, 7):
    print(m, convolve_at(nat, ones, ones, m))   # m - 1 splittings
print(convolve(nat, P, P))
