"""Tour of the semigroup core: laws, decompositions and units."""
from fdsemi.semigroup import builtin, decompose, is_invertible, transformations, units

# %% builtins are looked up by name
nat = builtin("nat-plus")
print(nat.mul(2, 3))            # 5
print(decompose(nat, 5))        # every ordered splitting a + b = 5

mon = builtin("mon-plus")
t = mon.parse("x1^2*x2")
for p, q in decompose(mon, t):
    print(p, "*", q)

# %% finite decomposition fails for Laurent monomials: x1^n * x1^-n = 1 for every n
laurent = builtin("mon-laurent")
try:
    decompose(laurent, laurent.neutral)
except Exception as exc:
    print(type(exc).__name__, exc)

# %% units of finite monoids
Z = builtin("zmul-12")
print(sorted(units(Z)))          # residues coprime to 12
print(is_invertible(Z, 5))       # 5 * 5 = 25 = 1 mod 12
print(is_invertible(Z, 4))

T3 = transformations(3)
print(len(T3), "maps,", len(units(T3)), "of them bijective")
print(T3.cayley_text().splitlines()[0])
