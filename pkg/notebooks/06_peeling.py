"""Peeling finite monoids into group layers, and putting them back together."""
from fdsemi.errors import NonEmptyTerminal
from fdsemi.semigroup import builtin, min_chain, transformations
from fdsemi.structure import peel, rebuild_as_ddl, rebuilt_cayley_text, verify_structure_theorem

for name in ["zmul-12", "min-chain-4", "left-zero-2", "nat-monoid"]:
    print(peel(builtin(name)).describe())

print(verify_structure_theorem(transformations(3)))

# %% an empty terminal means the monoid is the limit of its layers
C = min_chain(4)
system, rep = rebuild_as_ddl(C)
print(rep)
print(rebuilt_cayley_text(C, system))

# %% otherwise there is nothing to project onto
try:
    rebuild_as_ddl(builtin("zmul-4"))
except NonEmptyTerminal as exc:
    print(exc)
