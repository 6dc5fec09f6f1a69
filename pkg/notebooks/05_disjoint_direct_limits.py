"""Disjoint direct limits: the fig1 system and three broken variants."""
from fdsemi import ddl
from fdsemi.ddl import DDLElement as E

fig1 = ddl.fig1_system()
print(ddl.ddl_mul(fig1, E(1, 3), E(2, 4)))
print(len(ddl.ddl_decompose(fig1, E(0, 4), 8)), "decompositions of (0|4)")

# %% every interval below a label is infinite, yet each element has finitely many factorizations
print(ddl.validate_system(fig1, 10))
print(ddl.fd_criterion_check(fig1, 12))

# %% each defect breaks one condition of the criterion
for make in (ddl.defect_interval_system, ddl.defect_component_system, ddl.defect_fiber_system):
    crit = ddl.fd_criterion_check(make(), 8)
    print(crit.system, crit.verdicts)
    for cond, triples in crit.decompositions.items():
        print("   ", cond, len(triples), "decompositions of", triples[0][2])
