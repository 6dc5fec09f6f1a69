"""Polylogarithms and multiple zeta values as numerical shadows of the products."""
import math

from fdsemi.analytic import chen_check, li, li_integral, stuffle_check, zeta

# %% series vs iterated integrals
for w in ["x1", "x0 x1", "x0 x1 x1"]:
    s, q = li(w, 0.5, 2000), li_integral(w, 0.5)
    print(f"{w:10s} series {s.value:.15f}  quad {q.value:.15f}")

# %% Chen: Li_u Li_v = Li of the shuffle
rep = chen_check("x0 x1", "x1")
print(rep)

# %% zeta values carry a truncation bound; the true value is in [value, value + error]
est = zeta("2", 100_000)
print(est, math.pi ** 2 / 6)

# %% stuffle: zeta(2)^2 = 2 zeta(2,2) + zeta(4)
rep = stuffle_check("2", "2")
print(rep.lhs, rep.rhs, math.pi ** 4 / 36)
