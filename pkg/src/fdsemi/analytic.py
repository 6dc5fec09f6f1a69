"""Floating-point polylogarithms and multiple zeta values.

Words over {x0, x1} ending in x1 correspond to compositions via
``x0^(s1-1) x1 ... x0^(sk-1) x1 <-> (s1, ..., sk)``, and

    Li_s(z) = sum_{n1 > ... > nk >= 1} z^n1 / (n1^s1 ... nk^sk),
    zeta(s) = Li_s(1)   (s1 >= 2).

Every evaluator returns an :class:`Estimate` carrying a rigorous bound on
the truncation error.  Truncated sums have positive terms, so the true value
lies in ``[value, value + error]``.
"""
import math
from typing import NamedTuple

import numpy as np
from scipy import integrate

from .elements import Composition, Word
from .errors import DivergentError
from .quasi_shuffle import shuffle, stuffle
from .report import Report


class Estimate(NamedTuple):
    value: float
    error: float


def word_to_composition(w):
    w = w if isinstance(w, Word) else Word.parse(w) if isinstance(w, str) else Word(w)
    if not w or w[-1] != "x1":
        raise DivergentError(f"word {w} does not end in x1")
    parts, run = [], 0
    for a in w:
        if a == "x0":
            run += 1
        elif a == "x1":
            parts.append(run + 1)
            run = 0
        else:
            raise ValueError(f"letter {a!r} is not x0 or x1")
    return Composition(parts)


def composition_to_word(s):
    s = s if isinstance(s, Composition) else Composition.parse(s) if isinstance(s, str) \
        else Composition(s)
    if not s or any(p < 1 for p in s):
        raise ValueError(f"{s} is not a non-empty composition")
    letters = []
    for p in s:
        letters += ["x0"] * (p - 1) + ["x1"]
    return Word(letters)


def _nested_sum(s, N, z):
    """sum_{N >= n1 > ... > nk >= 1} z^n1 / prod n_i^s_i, by cumulative sums."""
    n = np.arange(1, N + 1, dtype=float)
    inner = np.ones(N)  # inner[n-1] = sum over n2 < n of the deeper levels
    for p in reversed(s[1:]):
        level = inner / n ** p
        inner = np.concatenate(([0.0], np.cumsum(level)[:-1]))
    top = inner / n ** s[0]
    if z != 1.0:
        top = top * np.power(z, n)
    return float(np.sum(top))


def _li_tail_bound(s, N, z):
    # inner sums are at most (1 + ln n)^(k-1); consecutive term ratio after N
    # is at most z * (1 + 1/N)^(k-1)
    k = len(s)
    ratio = z * (1 + 1 / N) ** (k - 1)
    if ratio >= 1:
        return math.inf
    first = z ** (N + 1) * (1 + math.log(N + 1)) ** (k - 1) / (N + 1) ** s[0]
    return first / (1 - ratio)


def li(w, z, N):
    """Li_w(z) by the truncated nested series, for 0 < z < 1."""
    if not 0 < z < 1:
        raise ValueError(f"z = {z} outside (0, 1)")
    w = w if isinstance(w, Word) else Word.parse(w) if isinstance(w, str) else Word(w)
    if not w:
        return Estimate(1.0, 0.0)
    s = word_to_composition(w)
    if N < len(s):
        raise ValueError(f"truncation N = {N} below depth {len(s)}")
    return Estimate(_nested_sum(s, N, z), _li_tail_bound(s, N, z))


def li_log_power(n, z):
    """Li of x0^n: ln(z)^n / n!."""
    if not 0 < z < 1:
        raise ValueError(f"z = {z} outside (0, 1)")
    return math.log(z) ** n / math.factorial(n)


def _upper_gamma_int(m, x):
    # Gamma(m + 1, x) for integer m >= 0
    return math.factorial(m) * math.exp(-x) * sum(x ** j / math.factorial(j)
                                                  for j in range(m + 1))


def _zeta_tail_bound(s, N):
    # terms f(n) = (1 + ln n)^m / n^s1 with m = k - 1 bound the tail; f decreases
    # once 1 + ln n > m / s1, and past that point the sum is below the integral
    m, a = len(s) - 1, s[0]
    start = max(N, math.ceil(math.exp(max(m / a - 1, 0))))
    head = sum((1 + math.log(n)) ** m / n ** a for n in range(N + 1, start + 1))
    lam = a - 1
    integral = math.exp(lam) * _upper_gamma_int(m, lam * (1 + math.log(start))) / lam ** (m + 1)
    return head + integral


def zeta(s, N):
    """Multiple zeta value by the truncated nested sum (first entry >= 2)."""
    s = s if isinstance(s, Composition) else Composition.parse(s) if isinstance(s, str) \
        else Composition(s)
    if not s or any(p < 1 for p in s):
        raise ValueError(f"{s} is not a non-empty composition")
    if s[0] < 2:
        raise DivergentError(f"zeta{s} diverges: first entry must be >= 2")
    return Estimate(_nested_sum(s, N, 1.0), _zeta_tail_bound(s, N))


def _product_error(x, y):
    # both truncations undershoot, so the product error is (x+ex)(y+ey) - xy
    return x.error * y.value + y.error * x.value + x.error * y.error


def chen_check(u, v, z=0.5, N=2000, tol=1e-8):
    """Compare Li_u(z) Li_v(z) with the sum over the shuffle of u and v."""
    u = u if isinstance(u, Word) else Word.parse(u)
    v = v if isinstance(v, Word) else Word.parse(v)
    report = Report(f"chen {u} | {v} at z={z}, N={N}")
    lu, lv = li(u, z, N), li(v, z, N)
    lhs = lu.value * lv.value
    rhs, budget = 0.0, _product_error(lu, lv)
    for w, c in shuffle(u, v).items():
        if w and w[-1] != "x1":
            raise AssertionError(f"shuffle term {w} does not end in x1")
        lw = li(w, z, N)
        rhs += float(c) * lw.value
        budget += float(c) * lw.error
    diff = abs(lhs - rhs)
    report.check(diff <= tol + budget,
                 f"|{lhs!r} - {rhs!r}| = {diff:.3e} > {tol:.1e} + {budget:.3e}")
    report.notes.append(f"lhs={lhs:.12g} rhs={rhs:.12g} diff={diff:.3e} budget={budget:.3e}")
    report.lhs, report.rhs, report.budget = lhs, rhs, budget
    return report


def stuffle_check(s, t, N=10_000, tol=1e-3):
    """Compare zeta(s) zeta(t) with the sum over the stuffle of s and t."""
    s = s if isinstance(s, Composition) else Composition.parse(s)
    t = t if isinstance(t, Composition) else Composition.parse(t)
    report = Report(f"stuffle zeta{s} zeta{t}, N={N}")
    zs, zt = zeta(s, N), zeta(t, N)
    lhs = zs.value * zt.value
    rhs, budget = 0.0, _product_error(zs, zt)
    for w, c in stuffle(s, t).items():
        if w[0] < 2:
            raise AssertionError(f"stuffle term {w} is divergent")
        zw = zeta(w, N)
        rhs += float(c) * zw.value
        budget += float(c) * zw.error
    diff = abs(lhs - rhs)
    report.check(diff <= tol + budget,
                 f"|{lhs!r} - {rhs!r}| = {diff:.3e} > {tol:.1e} + {budget:.3e}")
    report.notes.append(f"lhs={lhs:.12g} rhs={rhs:.12g} diff={diff:.3e} budget={budget:.3e}")
    report.lhs, report.rhs, report.budget = lhs, rhs, budget
    return report


def li_integral(w, z):
    """Li_w(z) from the iterated-integral recursion by nested adaptive quadrature.

    Meant as an independent cross-check for short words (length <= 2).
    Returns an Estimate whose error is the accumulated quadrature estimate.
    """
    w = w if isinstance(w, Word) else Word.parse(w)
    if not w:
        return Estimate(1.0, 0.0)
    if all(a == "x0" for a in w):
        return Estimate(li_log_power(len(w), z), 0.0)
    head, rest = w[0], Word(w[1:])
    kernel = (lambda t: 1 / (1 - t)) if head == "x1" else (lambda t: 1 / t)

    def integrand(t):
        return kernel(t) * li_integral(rest, t).value

    value, err = integrate.quad(integrand, 0.0, z, epsabs=1e-13, epsrel=1e-12, limit=200)
    return Estimate(value, err)
