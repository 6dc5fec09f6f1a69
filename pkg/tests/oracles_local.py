"""Small oracles used only by the tests, written without the library's code paths."""
import itertools
from collections import Counter


def table_units(elements, mul, e):
    return {u for u in elements if any(mul(u, v) == e == mul(v, u) for v in elements)}


def nat_splittings(t):
    return [(a, t - a) for a in range(1, t)]


def brute_coproduct(elements, mul, r):
    return Counter((x, y) for x, y in itertools.product(elements, repeat=2) if mul(x, y) == r)
