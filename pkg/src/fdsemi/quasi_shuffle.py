"""Shuffle-type products on words, driven by an optional letter semigroup.

All four products share one recursion::

    1 * w = w * 1 = w
    au * bv = a(u * bv) + b(au * v) [+ (a.b)(u * v)]

The bracketed merge term is present exactly when the letters carry a law.
"""
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .algebra import Polynomial
from .elements import Bicomposition, Composition, Monomial, MonomialWord, Word
from .errors import LetterDomainError


def _positive_int(a):
    return isinstance(a, int) and not isinstance(a, bool) and a >= 1


def _bipair(a):
    return (isinstance(a, tuple) and len(a) == 2
            and all(isinstance(c, int) and c >= 0 for c in a) and a != (0, 0))


def _nonempty_monomial(m):
    return isinstance(m, Monomial) and bool(m) and all(e > 0 for _, e in m)


@dataclass(frozen=True)
class LetterAlgebra:
    """Letter domain of a quasi-shuffle product and the law merging letters.

    ``letter_mul=None`` gives the plain shuffle (letters form the null
    semigroup, so merges never contribute).
    """

    name: str
    word_type: type
    letter_ok: Callable
    letter_mul: Optional[Callable] = None
    domain: str = "words"
    letter_desc: str = "letter"

    @property
    def mode(self):
        return "none" if self.letter_mul is None else "semigroup"

    def coerce(self, w):
        if isinstance(w, str):
            w = self.word_type.parse(w)
        elif not isinstance(w, self.word_type):
            w = self.word_type(w)
        for a in w:
            if not self.letter_ok(a):
                raise LetterDomainError(
                    f"{self.name}: {a!s} is not a valid {self.letter_desc}")
        return w


SHUFFLE = LetterAlgebra("shuffle", Word, lambda a: isinstance(a, str) and bool(a),
                        None, "words", "letter name")
STUFFLE = LetterAlgebra("stuffle", Composition, _positive_int,
                        lambda a, b: a + b, "compositions", "positive integer")
DIAMOND = LetterAlgebra("diamond", Bicomposition, _bipair,
                        lambda a, b: (a[0] + b[0], a[1] + b[1]), "bicompositions",
                        "pair of non-negative integers other than 0/0")
LDIAG = LetterAlgebra("ldiag", MonomialWord, _nonempty_monomial,
                      lambda a, b: a * b, "monomial-words", "non-empty monomial")

PRODUCTS = {s.name: s for s in (SHUFFLE, STUFFLE, DIAMOND, LDIAG)}


def _qs_counts(u, v, letter_mul):
    u, v = tuple(u), tuple(v)

    @lru_cache(maxsize=None)
    def rec(i, j):
        if i == len(u):
            return {v[j:]: 1}
        if j == len(v):
            return {u[i:]: 1}
        a, b = u[i], v[j]
        out = Counter()
        for w, c in rec(i + 1, j).items():
            out[(a,) + w] += c
        for w, c in rec(i, j + 1).items():
            out[(b,) + w] += c
        if letter_mul is not None:
            ab = letter_mul(a, b)
            for w, c in rec(i + 1, j + 1).items():
                out[(ab,) + w] += c
        return out

    return rec(0, 0)


def quasi_shuffle(u, v, alg):
    """Product of two words under ``alg``, as a polynomial with integer coefficients."""
    u, v = alg.coerce(u), alg.coerce(v)
    counts = _qs_counts(u, v, alg.letter_mul)
    return Polynomial({alg.word_type(w): c for w, c in counts.items()}, alg.domain)


def quasi_shuffle_poly(P, Q, alg):
    """Bilinear extension of :func:`quasi_shuffle` to polynomials over words."""
    acc = Counter()
    for u, cu in P.items():
        for v, cv in Q.items():
            for w, c in quasi_shuffle(u, v, alg).items():
                acc[w] += cu * cv * c
    return Polynomial(dict(acc), alg.domain)


def shuffle(u, v):
    return quasi_shuffle(u, v, SHUFFLE)


def stuffle(s, t):
    return quasi_shuffle(s, t, STUFFLE)


def diamond(a, b):
    return quasi_shuffle(a, b, DIAMOND)


def ldiag_up(w1, w2):
    return quasi_shuffle(w1, w2, LDIAG)
