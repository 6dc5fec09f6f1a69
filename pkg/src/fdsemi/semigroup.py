"""Semigroup handles, built-in semigroups and decomposition machinery.

A :class:`Semigroup` bundles a law with the optional extras the rest of the
package needs: a neutral element, a *decomposer* listing every ordered pair
``(a, b)`` with ``a*b == t``, and a graded *ball* enumerating the carrier up
to a bound so that infinite semigroups can be checked by brute force.

Finite semigroups are :class:`FiniteSemigroup` objects backed by a numpy
Cayley table.
"""
import itertools
import re
from pathlib import Path

import numpy as np

from .elements import (Bicomposition, Composition, Monomial, MonomialWord,
                       Word, sort_key)
from .errors import (CapabilityMissing, LemmaViolation, NoNeutral,
                     NonFiniteDecomposition, NotInCarrier, SemigroupError,
                     TableError)
from .report import Report

YES, NO, UNKNOWN = "yes", "no", "unknown"


def _pair_key(pair):
    return (sort_key(pair[0]), sort_key(pair[1]))


class Semigroup:
    """A semigroup given by its law and optional capabilities.

    ``ball(bound)`` must enumerate a finite piece of the carrier and, for the
    graded builtins, every factor of an element of the ball lies in the ball
    again.  ``tail()`` returns the semigroup obtained by removing the units,
    which is how infinite monoids take part in peeling.
    """

    def __init__(self, name, law, *, contains, parse, neutral=None,
                 decomposer=None, finite_decomposition=UNKNOWN, ball=None,
                 units_oracle=None, tail=None, grading=""):
        if finite_decomposition == YES and decomposer is None:
            raise SemigroupError(f"{name}: finite decomposition claimed without a decomposer")
        self.name = name
        self._law = law
        self._contains = contains
        self._parse = parse
        self.neutral = neutral
        self._decomposer = decomposer
        self.finite_decomposition = finite_decomposition
        self._ball = ball
        self.units_oracle = units_oracle
        self.tail = tail
        self.grading = grading

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

    @property
    def is_finite(self):
        return False

    @property
    def has_decomposer(self):
        return self._decomposer is not None

    def __contains__(self, x):
        try:
            return bool(self._contains(x))
        except (TypeError, ValueError):
            return False

    def _require(self, x):
        if x not in self:
            raise NotInCarrier(self.name, x)

    def mul(self, a, b):
        self._require(a)
        self._require(b)
        return self._law(a, b)

    def decompose(self, t):
        if self._decomposer is None:
            raise NonFiniteDecomposition(self.name)
        self._require(t)
        return sorted(set(self._decomposer(t)), key=_pair_key)

    def ball(self, bound):
        if self._ball is None:
            raise CapabilityMissing(f"{self.name} has no graded enumeration")
        return list(self._ball(bound))

    def parse(self, text):
        x = self._parse(text.strip())
        self._require(x)
        return x


class FiniteSemigroup(Semigroup):
    """Semigroup on an explicit element list with Cayley table ``table``.

    ``table[i, j]`` is the index of ``elements[i] * elements[j]``.
    """

    def __init__(self, name, elements, table, *, check=True):
        elements = list(elements)
        if len(set(elements)) != len(elements):
            raise TableError(f"{name}: duplicate element names")
        table = np.asarray(table, dtype=np.int64)
        n = len(elements)
        if table.shape != (n, n):
            raise TableError(f"{name}: table shape {table.shape} does not match {n} elements")
        if n and (table.min() < 0 or table.max() >= n):
            raise TableError(f"{name}: table entries out of range")
        self.elements = elements
        self.table = table
        self.index = {x: i for i, x in enumerate(elements)}
        self._by_name = {str(x): x for x in elements}
        if check:
            bad = self.associativity_witness()
            if bad is not None:
                a, b, c = bad
                raise TableError(f"{name}: not associative at ({a}, {b}, {c}): "
                                 f"({a}*{b})*{c} != {a}*({b}*{c})")
        self._decompositions = None
        super().__init__(
            name, self._table_law, contains=self.index.__contains__,
            parse=self._parse_name, neutral=self.find_neutral(),
            decomposer=self._lookup_decompositions, finite_decomposition=YES,
            ball=lambda bound: self.elements, grading="whole carrier")

    @classmethod
    def from_law(cls, name, elements, law, check=True):
        elements = list(elements)
        idx = {x: i for i, x in enumerate(elements)}
        try:
            table = [[idx[law(a, b)] for b in elements] for a in elements]
        except KeyError as exc:
            raise TableError(f"{name}: law leaves the carrier ({exc.args[0]})") from None
        return cls(name, elements, np.array(table, dtype=np.int64).reshape(len(elements), -1),
                   check=check)

    @property
    def is_finite(self):
        return True

    def __len__(self):
        return len(self.elements)

    def _table_law(self, a, b):
        return self.elements[self.table[self.index[a], self.index[b]]]

    def _parse_name(self, text):
        if text in self._by_name:
            return self._by_name[text]
        raise NotInCarrier(self.name, text)

    def _lookup_decompositions(self, t):
        if self._decompositions is None:
            dec = {x: [] for x in self.elements}
            for i, j in itertools.product(range(len(self)), repeat=2):
                dec[self.elements[self.table[i, j]]].append(
                    (self.elements[i], self.elements[j]))
            self._decompositions = dec
        return self._decompositions[t]

    def associativity_witness(self):
        """First triple ``(a, b, c)`` violating associativity, or None."""
        t = self.table
        if not len(t):
            return None
        left = t[t]          # left[i, j, k] = t[t[i, j], k]
        right = t[:, t]      # right[i, j, k] = t[i, t[j, k]]
        bad = np.argwhere(left != right)
        if len(bad) == 0:
            return None
        i, j, k = bad[0]
        return self.elements[i], self.elements[j], self.elements[k]

    def find_neutral(self):
        n = len(self.elements)
        ar = np.arange(n)
        for e in range(n):
            if np.array_equal(self.table[e], ar) and np.array_equal(self.table[:, e], ar):
                return self.elements[e]
        return None

    def restrict(self, subset, name=None):
        """Sub-semigroup on ``subset`` (kept in the original element order)."""
        keep = set(subset)
        order = [x for x in self.elements if x in keep]
        pos = {x: i for i, x in enumerate(order)}
        idx = [self.index[x] for x in order]
        sub = self.table[np.ix_(idx, idx)] if idx else np.zeros((0, 0), dtype=np.int64)
        try:
            table = np.vectorize(lambda k: pos[self.elements[k]], otypes=[np.int64])(sub) \
                if idx else sub
        except KeyError as exc:
            raise SemigroupError(f"{subset!r} is not closed under the law of {self.name}: "
                                 f"product {exc.args[0]} escapes") from None
        return FiniteSemigroup(name or f"{self.name}|sub", order, table, check=False)

    def cayley_text(self):
        """Serialize in the Cayley table file format."""
        names = [str(x) for x in self.elements]
        lines = [" ".join(names)]
        lines += [" ".join(names[k] for k in row) for row in self.table]
        return "\n".join(lines) + "\n"


# operations -----------------------------------------------------------------

def mul(S, a, b):
    return S.mul(a, b)


def decompose(S, t):
    """All ordered pairs ``(a, b)`` with ``a*b == t``, canonically sorted."""
    return S.decompose(t)


def verify_decomposer(S, bound):
    """Cross-check ``decompose`` against brute-force products over ``S.ball(bound)``.

    Raises NonFiniteDecomposition when S has no decomposer at all.
    """
    if not S.has_decomposer:
        raise NonFiniteDecomposition(S.name)
    report = Report(f"decomposer {S.name} (bound {bound})")
    ball = S.ball(bound)
    in_ball = set(ball)
    found = {t: set() for t in ball}
    for a, b in itertools.product(ball, repeat=2):
        t = S.mul(a, b)
        if t in found:
            found[t].add((a, b))
    for t in ball:
        pairs = S.decompose(t)
        report.cases += 1
        if len(set(pairs)) != len(pairs):
            report.fail(f"{t}: duplicate pairs")
        for a, b in pairs:
            if S.mul(a, b) != t:
                report.fail(f"{t}: spurious pair ({a}, {b})")
        listed = {p for p in pairs if p[0] in in_ball and p[1] in in_ball}
        for a, b in sorted(found[t] - listed, key=_pair_key):
            report.fail(f"{t}: missing pair ({a}, {b})")
        if S.is_finite or S.grading:
            # graded balls are closed under taking factors
            for a, b in sorted(set(pairs) - found[t], key=_pair_key):
                if a in in_ball and b in in_ball:
                    report.fail(f"{t}: pair ({a}, {b}) not reproduced by brute force")
    return report


def is_invertible(S, u):
    """Decide invertibility of ``u`` by the cyclicity argument for monoids.

    Looks for a one-sided inverse among the decompositions of the neutral;
    if there is one, the powers of ``u`` must return to the neutral after at
    most ``len(decompose(neutral))`` steps.  Returns ``(True, inverse)`` or
    ``(False, None)``.
    """
    if S.neutral is None:
        raise NoNeutral(f"{S.name} has no neutral element")
    if S.finite_decomposition != YES:
        raise NonFiniteDecomposition(S.name)
    S._require(u)
    e = S.neutral
    pairs = S.decompose(e)
    if not any(a == u or b == u for a, b in pairs):
        return False, None
    powers = [e, u]
    while powers[-1] != e:
        if len(powers) > len(pairs) + 1:
            raise LemmaViolation(f"{S.name}: {u} is one-sided invertible but not cyclic")
        powers.append(S.mul(powers[-1], u))
    # powers[p] == e with p = len(powers) - 1, so u^(p-1) is the inverse
    return True, powers[-2]


def units(S):
    """The group of units, as a frozenset."""
    if S.units_oracle is not None:
        return frozenset(S.units_oracle())
    if not S.is_finite:
        raise CapabilityMissing(f"{S.name}: units need a finite carrier or a units oracle")
    if S.neutral is None:
        return frozenset()
    return frozenset(u for u in S.elements if is_invertible(S, u)[0])


# builtins -------------------------------------------------------------------

def _is_nat(x, low):
    return isinstance(x, (int, np.integer)) and not isinstance(x, bool) and x >= low


def nat_plus():
    return Semigroup(
        "nat-plus", lambda a, b: a + b, contains=lambda x: _is_nat(x, 1), parse=int,
        decomposer=lambda t: [(a, t - a) for a in range(1, t)],
        finite_decomposition=YES, ball=lambda n: range(1, n + 1),
        grading="value: ball(n) = {1..n}")


def nat_monoid():
    return Semigroup(
        "nat-monoid", lambda a, b: a + b, contains=lambda x: _is_nat(x, 0), parse=int,
        neutral=0, decomposer=lambda t: [(a, t - a) for a in range(t + 1)],
        finite_decomposition=YES, ball=lambda n: range(0, n + 1),
        units_oracle=lambda: {0}, tail=nat_plus,
        grading="value: ball(n) = {0..n}")


def int_ray(k):
    """Additive semigroup of the integers >= k (k >= 0)."""
    return Semigroup(
        f"ray-{k}", lambda a, b: a + b, contains=lambda x: _is_nat(x, k), parse=int,
        neutral=0 if k == 0 else None,
        decomposer=lambda t: [(a, t - a) for a in range(k, t - k + 1)],
        finite_decomposition=YES, ball=lambda n: range(k, n + 1),
        grading=f"value: ball(n) = {{{k}..n}}")


BALL_VARIABLES = ("x1", "x2")


def _splits(exponents, allow_empty):
    items = list(exponents.items())
    ranges = [range(e + 1) for _, e in items]
    for choice in itertools.product(*ranges):
        left = Monomial([(v, c) for (v, _), c in zip(items, choice)])
        right = Monomial([(v, e - c) for (v, e), c in zip(items, choice)])
        if allow_empty or (left and right):
            yield left, right


def _monomials_up_to(bound, low):
    for exps in itertools.product(range(bound + 1), repeat=len(BALL_VARIABLES)):
        if low <= sum(exps) <= bound:
            yield Monomial(zip(BALL_VARIABLES, exps))


def _is_monomial(x, nonneg=True, nonempty=False):
    if not isinstance(x, Monomial):
        return False
    if nonneg and any(e < 0 for _, e in x):
        return False
    return bool(x) or not nonempty


def mon_plus():
    return Semigroup(
        "mon-plus", lambda a, b: a * b,
        contains=lambda x: _is_monomial(x, nonempty=True), parse=Monomial.parse,
        decomposer=lambda t: _splits(t.exponents(), allow_empty=False),
        finite_decomposition=YES, ball=lambda n: _monomials_up_to(n, 1),
        grading="total degree in x1, x2: ball(n) = monomials of degree 1..n")


def mon():
    return Semigroup(
        "mon", lambda a, b: a * b, contains=_is_monomial, parse=Monomial.parse,
        neutral=Monomial(), decomposer=lambda t: _splits(t.exponents(), allow_empty=True),
        finite_decomposition=YES, ball=lambda n: _monomials_up_to(n, 0),
        units_oracle=lambda: {Monomial()}, tail=mon_plus,
        grading="total degree in x1, x2: ball(n) = monomials of degree 0..n")


def _laurent_ball(bound):
    r = range(-bound, bound + 1)
    for exps in itertools.product(r, repeat=len(BALL_VARIABLES)):
        if sum(abs(e) for e in exps) <= bound:
            yield Monomial(zip(BALL_VARIABLES, exps))


def mon_laurent():
    # no decomposer: x^a = x^(a+k) * x^(-k) for every k
    return Semigroup(
        "mon-laurent", lambda a, b: a * b,
        contains=lambda x: _is_monomial(x, nonneg=False), parse=Monomial.parse,
        neutral=Monomial(), finite_decomposition=NO, ball=_laurent_ball,
        grading="")


def _deconcatenations(w, allow_empty=True):
    lo, hi = (0, len(w)) if allow_empty else (1, len(w) - 1)
    return [(type(w)(w[:i]), type(w)(w[i:])) for i in range(lo, hi + 1)]


def _free_monoid(name, cls, letter_ok, letters_up_to, grading):
    def contains(w):
        return isinstance(w, cls) and all(letter_ok(a) for a in w)

    def ball(bound):
        letters = letters_up_to(bound)
        out = [cls()]
        frontier = [(cls(), 0)]
        while frontier:
            nxt = []
            for w, weight in frontier:
                for a, cost in letters:
                    if weight + cost <= bound:
                        nxt.append((w + cls([a]), weight + cost))
            out.extend(w for w, _ in nxt)
            frontier = nxt
        return out

    return Semigroup(name, lambda a, b: a + b, contains=contains, parse=cls.parse,
                     neutral=cls(), decomposer=_deconcatenations,
                     finite_decomposition=YES, ball=ball,
                     units_oracle=lambda: {cls()}, grading=grading)


def words(alphabet=("x0", "x1")):
    return _free_monoid(
        "words", Word, lambda a: isinstance(a, str) and bool(a),
        lambda n: [(a, 1) for a in alphabet],
        grading=f"length over {{{', '.join(alphabet)}}}")


def compositions():
    return _free_monoid(
        "compositions", Composition, lambda a: _is_nat(a, 1),
        lambda n: [(k, k) for k in range(1, n + 1)], grading="weight")


def bicompositions():
    def ok(p):
        return (len(p) == 2 and all(_is_nat(c, 0) for c in p) and p != (0, 0))

    return _free_monoid(
        "bicompositions", Bicomposition, ok,
        lambda n: [((a, b), a + b) for a in range(n + 1) for b in range(n + 1)
                   if 0 < a + b <= n],
        grading="total weight")


def monomial_words():
    return _free_monoid(
        "monomial-words", MonomialWord, lambda m: _is_monomial(m, nonempty=True),
        lambda n: [(m, m.degree()) for m in _monomials_up_to(n, 1)],
        grading="total degree in x1, x2")


def zmul(n):
    return FiniteSemigroup.from_law(f"zmul-{n}", range(n), lambda a, b: a * b % n)


def zadd(n):
    return FiniteSemigroup.from_law(f"zadd-{n}", range(n), lambda a, b: (a + b) % n)


def min_chain(n):
    return FiniteSemigroup.from_law(f"min-chain-{n}", range(n), min)


def left_zero(n):
    return FiniteSemigroup.from_law(f"left-zero-{n}", range(n), lambda a, b: a)


def transformations(n):
    """Full transformation monoid on n points.

    A map f is written as its image string, e.g. ``"120"`` sends 0->1, 1->2,
    2->0.  The product ``f*g`` applies f first, then g.
    """
    if not 1 <= n <= 4:
        raise SemigroupError("transformation monoids are capped at n <= 4")
    maps = ["".join(map(str, img)) for img in itertools.product(range(n), repeat=n)]
    return FiniteSemigroup.from_law(
        f"t{n}", maps, lambda f, g: "".join(g[int(c)] for c in f))


def direct_product(S, T, name=None):
    """Product of two finite semigroups; elements are named ``a:b``."""
    pairs = [(a, b) for a in S.elements for b in T.elements]
    names = [f"{a}:{b}" for a, b in pairs]
    n = len(T.elements)
    table = [[S.table[i // n, j // n] * n + T.table[i % n, j % n]
              for j in range(len(pairs))] for i in range(len(pairs))]
    return FiniteSemigroup(name or f"{S.name}x{T.name}", names, table, check=False)


def load_table(path, name=None):
    """Read a Cayley table file.

    Format: ``#`` starts a comment; the first line lists the N element names;
    each of the next N lines gives row i, column j being ``e_i * e_j``.
    """
    path = Path(path)
    try:
        raw = path.read_text()
    except OSError as exc:
        raise TableError(f"cannot read table {path}: {exc}") from None
    return parse_table(raw, name or f"table:{path}")


def parse_table(text, name="table"):
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise TableError(f"{name}: empty table")
    names = rows[0]
    if len(set(names)) != len(names):
        raise TableError(f"{name}: duplicate element names")
    body = rows[1:]
    if len(body) != len(names):
        raise TableError(f"{name}: expected {len(names)} rows, found {len(body)}")
    pos = {x: i for i, x in enumerate(names)}
    table = []
    for i, row in enumerate(body):
        if len(row) != len(names):
            raise TableError(f"{name}: row {i + 1} has {len(row)} entries, "
                             f"expected {len(names)}")
        try:
            table.append([pos[x] for x in row])
        except KeyError as exc:
            raise TableError(f"{name}: unknown element {exc.args[0]!r} in row {i + 1}") from None
    return FiniteSemigroup(name, names, table)


_FACTORIES = {
    "nat-plus": nat_plus,
    "nat-monoid": nat_monoid,
    "mon-plus": mon_plus,
    "mon": mon,
    "mon-laurent": mon_laurent,
    "words": words,
    "compositions": compositions,
    "bicompositions": bicompositions,
    "monomial-words": monomial_words,
}

_PARAMETRIC = [
    (re.compile(r"zmul-(\d+)$"), zmul),
    (re.compile(r"zadd-(\d+)$"), zadd),
    (re.compile(r"min-chain-(\d+)$"), min_chain),
    (re.compile(r"left-zero-(\d+)$"), left_zero),
    (re.compile(r"t(\d+)$"), transformations),
]


def builtin(name):
    """Look up a semigroup by registry name, or load ``table:<path>``."""
    if name.startswith("table:"):
        return load_table(name[len("table:"):], name=name)
    if name in _FACTORIES:
        return _FACTORIES[name]()
    for pattern, factory in _PARAMETRIC:
        m = pattern.match(name)
        if m:
            n = int(m.group(1))
            if n < 1:
                raise SemigroupError(f"{name}: size must be positive")
            return factory(n)
    raise SemigroupError(f"unknown semigroup {name!r}; known: {', '.join(registry())}")


def registry():
    return sorted(_FACTORIES) + ["zmul-<n>", "zadd-<n>", "min-chain-<n>",
                                 "left-zero-<n>", "t<n>", "table:<path>"]
