"""Concrete element types and their canonical text form.

Naturals and finite-table elements are plain ``int``/``str`` values.  The
sequence-like elements below are tuple subclasses, so they hash, compare and
slice like tuples while printing in canonical form:

    Monomial       x1^2*x3         (empty monomial prints as ``1``)
    Word           x0 x1 x1        (empty word prints as ``1``)
    Composition    (2,3)
    Bicomposition  (2/1,3/0)
    MonomialWord   [x1^2][x1]      (empty word prints as ``1``)
"""
import re
from fractions import Fraction

_VAR = re.compile(r"^([A-Za-z_]+)(\d*)$")
_FACTOR = re.compile(r"^([A-Za-z_]+\d*)(?:\^(-?\d+))?$")


def var_key(name):
    """Sort key putting x2 before x10."""
    m = _VAR.match(name)
    if m is None:
        return (name, -1)
    return (m.group(1), int(m.group(2)) if m.group(2) else -1)


def sort_key(x):
    """Canonical ordering: lexicographic on the printed form."""
    return str(x)


class Monomial(tuple):
    """A commutative monomial stored as sorted ``(variable, exponent)`` pairs.

    Zero exponents are dropped, so ``Monomial()`` is the empty monomial 1.
    Exponents may be negative (Laurent monomials).
    """

    def __new__(cls, exponents=()):
        if isinstance(exponents, dict):
            exponents = exponents.items()
        acc = {}
        for v, e in exponents:
            acc[v] = acc.get(v, 0) + int(e)
        items = sorted(((v, e) for v, e in acc.items() if e != 0),
                       key=lambda p: var_key(p[0]))
        return super().__new__(cls, items)

    @classmethod
    def var(cls, name, exp=1):
        return cls([(name, exp)])

    def exponents(self):
        return dict(self)

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(list(self) + list(other))

    def degree(self):
        return sum(e for _, e in self)

    def is_empty(self):
        return len(self) == 0

    def __str__(self):
        if not self:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self)

    def __repr__(self):
        return f"Monomial({str(self)!r})"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in ("", "1"):
            return cls()
        pairs = []
        for factor in text.split("*"):
            m = _FACTOR.match(factor.strip())
            if m is None:
                raise ValueError(f"bad monomial factor {factor!r} in {text!r}")
            pairs.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
        return cls(pairs)


class Word(tuple):
    """A word over an alphabet of letter names."""

    def __new__(cls, letters=()):
        return super().__new__(cls, letters)

    def __add__(self, other):
        return type(self)(tuple(self) + tuple(other))

    def __str__(self):
        return " ".join(str(a) for a in self) if self else "1"

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in ("", "1"):
            return cls()
        return cls(text.split())


class Composition(Word):
    """Finite sequence of positive integers, printed ``(2,3)``."""

    def __new__(cls, parts=()):
        return super().__new__(cls, (int(p) for p in parts))

    def weight(self):
        return sum(self)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self) + ")"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        text = text.strip()
        if not text:
            return cls()
        return cls(int(p) for p in text.split(","))


class Bicomposition(Word):
    """Finite sequence of integer pairs, printed ``(2/1,3/0)``."""

    def __new__(cls, pairs=()):
        return super().__new__(cls, (tuple(int(c) for c in p) for p in pairs))

    def __str__(self):
        return "(" + ",".join(f"{a}/{b}" for a, b in self) + ")"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        text = text.strip()
        if not text:
            return cls()
        pairs = []
        for item in text.split(","):
            top, _, bottom = item.partition("/")
            if not _:
                raise ValueError(f"bicomposition entry {item!r} is not of the form a/b")
            pairs.append((int(top), int(bottom)))
        return cls(pairs)


class MonomialWord(Word):
    """Word whose letters are monomials, printed ``[x1^2][x1]``."""

    def __new__(cls, letters=()):
        return super().__new__(
            cls, (m if isinstance(m, Monomial) else Monomial.parse(m) for m in letters))

    def degree(self):
        total = Monomial()
        for m in self:
            total = total * m
        return total

    def __str__(self):
        return "".join(f"[{m}]" for m in self) if self else "1"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in ("", "1"):
            return cls()
        if not re.fullmatch(r"(\[[^\[\]]*\])+", text):
            raise ValueError(f"bad word of monomials {text!r}")
        return cls(Monomial.parse(m) for m in re.findall(r"\[([^\[\]]*)\]", text))


def format_fraction(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
