"""The semigroup algebra k[M] over the rationals and its dual structures."""
import re
from fractions import Fraction

from .elements import format_fraction, sort_key
from .errors import MixedDomains, NonFiniteDecomposition, SemigroupError

_COEFF = re.compile(r"^(\d+(?:/\d+)?)\*(.+)$")
_SPLIT = re.compile(r"\s+([+-])\s+")


def _clean(terms):
    return {k: c for k, c in terms.items() if c != 0}


class Polynomial:
    """Finite rational combination of elements of one semigroup.

    ``domain`` names the semigroup (its registry name); operands with
    different domains refuse to combine.
    """

    __slots__ = ("_terms", "domain")

    def __init__(self, terms=None, domain=None):
        acc = {}
        for x, c in (terms or {}).items():
            acc[x] = acc.get(x, 0) + Fraction(c)
        self._terms = _clean(acc)
        self.domain = domain

    @classmethod
    def monomial(cls, x, domain=None, coeff=1):
        return cls({x: coeff}, domain)

    @classmethod
    def from_pairs(cls, pairs, domain=None):
        acc = {}
        for x, c in pairs:
            acc[x] = acc.get(x, 0) + Fraction(c)
        return cls(acc, domain)

    def coeff(self, x):
        return self._terms.get(x, Fraction(0))

    __getitem__ = coeff

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    def support(self):
        return [x for x, _ in self.items()]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _same(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.domain and other.domain and self.domain != other.domain:
            raise MixedDomains(f"cannot combine polynomials over {self.domain} "
                               f"and {other.domain}")
        return self.domain or other.domain

    def __add__(self, other):
        domain = self._same(other)
        if domain is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for x, c in other._terms.items():
            acc[x] = acc.get(x, 0) + c
        return Polynomial(acc, domain)

    def __neg__(self):
        return Polynomial({x: -c for x, c in self._terms.items()}, self.domain)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        if isinstance(scalar, Polynomial):
            return NotImplemented
        s = Fraction(scalar)
        return Polynomial({x: s * c for x, c in self._terms.items()}, self.domain)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        return _format_terms(self.items(), str)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, domain={self.domain!r})"

    def to_dict(self):
        return {"domain": self.domain,
                "terms": [{"element": str(x), "coeff": format_fraction(c)}
                          for x, c in self.items()]}

    @classmethod
    def parse(cls, text, S):
        """Parse ``3/2*<elem> + <elem> - 2*<elem>`` with elements read by ``S``.

        A bare ``0`` is the zero polynomial unless ``S`` has an element spelled
        ``0``; ``0*<elem>`` is zero everywhere.
        """
        text = text.strip()
        if text == "0" and not _names_element(S, text):
            return cls({}, S.name)
        sign = 1
        if text.startswith("-"):
            sign, text = -1, text[1:].lstrip()
        pieces = _SPLIT.split(text)
        signs = [sign] + [1 if s == "+" else -1 for s in pieces[1::2]]
        acc = {}
        for sgn, chunk in zip(signs, pieces[0::2]):
            m = _COEFF.match(chunk.strip())
            coeff, elem = (Fraction(m.group(1)), m.group(2)) if m else (Fraction(1), chunk)
            x = S.parse(elem)
            acc[x] = acc.get(x, 0) + sgn * coeff
        return cls(acc, S.name)


def _names_element(S, text):
    try:
        return S.parse(text) in S
    except (ValueError, SemigroupError):
        return False


def _format_terms(items, fmt):
    if not items:
        return "0"
    out = []
    for i, (x, c) in enumerate(items):
        mag = abs(c)
        body = fmt(x) if mag == 1 else f"{format_fraction(mag)}*{fmt(x)}"
        if i == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


class TensorPolynomial:
    """Finite rational combination of tuples of elements (p (x) q, ...)."""

    __slots__ = ("_terms", "domain")

    def __init__(self, terms=None, domain=None):
        acc = {}
        for k, c in (terms or {}).items():
            k = tuple(k)
            acc[k] = acc.get(k, 0) + Fraction(c)
        self._terms = _clean(acc)
        self.domain = domain

    def coeff(self, key):
        return self._terms.get(tuple(key), Fraction(0))

    __getitem__ = coeff

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: tuple(sort_key(x) for x in kv[0]))

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TensorPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        return _format_terms(self.items(), lambda k: "(" + ",".join(map(str, k)) + ")")

    def __repr__(self):
        return f"TensorPolynomial({str(self)!r})"

    def to_dict(self):
        return {"domain": self.domain,
                "terms": [{"elements": [str(x) for x in k], "coeff": format_fraction(c)}
                          for k, c in self.items()]}


def _check_domain(S, *polys):
    for P in polys:
        if P.domain is not None and P.domain != S.name:
            raise MixedDomains(f"polynomial over {P.domain} used with {S.name}")


def poly_mul(S, P, Q):
    """Product in k[S]: bilinear extension of the law."""
    _check_domain(S, P, Q)
    acc = {}
    for a, ca in P.items():
        for b, cb in Q.items():
            m = S.mul(a, b)
            acc[m] = acc.get(m, 0) + ca * cb
    return Polynomial(acc, S.name)


def scalar_product(P, Q):
    """<P|Q> = sum over m of <P|m><Q|m>."""
    P._same(Q)
    return sum((c * Q.coeff(x) for x, c in P.items()), Fraction(0))


def coproduct(S, P):
    """Delta(P) = sum of <P|m> * sum_{pq=m} p (x) q.

    Raises NonFiniteDecomposition if S has no decomposer.
    """
    _check_domain(S, P)
    acc = {}
    for m, c in P.items():
        for p, q in S.decompose(m):
            acc[(p, q)] = acc.get((p, q), 0) + c
    return TensorPolynomial(acc, S.name)


def tensor_pairing(P, Q, T):
    """<P (x) Q | T>, with <P (x) Q | p (x) q> = <P|p><Q|q>."""
    return sum((c * P.coeff(p) * Q.coeff(q) for (p, q), c in T.items()), Fraction(0))


def duality_sides(S, P, Q, R):
    """Both sides of <P.Q|R> = <P (x) Q|Delta(R)>, computed exactly."""
    lhs = scalar_product(poly_mul(S, P, Q), R)
    rhs = tensor_pairing(P, Q, coproduct(S, R))
    return lhs, rhs


def duality_check(S, P, Q, R):
    lhs, rhs = duality_sides(S, P, Q, R)
    return lhs == rhs


def coproduct_left(S, m):
    """(Delta (x) id) Delta(m) as a rank-3 tensor."""
    acc = {}
    for p, q in S.decompose(m):
        for a, b in S.decompose(p):
            acc[(a, b, q)] = acc.get((a, b, q), 0) + 1
    return TensorPolynomial(acc, S.name)


def coproduct_right(S, m):
    """(id (x) Delta) Delta(m) as a rank-3 tensor."""
    acc = {}
    for p, q in S.decompose(m):
        for b, c in S.decompose(q):
            acc[(p, b, c)] = acc.get((p, b, c), 0) + 1
    return TensorPolynomial(acc, S.name)


def coassociativity_check(S, m):
    return coproduct_left(S, m) == coproduct_right(S, m)


def convolve_at(S, f, g, m):
    """(f * g)(m) = sum over m1 m2 = m of f(m1) g(m2).

    ``f`` and ``g`` may be polynomials (read as finitely supported functions)
    or plain callables; only ``decompose(m)`` is consulted, so arbitrary
    functions on an infinite semigroup are fine.
    """
    fv = f.coeff if isinstance(f, Polynomial) else f
    gv = g.coeff if isinstance(g, Polynomial) else g
    return sum((Fraction(fv(a)) * Fraction(gv(b)) for a, b in S.decompose(m)), Fraction(0))


def convolve(S, f, g):
    """Convolution of two finitely supported functions, evaluated pointwise."""
    _check_domain(S, f, g)
    if not S.has_decomposer:
        raise NonFiniteDecomposition(S.name)
    candidates = {S.mul(a, b) for a in f.support() for b in g.support()}
    return Polynomial({m: convolve_at(S, f, g, m) for m in candidates}, S.name)
