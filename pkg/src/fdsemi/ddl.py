"""Disjoint direct limits of semigroups over an upper semilattice.

Elements of the limit are :class:`DDLElement` pairs ``(label, value)``; the
label makes the union disjoint by construction.  Two elements multiply by
pushing both to the join of their labels and multiplying there::

    x * y = phi[a v b, a](x) . phi[a v b, b](y)

``phi(alpha, beta, x)`` maps ``S_beta -> S_alpha`` for ``beta <= alpha``.

Infinite systems (such as :func:`fig1_system`) expose graded enumerations,
and every check on them is bounded; reports say so.
"""
import itertools
import random
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DDLError, NotInCarrier, SemigroupError
from .report import Report
from .elements import Monomial
from .semigroup import (NO, FiniteSemigroup, Semigroup, builtin, int_ray,
                        mon_laurent, nat_monoid, nat_plus, verify_decomposer)

VERIFIED = "verified"
VERIFIED_TO_BOUND = "verified-to-bound"
VIOLATED = "violated-with-witness"


@dataclass(frozen=True)
class DDLElement:
    label: object
    value: object

    def __str__(self):
        return f"({self.label}|{self.value})"


class IndexSemilattice:
    """Partially ordered index set with binary joins.

    Finite semilattices carry ``labels``; infinite ones enumerate a finite
    piece through ``ball(bound)``.
    """

    def __init__(self, name, leq, join, *, labels=None, ball=None, minimum=None,
                 parse_label=str):
        if labels is None and ball is None:
            raise DDLError(f"{name}: need labels or a ball enumerator")
        self.name = name
        self.leq = leq
        self.join = join
        self.labels = list(labels) if labels is not None else None
        self._ball = ball
        self.minimum = minimum
        self.parse_label = parse_label

    @property
    def is_finite(self):
        return self.labels is not None

    def enumerate(self, bound):
        return self.labels if self.is_finite else list(self._ball(bound))

    def below(self, alpha, bound):
        """Initial interval of ``alpha``, truncated to the enumeration."""
        return [b for b in self.enumerate(bound) if self.leq(b, alpha)]


def chain(n):
    """The chain 0 < 1 < ... < n-1; join is max."""
    return IndexSemilattice(f"chain-{n}", lambda a, b: a <= b, max,
                            labels=range(n), minimum=0, parse_label=int)


def semilattice_from_order(labels, pairs, joins=None):
    """Finite semilattice from generating ``(a, b)`` pairs meaning a <= b.

    The order is closed reflexively and transitively; joins are computed as
    least upper bounds and checked against ``joins`` when given.
    """
    labels = list(labels)
    le = {(a, a) for a in labels}
    le.update(pairs)
    for a, b in le:
        if a not in labels or b not in labels:
            raise DDLError(f"order mentions unknown label in ({a}, {b})")
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(le), repeat=2):
            if b == c and (a, d) not in le:
                le.add((a, d))
                changed = True
    for a, b in le:
        if a != b and (b, a) in le:
            raise DDLError(f"order is not antisymmetric: {a} <= {b} <= {a}")
    table = {}
    for a, b in itertools.product(labels, repeat=2):
        ubs = [c for c in labels if (a, c) in le and (b, c) in le]
        least = [c for c in ubs if all((c, d) in le for d in ubs)]
        if not least:
            raise DDLError(f"labels {a} and {b} have no join")
        table[(a, b)] = least[0]
    for (a, b), c in (joins or {}).items():
        if table[(a, b)] != c:
            raise DDLError(f"declared join {a} v {b} = {c} disagrees with the order "
                           f"(least upper bound is {table[(a, b)]})")
    minima = [a for a in labels if all((a, b) in le for b in labels)]
    return IndexSemilattice("finite", lambda a, b: (a, b) in le,
                            lambda a, b: table[(a, b)], labels=labels,
                            minimum=minima[0] if minima else None)


class DDLSystem:
    """Inductive system of semigroups over an :class:`IndexSemilattice`.

    ``components`` maps labels to semigroups (a dict or a callable);
    ``morphism(alpha, beta, x)`` implements phi_{alpha beta} on S_beta.
    ``fiber(alpha, beta, y, bound)`` optionally lists the preimages of ``y``
    up to the bound; finite components are scanned instead.
    """

    def __init__(self, name, index, components, morphism, fiber=None):
        self.name = name
        self.index = index
        self._components = components
        self._morphism = morphism
        self._fiber = fiber

    def component(self, label):
        if callable(self._components):
            return self._components(label)
        try:
            return self._components[label]
        except KeyError:
            raise DDLError(f"{self.name}: no component at label {label!r}") from None

    @property
    def is_finite(self):
        return self.index.is_finite and all(
            self.component(a).is_finite for a in self.index.labels)

    def phi(self, alpha, beta, x):
        if not self.index.leq(beta, alpha):
            raise DDLError(f"{self.name}: no morphism from {beta} to {alpha} ({beta} !<= {alpha})")
        return self._morphism(alpha, beta, x)

    def element(self, label, value):
        x = DDLElement(label, value)
        self.require(x)
        return x

    def require(self, x):
        if not isinstance(x, DDLElement) or x.value not in self.component(x.label):
            raise NotInCarrier(self.name, x)

    def __contains__(self, x):
        try:
            self.require(x)
        except (SemigroupError, TypeError, ValueError):
            return False
        return True

    def elements(self, bound):
        return [DDLElement(a, v) for a in self.index.enumerate(bound)
                for v in self.component(a).ball(bound)]

    def fiber(self, alpha, beta, y, bound):
        """Preimages of ``y`` under phi_{alpha beta}, up to ``bound``."""
        if self._fiber is not None:
            return list(self._fiber(alpha, beta, y, bound))
        return [x for x in self.component(beta).ball(bound) if self.phi(alpha, beta, x) == y]

    def preimage_labels(self, alpha, y, bound):
        """Labels beta <= alpha whose morphism hits ``y`` (enumeration up to bound)."""
        return [b for b in self.index.below(alpha, bound) if self.fiber(alpha, b, y, bound)]

    def parse(self, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")") and "|" in text):
            raise ValueError(f"expected (label|value), got {text!r}")
        label_text, _, value_text = text[1:-1].partition("|")
        label = self.index.parse_label(label_text.strip())
        return self.element(label, self.component(label).parse(value_text))

    def as_semigroup(self):
        """The limit as a :class:`Semigroup` (no decomposer attached)."""
        return Semigroup(f"DDL({self.name})", lambda x, y: ddl_mul(self, x, y),
                         contains=self.__contains__, parse=self.parse,
                         ball=self.elements, grading="label and component balls")


def ddl_mul(sys, x, y):
    sys.require(x)
    sys.require(y)
    top = sys.index.join(x.label, y.label)
    S = sys.component(top)
    value = S.mul(sys.phi(top, x.label, x.value), sys.phi(top, y.label, y.value))
    return DDLElement(top, value)


def ddl_decompose(sys, z, bound):
    """Decompositions of ``z`` assembled from component data.

    Runs over the pairs (u, v) decomposing z in its own component, the labels
    whose morphisms reach u and v, and the fibers above them.  Complete when
    the three finiteness conditions hold and the enumeration up to ``bound``
    reaches every relevant label and preimage.
    """
    sys.require(z)
    lam = z.label
    out = set()
    for u, v in sys.component(lam).decompose(z.value):
        for a in sys.preimage_labels(lam, u, bound):
            for b in sys.preimage_labels(lam, v, bound):
                if sys.index.join(a, b) != lam:
                    continue
                for x in sys.fiber(lam, a, u, bound):
                    for y in sys.fiber(lam, b, v, bound):
                        out.add((DDLElement(a, x), DDLElement(b, y)))
    return sorted(out, key=lambda p: (str(p[0]), str(p[1])))


def brute_decompositions(sys, z, bound):
    ball = sys.elements(bound)
    return sorted(((x, y) for x in ball for y in ball if ddl_mul(sys, x, y) == z),
                  key=lambda p: (str(p[0]), str(p[1])))


# validation -----------------------------------------------------------------

def _triples(items, limit, rng):
    total = len(items) ** 3
    if total <= limit:
        return itertools.product(items, repeat=3), total, True
    return ((rng.choice(items), rng.choice(items), rng.choice(items))
            for _ in range(limit)), limit, False


def validate_system(sys, bound, *, seed=0, max_triples=20_000):
    """Check the semilattice laws, the inductive-system axioms and associativity.

    Everything is exhaustive on finite systems; on infinite ones the checks
    cover the labels and component balls up to ``bound`` and a seeded sample
    of triples for associativity.
    """
    report = Report(f"validate {sys.name} (bound {bound})")
    rng = random.Random(seed)
    idx = sys.index
    labels = idx.enumerate(bound)
    for a, b in itertools.product(labels, repeat=2):
        j = idx.join(a, b)
        report.check(j == idx.join(b, a), f"join not commutative at ({a}, {b})")
        report.check(idx.leq(a, j) and idx.leq(b, j), f"{a} v {b} = {j} is not an upper bound")
        report.check(idx.leq(a, b) == (j == b), f"{a} <= {b} disagrees with {a} v {b} = {j}")
    for a in labels:
        report.check(idx.join(a, a) == a, f"join not idempotent at {a}")
    for a, b, c in itertools.product(labels, repeat=3):
        report.check(idx.join(idx.join(a, b), c) == idx.join(a, idx.join(b, c)),
                     f"join not associative at ({a}, {b}, {c})")

    balls = {a: sys.component(a).ball(bound) for a in labels}
    for a in labels:
        for x in balls[a]:
            report.check(sys.phi(a, a, x) == x, f"phi[{a},{a}]({x}) = {sys.phi(a, a, x)} != {x}")
    for g, b, a in itertools.product(labels, repeat=3):
        if not (idx.leq(g, b) and idx.leq(b, a)):
            continue
        for x in balls[g]:
            lhs = sys.phi(a, b, sys.phi(b, g, x))
            rhs = sys.phi(a, g, x)
            report.check(lhs == rhs, f"phi[{a},{b}] o phi[{b},{g}]({x}) = {lhs} != "
                                     f"phi[{a},{g}]({x}) = {rhs}")
    for b, a in itertools.product(labels, repeat=2):
        if not idx.leq(b, a):
            continue
        Sa, Sb = sys.component(a), sys.component(b)
        for x in balls[b]:
            report.check(sys.phi(a, b, x) in Sa, f"phi[{a},{b}]({x}) leaves S_{a}")
        for x, y in itertools.product(balls[b], repeat=2):
            lhs = sys.phi(a, b, Sb.mul(x, y))
            rhs = Sa.mul(sys.phi(a, b, x), sys.phi(a, b, y))
            report.check(lhs == rhs, f"phi[{a},{b}] not a morphism at ({x}, {y}): "
                                     f"{lhs} != {rhs}")
    for a in labels:
        S = sys.component(a)
        if isinstance(S, FiniteSemigroup):
            bad = S.associativity_witness()
            report.check(bad is None, f"component {a} not associative at {bad}")
    elements = sys.elements(bound)
    if elements:
        triples, n, exhaustive = _triples(elements, max_triples, rng)
        for x, y, z in triples:
            lhs = ddl_mul(sys, ddl_mul(sys, x, y), z)
            rhs = ddl_mul(sys, x, ddl_mul(sys, y, z))
            report.check(lhs == rhs, f"({x}*{y})*{z} = {lhs} != {x}*({y}*{z}) = {rhs}")
        report.notes.append(f"associativity on {n} triples "
                            + ("(exhaustive)" if exhaustive else f"(sampled, seed {seed})"))
    if not sys.is_finite:
        report.notes.append(f"infinite system: checks cover labels and balls up to {bound}")
    return report


# finite decomposition criterion -----------------------------------------------

@dataclass
class CriterionReport:
    """Per-condition verdicts of the finite decomposition criterion."""

    system: str
    bound: int
    verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    decompositions: dict = field(default_factory=dict)
    cases: int = 0

    @property
    def passed(self):
        return all(v != VIOLATED for v in self.verdicts.values())

    def to_dict(self):
        return {"system": self.system, "bound": self.bound, "passed": self.passed,
                "cases": self.cases, "verdicts": dict(self.verdicts),
                "witnesses": {k: str(v) for k, v in self.witnesses.items()},
                "witness_decompositions": {
                    k: len(v) for k, v in self.decompositions.items()}}

    def __str__(self):
        lines = [f"{'PASS' if self.passed else 'FAIL'} criterion {self.system} "
                 f"(bound {self.bound}, {self.cases} cases)"]
        for cond in ("i", "ii", "iii"):
            lines.append(f"  ({cond}) {self.verdicts.get(cond, 'not run')}")
            if cond in self.witnesses:
                lines.append(f"      witness: {self.witnesses[cond]}")
            if self.decompositions.get(cond):
                triples = self.decompositions[cond]
                lines.append(f"      {len(triples)} distinct decompositions of {triples[0][2]}")
        return "\n".join(lines)


def _square_witness(sys, alpha, y, preimages):
    """Decompositions y * x of y^2 for preimages x of y (beta <= alpha)."""
    yy = DDLElement(alpha, y)
    square = ddl_mul(sys, yy, yy)
    out = []
    for x in preimages:
        if ddl_mul(sys, yy, x) == square:
            out.append((yy, x, square))
    return out


def _growing_decomposition(S, bound):
    """An element of S whose brute-force decomposition count grows with the ball.

    Compares the balls at ``bound`` and ``bound + 1``: squaring a ball at
    twice the bound is already too slow for two-variable Laurent monomials.
    """
    small, large = S.ball(bound), S.ball(bound + 1)
    targets = ([S.neutral] if S.neutral is not None else []) + small
    for t in targets[:50]:
        few = [(a, b) for a in small for b in small if S.mul(a, b) == t]
        many = [(a, b) for a in large for b in large if S.mul(a, b) == t]
        if len(many) > len(few):
            return t, many
    return None, []


def fd_criterion_check(sys, bound):
    """Test conditions (i)-(iii) of the finite decomposition criterion.

    (i)   for each y in S_alpha, finitely many beta <= alpha have phi^-1(y) nonempty;
    (ii)  every component is finite decomposition;
    (iii) every fiber phi^-1_{alpha beta}(y) is finite.

    Finite systems are scanned exhaustively (verdict ``verified``).  Otherwise
    each set is computed at ``bound`` and ``2*bound``; growth is reported as a
    violation with a witness, stability as ``verified-to-bound``.
    """
    out = CriterionReport(sys.name, bound)
    exhaustive = sys.is_finite
    ok = VERIFIED if exhaustive else VERIFIED_TO_BOUND
    labels = sys.index.enumerate(bound)

    verdict = ok
    for a in labels:
        for y in sys.component(a).ball(bound):
            out.cases += 1
            near = sys.preimage_labels(a, y, bound)
            if exhaustive:
                continue
            far = sys.preimage_labels(a, y, 2 * bound)
            if len(far) > len(near):
                verdict = VIOLATED
                preimages = [DDLElement(b, sys.fiber(a, b, y, 2 * bound)[0]) for b in far]
                out.witnesses["i"] = (f"y = ({a}|{y}): {len(far)} labels below {a} reach y "
                                      f"at bound {2 * bound}, {len(near)} at bound {bound}")
                out.decompositions["i"] = _square_witness(sys, a, y, preimages)
                break
        if verdict == VIOLATED:
            break
    out.verdicts["i"] = verdict

    verdict = ok
    for a in labels:
        S = sys.component(a)
        out.cases += 1
        if S.finite_decomposition == NO or not S.has_decomposer:
            verdict = VIOLATED
            t, pairs = _growing_decomposition(S, bound)
            out.witnesses["ii"] = (f"component S_{a} = {S.name} is not finite decomposition"
                                   + (f"; {t} has {len(pairs)} decompositions at bound "
                                      f"{bound + 1}" if t is not None else ""))
            square = DDLElement(a, t)
            out.decompositions["ii"] = [(DDLElement(a, p), DDLElement(a, q), square)
                                        for p, q in pairs]
            break
        rep = verify_decomposer(S, bound)
        if not rep.passed:
            verdict = VIOLATED
            out.witnesses["ii"] = f"S_{a}: {rep.failures[0]}"
            break
    out.verdicts["ii"] = verdict

    verdict = ok
    for a, b in itertools.product(labels, repeat=2):
        if verdict == VIOLATED:
            break
        if a == b or not sys.index.leq(b, a):
            continue
        for y in sys.component(a).ball(bound):
            out.cases += 1
            if exhaustive:
                continue
            near = sys.fiber(a, b, y, bound)
            far = sys.fiber(a, b, y, 2 * bound)
            if len(far) > len(near):
                verdict = VIOLATED
                out.witnesses["iii"] = (f"fiber of phi[{a},{b}] over {y} has {len(far)} "
                                        f"elements at bound {2 * bound}, {len(near)} at {bound}")
                out.decompositions["iii"] = _square_witness(
                    sys, a, y, [DDLElement(b, x) for x in far])
                break
    out.verdicts["iii"] = verdict
    return out


# fixtures -------------------------------------------------------------------

def _reversed_naturals(name):
    # alpha <= beta  iff  min(alpha, beta) == beta, so the join is the integer min
    return IndexSemilattice(name, lambda a, b: b <= a, min,
                            ball=lambda bound: range(bound + 1), parse_label=int)


def fig1_system():
    """S_k = integers >= k under +, glued along phi(k, y) = (l, y) for l <= k.

    The index order is the reverse of the integer order, so the join of two
    labels is their integer minimum and (k1|y1) * (k2|y2) = (min(k1,k2)|y1+y2).
    """
    index = _reversed_naturals("N reversed")

    def fiber(alpha, beta, y, bound):
        return [y] if y >= beta else []

    return DDLSystem("fig1", index, int_ray, lambda alpha, beta, y: y, fiber=fiber)


def defect_interval_system():
    """Every S_k is (N, +); y in S_l has a preimage in each of infinitely many S_k."""
    index = _reversed_naturals("N reversed")
    return DDLSystem("defect-interval", index, lambda k: nat_monoid(),
                     lambda alpha, beta, y: y,
                     fiber=lambda alpha, beta, y, bound: [y])


def defect_component_system():
    """Chain 0 < 1 with S_0 = (N+, +) embedded into the Laurent monomials S_1."""
    laurent = mon_laurent()
    comps = {0: nat_plus(), 1: laurent}

    def phi(alpha, beta, x):
        if alpha == beta:
            return x
        return Monomial.var("x1", x)

    def fiber(alpha, beta, y, bound):
        if alpha == beta:
            return [y]
        e = y.exponents()
        k = e.get("x1", 0)
        if set(e) <= {"x1"} and 1 <= k:
            return [k]
        return []

    return DDLSystem("defect-component", chain(2), comps, phi, fiber=fiber)


def defect_fiber_system():
    """Chain 0 < 1 with S_0 = (N+, +) collapsed onto the trivial group S_1 = {e}."""
    trivial = FiniteSemigroup("trivial", ["e"], [[0]])
    comps = {0: nat_plus(), 1: trivial}

    def phi(alpha, beta, x):
        return x if alpha == beta else "e"

    def fiber(alpha, beta, y, bound):
        if alpha == beta:
            return [y]
        return list(range(1, bound + 1)) if y == "e" else []

    return DDLSystem("defect-fiber", chain(2), comps, phi, fiber=fiber)


def finite_system(name, index, components, tables):
    """DDL over a finite semilattice with morphisms given as dicts.

    ``tables[(alpha, beta)]`` maps S_beta to S_alpha; identities are implicit.
    """
    tables = dict(tables)

    def phi(alpha, beta, x):
        if (alpha, beta) in tables:
            return tables[(alpha, beta)][x]
        if alpha == beta:
            return x
        raise DDLError(f"{name}: no morphism table for phi[{alpha},{beta}]")

    for (a, b), table in tables.items():
        if not index.leq(b, a):
            raise DDLError(f"{name}: morphism phi[{a},{b}] given but {b} !<= {a}")
        missing = [x for x in components[b].elements if x not in table]
        if missing:
            raise DDLError(f"{name}: phi[{a},{b}] undefined on {missing[0]}")
    for a, b in itertools.product(index.labels, repeat=2):
        if a != b and index.leq(b, a) and (a, b) not in tables:
            raise DDLError(f"{name}: missing morphism table phi[{a},{b}]")
    return DDLSystem(name, index, dict(components), phi)


def load_ddl(path):
    """Read a DDL description file.

    Lines (``#`` starts a comment)::

        component <label> <semigroup name or table:path>
        leq <a> <b>                 a <= b
        join <a> <b> <c>            optional; checked against the order
        morphism <alpha> <beta> <x>-><y> ...   phi_{alpha beta}: S_beta -> S_alpha

    Relative ``table:`` paths resolve against the file's directory.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DDLError(f"cannot read {path}: {exc}") from None
    return parse_ddl(text, name=path.stem, base=path.parent)


def parse_ddl(text, name="ddl", base=Path(".")):
    components, order, joins, morphisms = {}, [], {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *args = line.split()
        try:
            if head == "component" and len(args) == 2:
                label, sg = args
                if sg.startswith("table:") and not Path(sg[6:]).is_absolute():
                    sg = "table:" + str(base / sg[6:])
                components[label] = builtin(sg)
            elif head == "leq" and len(args) == 2:
                order.append(tuple(args))
            elif head == "join" and len(args) == 3:
                joins[(args[0], args[1])] = args[2]
            elif head == "morphism" and len(args) >= 2:
                alpha, beta, *maps = args
                S_a, S_b = components[alpha], components[beta]
                table = {}
                for m in maps:
                    src, arrow, dst = m.partition("->")
                    if not arrow:
                        raise DDLError(f"expected x->y, got {m!r}")
                    table[S_b.parse(src)] = S_a.parse(dst)
                morphisms[(alpha, beta)] = table
            else:
                raise DDLError(f"unrecognized line {line!r}")
        except (KeyError, SemigroupError, ValueError) as exc:
            raise DDLError(f"{name}:{lineno}: {exc}") from None
    if not components:
        raise DDLError(f"{name}: no components")
    for c in components.values():
        if not isinstance(c, FiniteSemigroup):
            raise DDLError(f"{name}: description files support finite components only")
    index = semilattice_from_order(list(components), order, joins)
    return finite_system(name, index, components, morphisms)
