"""Peeling a semigroup into group layers.

Starting from T_0 = T, while the current tail T_n has a neutral e_n, strip
its group of units G_n and continue with T_{n+1} = T_n minus G_n.  What is
left when no neutral remains is the terminal semigroup.  Layers are indexed
from 0.
"""
import itertools
from dataclasses import dataclass, field

from .ddl import DDLElement, chain, ddl_mul, finite_system
from .errors import CapabilityMissing, LemmaViolation, NonEmptyTerminal
from .report import Report
from .semigroup import FiniteSemigroup, is_invertible, units


@dataclass(frozen=True)
class Layer:
    index: int
    neutral: object
    group: frozenset


@dataclass
class PeelingResult:
    """Layers G_0, G_1, ... and the neutral-free terminal tail.

    ``terminal`` is a frozenset for finite semigroups and a semigroup handle
    for oracle-driven infinite ones.
    """

    semigroup: object
    layers: list
    terminal: object
    tails: list = field(default_factory=list)

    @property
    def D(self):
        return [layer.index for layer in self.layers]

    def layer_of(self, x):
        for layer in self.layers:
            if x in layer.group:
                return layer.index
        return None  # terminal

    def tail(self, n):
        """Elements of T_n as a set (finite case)."""
        out = set(self.terminal)
        for layer in self.layers[n:]:
            out |= layer.group
        return out

    def describe(self):
        S = self.semigroup
        order = S.elements if isinstance(S, FiniteSemigroup) else None

        def fmt(xs):
            xs = [x for x in order if x in xs] if order is not None else sorted(xs, key=str)
            return "{" + ", ".join(str(x) for x in xs) + "}"

        lines = [f"peel {S.name}: {len(self.layers)} layer(s)"]
        for layer in self.layers:
            lines.append(f"  G_{layer.index}: neutral {layer.neutral}, "
                         f"{len(layer.group)} element(s) {fmt(layer.group)}")
        if isinstance(self.terminal, frozenset):
            lines.append(f"  terminal: {len(self.terminal)} element(s) {fmt(self.terminal)}")
        else:
            lines.append(f"  terminal: {self.terminal.name} (no neutral)")
        return "\n".join(lines)

    def to_dict(self):
        S = self.semigroup
        order = S.elements if isinstance(S, FiniteSemigroup) else None

        def ordered(xs):
            xs = [x for x in order if x in xs] if order is not None else sorted(xs, key=str)
            return [str(x) for x in xs]

        return {"semigroup": S.name,
                "layers": [{"index": g.index, "neutral": str(g.neutral),
                            "group": ordered(g.group)} for g in self.layers],
                "terminal": ordered(self.terminal) if isinstance(self.terminal, frozenset)
                else {"semigroup": self.terminal.name}}


def peel(S):
    """Strip unit groups off ``S`` until the remaining tail has no neutral."""
    if isinstance(S, FiniteSemigroup):
        return _peel_finite(S)
    return _peel_oracle(S)


def _peel_finite(S):
    layers, tails = [], []
    current = S
    for n in itertools.count():
        tails.append(current)
        e = current.neutral
        if e is None:
            return PeelingResult(S, layers, frozenset(current.elements), tails)
        group = units(current)
        layers.append(Layer(n, e, group))
        rest = [x for x in current.elements if x not in group]
        current = current.restrict(rest, name=f"{S.name}/T{n + 1}")


def _peel_oracle(S):
    layers, tails = [], []
    current = S
    for n in itertools.count():
        tails.append(current)
        if current.neutral is None:
            return PeelingResult(S, layers, current, tails)
        if current.units_oracle is None or current.tail is None:
            raise CapabilityMissing(f"{current.name}: peeling an infinite monoid needs "
                                    "a units oracle and a tail constructor")
        layers.append(Layer(n, current.neutral, units(current)))
        current = current.tail()


def projection(S, result, n, x):
    """e_n x e_n, after checking e_n x e_n = e_n x = x e_n lies in T_n."""
    e = result.layers[n].neutral
    ex, xe = S.mul(e, x), S.mul(x, e)
    exe = S.mul(ex, e)
    if not (exe == ex == xe):
        raise LemmaViolation(f"{S.name}: e_{n} = {e}, x = {x}: e x e = {exe}, "
                             f"e x = {ex}, x e = {xe}")
    if isinstance(result.terminal, frozenset) and exe not in result.tail(n):
        raise LemmaViolation(f"{S.name}: e_{n} x e_{n} = {exe} is not in T_{n}")
    return exe


def layer_morphism(S, result, i, j, x):
    """phi_{ij}: G_j -> G_i for j <= i, the restriction of the projection to T_i."""
    if j > i:
        raise ValueError(f"layer morphisms go from G_j to G_i with j <= i, got i={i}, j={j}")
    if x not in result.layers[j].group:
        raise ValueError(f"{x} is not in G_{j}")
    y = projection(S, result, i, x)
    if y not in result.layers[i].group:
        raise LemmaViolation(f"{S.name}: projection of {x} from G_{j} lands outside G_{i}: {y}")
    return y


def _layer_morphism_report(S, result, i, j, report):
    Gj = result.layers[j].group
    for a, b in itertools.product(Gj, repeat=2):
        lhs = layer_morphism(S, result, i, j, S.mul(a, b))
        rhs = S.mul(layer_morphism(S, result, i, j, a), layer_morphism(S, result, i, j, b))
        report.check(lhs == rhs, f"phi[{i},{j}] not multiplicative at ({a}, {b})")
    e_j, e_i = result.layers[j].neutral, result.layers[i].neutral
    report.check(layer_morphism(S, result, i, j, e_j) == e_i,
                 f"phi[{i},{j}] does not send e_{j} to e_{i}")


def _check_units_coincide(T, report, label):
    """Right-, left-invertible and cyclic elements all coincide with the units."""
    e = T.neutral
    els = T.elements
    right = {u for u in els if any(T.mul(u, v) == e for v in els)}
    left = {u for u in els if any(T.mul(v, u) == e for v in els)}
    cyclic = set()
    for u in els:
        p = u
        for _ in range(len(els)):
            if p == e:
                cyclic.add(u)
                break
            p = T.mul(p, u)
    U = set(units(T))
    report.check(right == U, f"{label}: right-invertible {sorted(right, key=str)} != units")
    report.check(left == U, f"{label}: left-invertible {sorted(left, key=str)} != units")
    report.check(cyclic == U, f"{label}: cyclic {sorted(cyclic, key=str)} != units")
    for u in U:
        ok, inv = is_invertible(T, u)
        report.check(ok and T.mul(u, inv) == e == T.mul(inv, u),
                     f"{label}: bad inverse {inv} for {u}")


def verify_structure_theorem(S):
    """Exhaustively check every claim of the peeling theory on a finite semigroup."""
    if not isinstance(S, FiniteSemigroup):
        raise CapabilityMissing("verify_structure_theorem needs a finite semigroup")
    report = Report(f"structure {S.name}")
    try:
        result = peel(S)
    except Exception as exc:  # a closure failure in restrict is a falsified claim
        report.fail(f"peeling failed: {exc}")
        return report
    carrier = set(S.elements)
    seen = set()
    for layer in result.layers:
        report.check(not (layer.group & seen), f"G_{layer.index} overlaps an earlier layer")
        seen |= layer.group
    report.check(not (seen & result.terminal), "terminal overlaps a layer")
    report.check(seen | result.terminal == carrier, "layers and terminal do not cover T")
    report.check(len(result.layers) <= len(S), "more layers than elements")

    for layer in result.layers:
        G, e, n = layer.group, layer.neutral, layer.index
        report.check(e in G, f"e_{n} = {e} not in G_{n}")
        for a, b in itertools.product(G, repeat=2):
            report.check(S.mul(a, b) in G, f"G_{n} not closed: {a}*{b}")
        for a in G:
            report.check(S.mul(e, a) == a == S.mul(a, e), f"e_{n} not neutral on {a}")
            report.check(any(S.mul(a, b) == e == S.mul(b, a) for b in G),
                         f"{a} has no inverse in G_{n}")

    for n, T in enumerate(result.tails):
        elems = set(T.elements)
        report.check(elems == result.tail(n), f"T_{n} differs from the union of later layers")
        for a, b in itertools.product(T.elements, repeat=2):
            report.check(S.mul(a, b) in elems, f"T_{n} not closed: {a}*{b} = {S.mul(a, b)}")
        if T.neutral is not None:
            _check_units_coincide(T, report, f"T_{n}")
    terminal = result.tails[-1]
    report.check(terminal.neutral is None, "terminal has a neutral element")

    for layer in result.layers:
        for x in S.elements:
            try:
                projection(S, result, layer.index, x)
                report.cases += 1
            except LemmaViolation as exc:
                report.fail(str(exc))

    for i, j in itertools.product(range(len(result.layers)), repeat=2):
        if j <= i:
            try:
                _layer_morphism_report(S, result, i, j, report)
            except LemmaViolation as exc:
                report.fail(str(exc))
    for li, lj in itertools.product(result.layers, repeat=2):
        m = max(li.index, lj.index)
        for x, y in itertools.product(li.group, lj.group):
            xy = S.mul(x, y)
            pushed = S.mul(projection(S, result, m, x), projection(S, result, m, y))
            report.check(xy == pushed and xy in result.layers[m].group,
                         f"{x}*{y} = {xy} vs pushed product {pushed} in G_{m}")
    return report


def rebuild_as_ddl(S, result=None):
    """Reassemble S as a disjoint direct limit of its group layers.

    Only possible when the terminal tail is empty; returns the system and a
    report comparing the rebuilt Cayley table with the original one.
    """
    result = result or peel(S)
    if result.terminal:
        raise NonEmptyTerminal(f"{S.name}: terminal tail has {len(result.terminal)} "
                               "element(s) and no neutral, so there is no projection "
                               "onto it; rebuild refused")
    N = len(result.layers)
    components = {layer.index: S.restrict(layer.group, name=f"G_{layer.index}")
                  for layer in result.layers}
    tables = {}
    for i, j in itertools.product(range(N), repeat=2):
        if j < i:
            tables[(i, j)] = {x: layer_morphism(S, result, i, j, x)
                              for x in result.layers[j].group}
    system = finite_system(f"rebuild({S.name})", chain(N), components, tables)
    report = Report(f"rebuild {S.name}")
    label = {x: result.layer_of(x) for x in S.elements}
    pos = S.index
    rebuilt = S.table.copy()
    for a, b in itertools.product(S.elements, repeat=2):
        z = ddl_mul(system, DDLElement(label[a], a), DDLElement(label[b], b))
        rebuilt[pos[a], pos[b]] = pos[z.value]
        report.check(z.label == label[z.value],
                     f"{a}*{b} lands in layer {z.label}, expected {label[z.value]}")
    report.check(rebuilt.tobytes() == S.table.tobytes(),
                 "rebuilt Cayley table differs from the original")
    report.rebuilt_table = rebuilt
    return system, report


def rebuilt_cayley_text(S, system):
    """Cayley table of the rebuilt limit, written in the original element order."""
    label = {}
    for a in system.index.labels:
        for x in system.component(a).elements:
            label[x] = a
    names = [str(x) for x in S.elements]
    lines = [" ".join(names)]
    for a in S.elements:
        row = [ddl_mul(system, DDLElement(label[a], a), DDLElement(label[b], b)).value
               for b in S.elements]
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
