"""Invariant sweeps over every module, used by ``fdsemi check``."""
import itertools
import random
from math import comb
from pathlib import Path

from . import analytic, ddl, structure
from .algebra import (Polynomial, coassociativity_check, convolve, coproduct,
                      duality_sides, poly_mul)
from .elements import Composition, Monomial, Word
from .errors import NonEmptyTerminal, NonFiniteDecomposition, SemigroupError
from .oracles import interleavings_with_merges
from .quasi_shuffle import PRODUCTS, SHUFFLE, quasi_shuffle, quasi_shuffle_poly
from .report import Report
from .semigroup import (FiniteSemigroup, builtin, direct_product, is_invertible,
                        load_table, min_chain, transformations, units,
                        verify_decomposer, zadd, zmul)

# per-builtin caps keep graded balls at desk scale
BALL_CAPS = {"nat-plus": 20, "nat-monoid": 20, "mon-plus": 6, "mon": 6,
             "words": 4, "compositions": 6, "bicompositions": 2, "monomial-words": 2}

# two-letter alphabets for exhaustive law sweeps
LETTERS = {
    "shuffle": ["x0", "x1"],
    "stuffle": [1, 2],
    "diamond": [(1, 0), (0, 1)],
    "ldiag": [Monomial.var("x1"), Monomial.var("x2")],
}


def small_alphabet(alg):
    return LETTERS[alg.name]


def words_up_to(alg, max_len, alphabet=None):
    alphabet = alphabet or small_alphabet(alg)
    for n in range(max_len + 1):
        for letters in itertools.product(alphabet, repeat=n):
            yield alg.word_type(letters)


def fixture_semigroups(max_zmul=12, max_chain=6):
    out = [zmul(n) for n in range(1, max_zmul + 1)]
    out += [min_chain(n) for n in range(1, max_chain + 1)]
    out += [transformations(3), builtin("left-zero-2"), builtin("left-zero-3")]
    return out


def abelian_groups_up_to_8():
    """One representative of every finite abelian group of order <= 8."""
    groups = [zadd(n) for n in range(1, 9)]
    z2, z4 = zadd(2), zadd(4)
    groups.append(direct_product(z2, z2, "Z2xZ2"))
    groups.append(direct_product(z2, z4, "Z2xZ4"))
    groups.append(direct_product(direct_product(z2, z2), z2, "Z2xZ2xZ2"))
    return groups


def _sample_triples(items, limit, rng):
    if len(items) ** 3 <= limit:
        return list(itertools.product(items, repeat=3))
    return [(rng.choice(items), rng.choice(items), rng.choice(items)) for _ in range(limit)]


def check_semigroup_core(bound, rng):
    report = Report("semigroup-core")
    for name in BALL_CAPS:
        S = builtin(name)
        b = min(bound, BALL_CAPS[name])
        ball = S.ball(b)
        for x, y, z in _sample_triples(ball, 2000, rng):
            report.check(S.mul(S.mul(x, y), z) == S.mul(x, S.mul(y, z)),
                         f"{name}: not associative at ({x}, {y}, {z})")
        if S.neutral is not None:
            for x in ball:
                report.check(S.mul(S.neutral, x) == x == S.mul(x, S.neutral),
                             f"{name}: neutral fails at {x}")
        report.absorb(verify_decomposer(S, b), f"{name}")
    try:
        builtin("mon-laurent").decompose(builtin("mon-laurent").neutral)
        report.fail("mon-laurent: decompose did not refuse")
    except NonFiniteDecomposition:
        report.cases += 1
    for S in fixture_semigroups(min(bound, 12), min(bound, 6)):
        report.absorb(verify_decomposer(S, bound), S.name)
        if S.neutral is None:
            continue
        U = units(S)
        report.check(all(S.mul(a, b) in U for a in U for b in U), f"{S.name}: units not closed")
        for u in U:
            ok, inv = is_invertible(S, u)
            report.check(ok and inv in U, f"{S.name}: inverse of {u} not a unit")
    return report


def check_free_algebra(bound):
    report = Report("free-algebra")
    S = builtin("nat-plus")
    w = min(bound, 8)
    basis = [Polynomial.monomial(n, S.name) for n in range(1, w + 1)]
    for P, Q, R in itertools.product(basis, repeat=3):
        lhs, rhs = duality_sides(S, P, Q, R)
        report.check(lhs == rhs, f"nat-plus duality {P},{Q},{R}: {lhs} != {rhs}")
    for n in range(1, w + 1):
        report.check(coassociativity_check(S, n), f"nat-plus coassociativity at {n}")
    for T in [zmul(n) for n in range(1, min(bound, 12) + 1)] + [transformations(3)]:
        report.absorb(finite_duality_report(T), T.name)
    return report


def finite_duality_report(T):
    """Exhaustive duality, coassociativity and convolution checks on a finite semigroup."""
    report = Report(f"duality {T.name}")
    basis = {x: Polynomial.monomial(x, T.name) for x in T.elements}
    # <x.y | r> = [x y = r] and <x (x) y | Delta r> = [(x, y) in dec(r)]: compare as sets
    for r in T.elements:
        delta = coproduct(T, basis[r])
        for x, y in itertools.product(T.elements, repeat=2):
            lhs = 1 if T.mul(x, y) == r else 0
            report.check(lhs == delta.coeff((x, y)), f"duality at ({x}, {y}, {r})")
        report.check(coassociativity_check(T, r), f"coassociativity at {r}")
    if len(T) <= 12:
        for x, y in itertools.product(T.elements, repeat=2):
            report.check(convolve(T, basis[x], basis[y]) == poly_mul(T, basis[x], basis[y]),
                         f"convolution disagrees with product at ({x}, {y})")
    return report


def check_quasi_shuffle(max_len):
    report = Report("quasi-shuffle")
    for alg in PRODUCTS.values():
        words = list(words_up_to(alg, max_len))
        for u, v in itertools.product(words, repeat=2):
            if len(u) + len(v) > max_len:
                continue
            uv = quasi_shuffle(u, v, alg)
            report.check(uv == quasi_shuffle(v, u, alg), f"{alg.name}: {u} * {v} not commutative")
            oracle = interleavings_with_merges(u, v, alg.letter_mul)
            report.check(dict(oracle) == {tuple(w): int(c) for w, c in uv.items()},
                         f"{alg.name}: {u} * {v} disagrees with the interleaving oracle")
            if alg is SHUFFLE:
                report.check(sum(c for _, c in uv.items()) == comb(len(u) + len(v), len(u)),
                             f"shuffle: {u} * {v} has the wrong number of terms")
        for u, v, w in itertools.product(words, repeat=3):
            if len(u) + len(v) + len(w) > max_len:
                continue
            U, V, W = (Polynomial.monomial(x, alg.domain) for x in (u, v, w))
            left = quasi_shuffle_poly(quasi_shuffle_poly(U, V, alg), W, alg)
            right = quasi_shuffle_poly(U, quasi_shuffle_poly(V, W, alg), alg)
            report.check(left == right, f"{alg.name}: not associative at ({u}, {v}, {w})")
    return report


def analytic_words(max_total):
    """Words over {x0, x1} ending in x1, of length <= max_total, plus the empty word."""
    out = [Word()]
    for n in range(1, max_total + 1):
        for letters in itertools.product(["x0", "x1"], repeat=n - 1):
            out.append(Word(letters + ("x1",)))
    return out


def convergent_compositions(max_weight):
    out = []
    for n in range(2, max_weight + 1):
        for k in range(1, n):
            for cut in itertools.combinations(range(1, n), k - 1):
                parts = [b - a for a, b in zip((0,) + cut, cut + (n,))]
                if parts[0] >= 2:
                    out.append(Composition(parts))
    return out


def check_analytic(max_total=5, weight=6, z=0.5, N=2000, N_zeta=10_000):
    report = Report("analytic-verify")
    words = analytic_words(max_total)
    for u, v in itertools.product(words, repeat=2):
        if len(u) + len(v) <= max_total:
            report.absorb(analytic.chen_check(u, v, z, N, 1e-8), "chen")
    comps = convergent_compositions(weight)
    for s, t in itertools.product(comps, repeat=2):
        if sum(s) + sum(t) <= weight:
            report.absorb(analytic.stuffle_check(s, t, N_zeta, 1e-3), "stuffle")
    return report


def check_ddl(bound, seed):
    report = Report("ddl")
    fig1 = ddl.fig1_system()
    report.absorb(ddl.validate_system(fig1, bound, seed=seed), "fig1")
    crit = ddl.fd_criterion_check(fig1, bound)
    report.cases += crit.cases
    if not crit.passed:
        report.fail(f"fig1 criterion: {crit.witnesses}")
    for make in (ddl.defect_interval_system, ddl.defect_component_system,
                 ddl.defect_fiber_system):
        sys = make()
        crit = ddl.fd_criterion_check(sys, bound)
        report.check(not crit.passed, f"{sys.name}: defect not detected")
        for cond, triples in crit.decompositions.items():
            report.check(len({(a, b) for a, b, _ in triples}) >= bound,
                         f"{sys.name} ({cond}): only {len(triples)} witness decompositions")
    return report


def check_structure():
    report = Report("structure")
    for S in fixture_semigroups():
        report.absorb(structure.verify_structure_theorem(S), S.name)
    for S in [min_chain(n) for n in range(1, 7)] + abelian_groups_up_to_8():
        _, rep = structure.rebuild_as_ddl(S)
        report.absorb(rep, S.name)
    for S in [zmul(4), transformations(3)]:
        try:
            structure.rebuild_as_ddl(S)
            report.fail(f"{S.name}: rebuild accepted a nonempty terminal")
        except NonEmptyTerminal:
            report.cases += 1
    return report


def check_fixture_dir(path, bound, seed):
    report = Report(f"fixtures {path}")
    for f in sorted(Path(path).glob("*.table")):
        try:
            S = load_table(f)
        except SemigroupError as exc:
            report.fail(f"{f.name}: {exc}")
            continue
        report.absorb(structure.verify_structure_theorem(S), f.name)
        report.absorb(verify_decomposer(S, bound), f.name)
    for f in sorted(Path(path).glob("*.ddl")):
        try:
            sys = ddl.load_ddl(f)
        except SemigroupError as exc:
            report.fail(f"{f.name}: {exc}")
            continue
        report.absorb(ddl.validate_system(sys, bound, seed=seed), f.name)
        crit = ddl.fd_criterion_check(sys, bound)
        report.cases += crit.cases
        if not crit.passed:
            report.fail(f"{f.name}: criterion violated {crit.witnesses}")
    return report


def check_all(bound=8, seed=0, fixtures=None):
    """Run every module's invariant sweep at ``bound``; returns a list of reports."""
    if bound <= 0:
        rep = Report("check-all")
        rep.notes.append("bound 0: 0 cases run (vacuous pass)")
        return [rep]
    rng = random.Random(seed)
    reports = [
        check_semigroup_core(bound, rng),
        check_free_algebra(bound),
        check_quasi_shuffle(min(bound, 5)),
        check_analytic(max_total=min(bound, 5), weight=min(bound, 6)),
        check_ddl(min(bound, 12), seed),
        check_structure(),
    ]
    if fixtures is not None:
        reports.append(check_fixture_dir(fixtures, bound, seed))
    return reports
