"""Acceptance criteria, one test each.

Every test prints a single ``ACCEPTANCE <n> PASS|FAIL ...`` line with the
measured runtime against its limit; the lines are repeated in the pytest
terminal summary.  Run on its own with::

    pytest tests/test_acceptance.py -v
"""
import itertools
import math
import time
from collections import Counter
from math import comb

from fdsemi import ddl, structure
from fdsemi.algebra import (Polynomial, coproduct, poly_mul, scalar_product, tensor_pairing)
from fdsemi.analytic import chen_check, stuffle_check
from fdsemi.checks import (abelian_groups_up_to_8, analytic_words, convergent_compositions,
                           words_up_to)
from fdsemi.ddl import DDLElement
from fdsemi.errors import NonEmptyTerminal
from fdsemi.oracles import interleavings_with_merges
from fdsemi.quasi_shuffle import PRODUCTS, SHUFFLE, quasi_shuffle, quasi_shuffle_poly
from fdsemi.semigroup import builtin, left_zero, min_chain, transformations, zmul

RESULTS = []


def report(n, title, ok, elapsed, limit, detail=""):
    ok = ok and elapsed < limit
    line = (f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'} {title}: "
            f"{elapsed:.2f}s (limit {limit}s){' ' + detail if detail else ''}")
    RESULTS.append(line)
    print(line)
    assert ok, line


def _basis_duality(S, elements, targets):
    """Count basis triples (x, y, r) on which the two sides of the duality differ."""
    B = {x: Polynomial({x: 1}, S.name) for x in set(elements) | set(targets)}
    products = {(x, y): poly_mul(S, B[x], B[y]) for x, y in itertools.product(elements, repeat=2)}
    bad, cases = [], 0
    for r in targets:
        delta = coproduct(S, B[r])
        for x, y in itertools.product(elements, repeat=2):
            cases += 1
            if scalar_product(products[x, y], B[r]) != tensor_pairing(B[x], B[y], delta):
                bad.append((x, y, r))
    return bad, cases


def test_1_duality():
    t = time.perf_counter()
    bad, cases = [], 0
    nat = builtin("nat-plus")
    b, c = _basis_duality(nat, range(1, 9), range(1, 9))
    bad += b
    cases += c
    for T in [zmul(n) for n in range(1, 13)] + [transformations(3)]:
        b, c = _basis_duality(T, T.elements, T.elements)
        bad += b
        cases += c
    report(1, "duality <P.Q|R> = <P(x)Q|Delta R> exact", not bad, time.perf_counter() - t, 10,
           f"{cases} basis triples, {len(bad)} mismatches {bad[:3]}")


def test_2_quasi_shuffle_laws():
    t = time.perf_counter()
    failures, cases = [], 0
    for alg in PRODUCTS.values():
        words = list(words_up_to(alg, 6))
        mono = {w: Polynomial({w: 1}, alg.domain) for w in words}
        for u, v in itertools.product(words, repeat=2):
            if len(u) + len(v) > 6:
                continue
            uv = quasi_shuffle(u, v, alg)
            cases += 1
            if uv != quasi_shuffle(v, u, alg):
                failures.append((alg.name, "commutativity", u, v))
            if alg is SHUFFLE and sum(c for _, c in uv.items()) != comb(len(u) + len(v), len(u)):
                failures.append((alg.name, "term count", u, v))
            if len(u) + len(v) <= 5:
                oracle = interleavings_with_merges(u, v, alg.letter_mul)
                if dict(oracle) != {tuple(w): int(c) for w, c in uv.items()}:
                    failures.append((alg.name, "oracle", u, v))
        for u, v, w in itertools.product(words, repeat=3):
            if len(u) + len(v) + len(w) > 6:
                continue
            cases += 1
            U, V, W = mono[u], mono[v], mono[w]
            left = quasi_shuffle_poly(quasi_shuffle_poly(U, V, alg), W, alg)
            right = quasi_shuffle_poly(U, quasi_shuffle_poly(V, W, alg), alg)
            if left != right:
                failures.append((alg.name, "associativity", u, v, w))
    report(2, "quasi-shuffle laws (length <= 6) and oracle (length <= 5)", not failures,
           time.perf_counter() - t, 60, f"{cases} cases, {len(failures)} failures {failures[:3]}")


def test_3_chen():
    t = time.perf_counter()
    words = analytic_words(5)
    worst, failures, cases = 0.0, [], 0
    for u, v in itertools.product(words, repeat=2):
        if len(u) + len(v) > 5:
            continue
        rep = chen_check(u, v, z=0.5, N=2000, tol=1e-8)
        cases += 1
        worst = max(worst, abs(rep.lhs - rep.rhs))
        if not rep.passed:
            failures.append(rep.failures[0])
    report(3, "Chen shuffle identity at z=0.5, N=2000, tol 1e-8", not failures,
           time.perf_counter() - t, 30, f"{cases} pairs, max |diff| {worst:.2e}")


def test_4_stuffle_mzv():
    t = time.perf_counter()
    rep = stuffle_check("2", "2", N=10_000, tol=1e-3)
    closed = math.pi ** 4 / 36
    ok = rep.passed and abs(rep.lhs - closed) < 1e-3 and abs(rep.rhs - closed) < 1e-3
    comps = convergent_compositions(6)
    failures, cases = [], 0
    for s, u in itertools.product(comps, repeat=2):
        if sum(s) + sum(u) > 6:
            continue
        r = stuffle_check(s, u, N=10_000, tol=1e-3)
        cases += 1
        if not r.passed:
            failures.append(r.failures[0])
    report(4, "zeta(2)^2 = 2 zeta(2,2) + zeta(4) and weight <= 6 stuffles",
           ok and not failures, time.perf_counter() - t, 30,
           f"lhs {rep.lhs:.7f} rhs {rep.rhs:.7f} pi^4/36 {closed:.7f}, {cases} pairs")


def _fig1_count(k, y):
    # split y = y1 + y2 and pick labels k_i <= y_i with min(k1, k2) = k:
    # (y1-k+1)(y2-k+1) - (y1-k)(y2-k) choices when both y_i >= k
    return sum(y - 2 * k + 1 for y1 in range(k, y - k + 1))


def test_5_ddl_criterion():
    t = time.perf_counter()
    bound = 12
    fig1 = ddl.fig1_system()
    problems = []
    if not ddl.validate_system(fig1, bound).passed:
        problems.append("fig1 validate")
    if not ddl.fd_criterion_check(fig1, bound).passed:
        problems.append("fig1 criterion")
    # factors of (k|y) in the fig1 system have values <= y, so the bound-12 ball holds all
    # of them and one pass over ball x ball gives exact (finite) counts
    ball = fig1.elements(bound)
    counts = Counter(ddl.ddl_mul(fig1, a, b) for a, b in itertools.product(ball, repeat=2))
    for y in range(bound + 1):
        for k in range(y + 1):
            z = DDLElement(k, y)
            fast = len(ddl.ddl_decompose(fig1, z, bound))
            if not counts[z] == fast == _fig1_count(k, y):
                problems.append(f"count of {z}: {counts[z]}, {fast}, {_fig1_count(k, y)}")
    for make, cond in [(ddl.defect_interval_system, "i"), (ddl.defect_component_system, "ii"),
                       (ddl.defect_fiber_system, "iii")]:
        sys = make()
        crit = ddl.fd_criterion_check(sys, bound)
        triples = crit.decompositions.get(cond, [])
        pairs = {(a, b) for a, b, _ in triples}
        targets = {z for _, _, z in triples}
        if crit.verdicts[cond] != ddl.VIOLATED or len(targets) != 1 or len(pairs) < bound:
            problems.append(f"{sys.name}: condition ({cond}) not witnessed")
        elif any(ddl.ddl_mul(sys, a, b) not in targets for a, b in pairs):
            problems.append(f"{sys.name}: witness pair does not multiply to the target")
    report(5, "DDL criterion: fig1 passes, three defects witnessed", not problems,
           time.perf_counter() - t, 10, "; ".join(problems))


def test_6_structure_theorem():
    t = time.perf_counter()
    fixtures = ([zmul(n) for n in range(1, 13)] + [min_chain(n) for n in range(1, 7)]
                + [transformations(3), left_zero(2), left_zero(3)])
    failed, cases = [], 0
    for S in fixtures:
        rep = structure.verify_structure_theorem(S)
        cases += rep.cases
        if not rep.passed:
            failed.append(S.name)
    report(6, "structure theorem on zmul-n, min-chain-n, T3, left-zero", not failed,
           time.perf_counter() - t, 60, f"{len(fixtures)} semigroups, {cases} cases {failed}")


def test_7_rebuild_round_trip():
    t = time.perf_counter()
    failed = []
    targets = [min_chain(n) for n in range(1, 7)] + abelian_groups_up_to_8()
    for S in targets:
        _, rep = structure.rebuild_as_ddl(S)
        if not (rep.passed and rep.rebuilt_table.tobytes() == S.table.tobytes()):
            failed.append(S.name)
    refused = 0
    for S in [zmul(4), transformations(3), left_zero(2)]:
        try:
            structure.rebuild_as_ddl(S)
            failed.append(f"{S.name} not refused")
        except NonEmptyTerminal:
            refused += 1
    report(7, "peel + rebuild reproduces Cayley tables byte for byte", not failed,
           time.perf_counter() - t, 10,
           f"{len(targets)} rebuilt, {refused} NonEmptyTerminal refusals {failed}")
