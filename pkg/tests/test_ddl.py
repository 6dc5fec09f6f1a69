import itertools

import pytest

from fdsemi import ddl
from fdsemi.ddl import (VERIFIED, VERIFIED_TO_BOUND, VIOLATED, DDLElement, brute_decompositions,
                        chain, ddl_decompose, ddl_mul, fd_criterion_check, fig1_system,
                        finite_system, load_ddl, parse_ddl, validate_system)
from fdsemi.errors import DDLError, NotInCarrier
from fdsemi.semigroup import zadd, zmul

E = DDLElement


def fig1_oracle_count(k, y):
    # pairs (k1|y1), (k2|y2) with min(k1, k2) = k, y1 + y2 = y and k_i <= y_i
    n = 0
    for y1 in range(y + 1):
        y2 = y - y1
        for k1, k2 in itertools.product(range(y1 + 1), range(y2 + 1)):
            n += min(k1, k2) == k
    return n


def test_fig1_products():
    S = fig1_system()
    assert ddl_mul(S, E(1, 3), E(2, 4)) == E(1, 7)
    assert ddl_mul(S, E(0, 2), E(3, 5)) == E(0, 7)
    assert S.phi(1, 2, 3) == 3
    assert ddl_mul(S, E(2, 2), E(2, 3)) == E(2, 5)


def test_fig1_zero_is_neutral_on_top_label():
    # label 0 is the top of the reversed order, so (0|0) only fixes label-0 elements
    S = fig1_system()
    for x in [E(0, 0), E(0, 5)]:
        assert ddl_mul(S, E(0, 0), x) == x
    assert ddl_mul(S, E(0, 0), E(2, 3)) == E(0, 3)


def test_fig1_rejects_outside_carrier():
    S = fig1_system()
    with pytest.raises(NotInCarrier):
        ddl_mul(S, E(3, 1), E(0, 0))


@pytest.mark.parametrize("k, y", [(0, 4), (0, 0), (1, 5), (2, 6), (3, 3)])
def test_fig1_decompositions_match_oracle(k, y):
    S = fig1_system()
    bound = y + 1
    fast = ddl_decompose(S, E(k, y), bound)
    brute = brute_decompositions(S, E(k, y), bound)
    assert sorted(map(str, fast)) == sorted(map(str, brute))
    assert len(fast) == fig1_oracle_count(k, y)


def test_fig1_zero_four_count():
    assert fig1_oracle_count(0, 4) == 25
    assert len(ddl_decompose(fig1_system(), E(0, 4), 8)) == 25


def test_validate_fig1():
    rep = validate_system(fig1_system(), 10)
    assert rep.passed, rep


def test_criterion_fig1():
    crit = fd_criterion_check(fig1_system(), 12)
    assert crit.passed
    assert crit.verdicts == {"i": VERIFIED_TO_BOUND, "ii": VERIFIED_TO_BOUND,
                             "iii": VERIFIED_TO_BOUND}


@pytest.mark.parametrize("make, cond", [(ddl.defect_interval_system, "i"),
                                        (ddl.defect_component_system, "ii"),
                                        (ddl.defect_fiber_system, "iii")])
def test_defects_detected_with_growing_witness(make, cond):
    bound = 8
    crit = fd_criterion_check(make(), bound)
    assert not crit.passed
    assert crit.verdicts[cond] == VIOLATED
    assert cond in crit.witnesses
    triples = crit.decompositions[cond]
    targets = {z for _, _, z in triples}
    assert len(targets) == 1
    (z,) = targets
    S = make()
    pairs = {(a, b) for a, b, _ in triples}
    assert len(pairs) >= bound
    for a, b in pairs:
        assert ddl_mul(S, a, b) == z


def test_finite_chain_of_groups_verified_exhaustively():
    idx = chain(2)
    comps = {0: zadd(4), 1: zadd(2)}
    tables = {(1, 0): {x: x % 2 for x in range(4)}}
    sys = finite_system("z4-to-z2", idx, comps, tables)
    assert validate_system(sys, 5).passed
    crit = fd_criterion_check(sys, 5)
    assert crit.verdicts == {"i": VERIFIED, "ii": VERIFIED, "iii": VERIFIED}


def test_non_morphic_transition_fails_with_witness():
    comps = {0: zadd(2), 1: zadd(2)}
    sys = finite_system("swap", chain(2), comps, {(1, 0): {0: 1, 1: 0}})
    rep = validate_system(sys, 4)
    assert not rep.passed
    assert any("not a morphism" in f for f in rep.failures)


def test_single_component_system():
    sys = finite_system("one", chain(1), {0: zmul(5)}, {})
    assert validate_system(sys, 4).passed


def test_finite_system_requires_tables():
    with pytest.raises(DDLError):
        finite_system("gap", chain(2), {0: zadd(2), 1: zadd(2)}, {})


def test_ddl_file_roundtrip(fixtures):
    sys = load_ddl(fixtures / "good" / "chain2.ddl")
    x, y = sys.parse("(lo|1)"), sys.parse("(hi|0)")
    assert ddl_mul(sys, x, y) == E("hi", 0)
    assert ddl_mul(sys, x, x) == E("lo", 0)
    assert validate_system(sys, 4).passed
    assert fd_criterion_check(sys, 4).passed


@pytest.mark.parametrize("text", [
    "",
    "component a nat-plus",
    "component a zadd-2\nfrobnicate",
    "component a zadd-2\ncomponent b zadd-2\nleq a b\nmorphism b a 0->7",
])
def test_ddl_file_errors(text):
    with pytest.raises(DDLError):
        parse_ddl(text)


def test_ddl_parse_errors():
    S = fig1_system()
    with pytest.raises(ValueError):
        S.parse("1|3")
    assert S.parse("(1|3)") == E(1, 3)
    assert str(E(1, 3)) == "(1|3)"
