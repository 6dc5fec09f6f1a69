import pytest

from fdsemi.errors import CapabilityMissing, NonEmptyTerminal
from fdsemi.semigroup import (builtin, direct_product, left_zero, load_table, min_chain,
                              transformations, zadd, zmul)
from fdsemi.structure import (layer_morphism, peel, projection, rebuild_as_ddl,
                              rebuilt_cayley_text, verify_structure_theorem)

from oracles_local import table_units


def test_peel_zmul4():
    r = peel(zmul(4))
    assert [(g.index, g.neutral, g.group) for g in r.layers] == [(0, 1, {1, 3})]
    assert r.terminal == {0, 2}
    assert r.layer_of(2) is None and r.layer_of(3) == 0


def test_peel_min_chain():
    r = peel(min_chain(3))
    assert [(g.index, g.neutral, set(g.group)) for g in r.layers] == [
        (0, 2, {2}), (1, 1, {1}), (2, 0, {0})]
    assert r.terminal == frozenset()
    assert r.D == [0, 1, 2]


def test_peel_nat_monoid_uses_oracles():
    r = peel(builtin("nat-monoid"))
    assert [(g.neutral, g.group) for g in r.layers] == [(0, {0})]
    assert r.terminal.name == "nat-plus" and r.terminal.neutral is None


def test_peel_needs_oracles_for_infinite_monoids():
    with pytest.raises(CapabilityMissing):
        peel(builtin("mon-laurent"))


def test_peel_mon():
    r = peel(builtin("mon"))
    assert [len(g.group) for g in r.layers] == [1]
    assert r.terminal.name == "mon-plus"


def test_peel_t3():
    T = transformations(3)
    r = peel(T)
    assert len(r.layers) == 1
    assert r.layers[0].neutral == "012"
    assert r.layers[0].group == table_units(T.elements, T.mul, "012")
    assert len(r.layers[0].group) == 6 and len(r.terminal) == 21


def test_peel_left_zero():
    r = peel(left_zero(2))
    assert r.layers == [] and r.terminal == frozenset(left_zero(2).elements)


def test_projection_examples():
    C = min_chain(3)
    r = peel(C)
    assert projection(C, r, 2, 2) == 0
    for g in r.layers:
        for x in g.group:
            assert projection(C, r, g.index, x) == x
    assert layer_morphism(C, r, 2, 0, 2) == 0
    with pytest.raises(ValueError):
        layer_morphism(C, r, 0, 2, 0)


@pytest.mark.parametrize("S", [zmul(n) for n in (1, 4, 8, 12)]
                         + [min_chain(n) for n in (1, 4, 6)]
                         + [transformations(2), transformations(3), left_zero(3)],
                         ids=lambda S: S.name)
def test_verify_structure_theorem(S):
    rep = verify_structure_theorem(S)
    assert rep.passed, rep
    assert rep.cases > 0


def test_verify_structure_theorem_on_loaded_table(fixtures):
    S = load_table(fixtures / "good" / "z3mul.table")
    assert verify_structure_theorem(S).passed


@pytest.mark.parametrize("S", [min_chain(n) for n in range(1, 7)]
                         + [zadd(5), direct_product(zadd(2), zadd(2))]
                         + [zmul(3), zmul(5)],
                         ids=lambda S: S.name)
def test_rebuild_roundtrip(S):
    system, rep = rebuild_as_ddl(S)
    assert rep.passed, rep
    assert rep.rebuilt_table.tobytes() == S.table.tobytes()
    assert rebuilt_cayley_text(S, system) == S.cayley_text()


def test_group_rebuilds_as_single_layer():
    system, rep = rebuild_as_ddl(zadd(6))
    assert rep.passed and system.index.labels == [0]


@pytest.mark.parametrize("S", [zmul(4), transformations(3), left_zero(2)], ids=lambda S: S.name)
def test_rebuild_refuses_nonempty_terminal(S):
    with pytest.raises(NonEmptyTerminal, match="terminal"):
        rebuild_as_ddl(S)
