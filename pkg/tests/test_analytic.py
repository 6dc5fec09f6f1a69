import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy import special

from fdsemi.analytic import (chen_check, composition_to_word, li, li_integral, li_log_power,
                             stuffle_check, word_to_composition, zeta)
from fdsemi.elements import Composition, Word
from fdsemi.errors import DivergentError


def test_word_composition_correspondence():
    assert word_to_composition("x0 x1") == Composition([2])
    assert word_to_composition("x1") == Composition([1])
    assert word_to_composition("x0 x1 x1") == Composition([2, 1])
    with pytest.raises(DivergentError):
        word_to_composition("x1 x0")


@given(st.lists(st.integers(1, 5), min_size=1, max_size=5))
def test_correspondence_roundtrip(parts):
    s = Composition(parts)
    assert word_to_composition(composition_to_word(s)) == s


def test_li_depth_one_oracles():
    # Li_1(z) = -ln(1 - z); Li_2(1/2) = pi^2/12 - ln(2)^2/2
    assert abs(li("x1", 0.5, 60).value - math.log(2)) < 1e-12
    li2 = math.pi ** 2 / 12 - math.log(2) ** 2 / 2
    assert abs(li("x0 x1", 0.5, 60).value - li2) < 1e-12
    assert abs(li2 - 0.5822405) < 1e-7
    assert li(Word(), 0.5, 10).value == 1.0


def test_li_rejects_bad_words():
    with pytest.raises(DivergentError):
        li("x1 x0", 0.5, 100)
    with pytest.raises(ValueError):
        li("x1", 1.5, 100)


@pytest.mark.parametrize("z", [0.25, 0.5, 0.75])
def test_li_tail_bound_is_rigorous(z):
    for w in ["x1", "x1 x1", "x0 x1 x1", "x1 x0 x1 x1"]:
        coarse, fine = li(w, z, 30), li(w, z, 4000)
        assert coarse.value <= fine.value + 1e-15
        assert fine.value - coarse.value <= coarse.error + 1e-15


def test_li_log_power():
    assert li_log_power(0, 0.5) == 1
    assert abs(li_log_power(1, 0.5) + 0.6931472) < 1e-7
    assert abs(li_log_power(2, 0.5) - 0.2402265) < 1e-7


@pytest.mark.parametrize("w", ["x1", "x0 x1", "x1 x1", "x0 x1 x1", "x1 x0 x1"])
@pytest.mark.parametrize("z", [0.25, 0.5, 0.75])
def test_series_agrees_with_quadrature(w, z):
    series = li(w, z, 3000)
    quad = li_integral(w, z)
    assert abs(series.value - quad.value) < 1e-9 + series.error + quad.error


def test_chen_examples():
    rep = chen_check("x1", "x1")
    assert rep.passed
    assert abs(rep.lhs - math.log(2) ** 2) < 1e-12
    assert abs(rep.lhs - 0.4804530) < 1e-7
    assert chen_check("x1", "x0 x1", tol=1e-8).passed


def test_chen_detects_a_wrong_product():
    # Li_x1^2 against Li_{x1 x1} alone misses a factor 2
    rep = chen_check("x1", "x1")
    assert abs(rep.lhs - li("x1 x1", 0.5, 2000).value) > 0.1


def test_zeta_two():
    est = zeta("2", 100_000)
    assert abs(est.value - math.pi ** 2 / 6) < 1e-4
    assert est.value <= math.pi ** 2 / 6 <= est.value + est.error


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_zeta_depth_one_against_scipy(s):
    est = zeta(str(s), 5000)
    assert est.value <= special.zeta(s) <= est.value + est.error


def test_zeta_two_two_closed_form():
    # zeta(2,2) = (zeta(2)^2 - zeta(4)) / 2 = pi^4 / 120
    est = zeta("2,2", 20_000)
    assert est.value <= math.pi ** 4 / 120 <= est.value + est.error


def test_zeta_divergent():
    with pytest.raises(DivergentError):
        zeta("1,2", 100)


def test_stuffle_examples():
    rep = stuffle_check("2", "2", 10_000, 1e-3)
    assert rep.passed
    assert abs(rep.lhs - math.pi ** 4 / 36) < 1e-3
    assert abs(rep.rhs - math.pi ** 4 / 36) < 1e-3
    assert stuffle_check("3", "2").passed


@settings(max_examples=10, deadline=None)
@given(st.integers(2, 4), st.integers(2, 4))
def test_stuffle_depth_one(a, b):
    assert stuffle_check(str(a), str(b), 5000, 1e-3).passed
