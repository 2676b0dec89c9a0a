import pytest
from hypothesis import given, strategies as st

from conftest import monomials, sl2_dominant
from qcyclic.criteria import (
    CYCLIC,
    INCONCLUSIVE,
    admissible_factorization,
    fundamental_order_ok,
    maincyc_conclude,
    oracle_pairwise,
    pairwise_cyclic_sufficient,
    symbolic_pairwise,
)
from qcyclic.monomial import Monomial, SpectralParam, sp
from qcyclic.notation import parse_monomial as P


def test_order_examples():
    assert fundamental_order_ok([(1, sp(0)), (1, sp(2))])
    assert not fundamental_order_ok([(1, sp(2)), (1, sp(0))])
    assert fundamental_order_ok([(1, SpectralParam("d", 5)), (1, sp(0)), (1, SpectralParam("e", -3))])


def test_order_equal_parameters():
    assert fundamental_order_ok([(1, sp(0)), (1, sp(0))])


def test_admissible_examples():
    assert admissible_factorization(P("Y[1;2]*Y[1;0]")) == [(1, sp(0)), (1, sp(2))]
    assert admissible_factorization(P("Y[1;0]^2")) == [(1, sp(0)), (1, sp(0))]
    assert admissible_factorization(P("Y[1;2]*Y[1;4]^2")) == [(1, sp(2)), (1, sp(4)), (1, sp(4))]
    with pytest.raises(ValueError):
        admissible_factorization(P("Y[1;0]^-1"))


def test_pairwise_examples():
    assert pairwise_cyclic_sufficient(P("Y[1;2]"), P("Y[1;0]"))
    assert not pairwise_cyclic_sufficient(P("Y[1;0]"), P("Y[1;2]"))
    assert not pairwise_cyclic_sufficient(P("Y[1;0]*Y[1;2]"), P("Y[1;2]"))
    assert pairwise_cyclic_sufficient(P("Y[1;0]"), P("d@Y[1;9]"))


def test_maincyc_examples():
    ms = [P("Y[1;4]"), P("Y[1;2]"), P("Y[1;0]")]
    v = maincyc_conclude(ms, lambda i, j: True)
    assert v.status == CYCLIC and len(v.pairs) == 3
    assert maincyc_conclude([P("Y[1;0]")], lambda i, j: False).status == CYCLIC
    v = maincyc_conclude(ms, lambda i, j: (i, j) != (0, 2))
    assert v.status == INCONCLUSIVE
    assert [(p["i"], p["j"]) for p in v.failing()] == [(0, 2)]


def test_maincyc_json_and_oracles():
    ms = [P("Y[1;2]"), P("Y[1;0]")]
    js = maincyc_conclude(ms, symbolic_pairwise(ms)).to_json()
    assert js == {"schema": 1, "status": "Cyclic", "pairs": [{"i": 0, "j": 1, "oracle": "symbolic", "result": True}]}
    assert maincyc_conclude(ms, oracle_pairwise(ms), oracle="sl2").cyclic
    rev = ms[::-1]
    assert not maincyc_conclude(rev, oracle_pairwise(rev), oracle="sl2").cyclic


@given(monomials(orbit="c", dominant=True, lo=-5, hi=5), monomials(orbit="d", dominant=True))
def test_admissible_is_ordered(a, b):
    M = a * b
    fl = admissible_factorization(M)
    assert fundamental_order_ok(fl)
    out = Monomial()
    for i, x in fl:
        out = out * Monomial.Y(i, x)
    assert out == M


@given(st.lists(st.integers(0, 8), min_size=2, max_size=5, unique=True))
def test_order_sensitivity(ls):
    fl = [(1, sp(l)) for l in sorted(ls)]
    assert fundamental_order_ok(fl)
    assert not fundamental_order_ok(fl[::-1])


@given(sl2_dominant(hi=4, max_size=2), sl2_dominant(hi=4, max_size=2))
def test_sufficient_condition_is_sound(a, b):
    if pairwise_cyclic_sufficient(a, b):
        assert oracle_pairwise([a, b])(0, 1)
