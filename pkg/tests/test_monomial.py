import pytest
from hypothesis import given, strategies as st

from conftest import monomials, sl2_dominant
from qcyclic.cartan import all_small_types, build_cartan, cartan
from qcyclic.monomial import (
    Monomial,
    SpectralParam,
    a_monomial,
    canonical_param,
    in_C_ell,
    inv,
    mul,
    normalize,
    orbit_factorize,
    plus_minus_split,
    prod,
    sp,
    truncate,
    weight_of,
)
from qcyclic.notation import parse_monomial as P

Y = Monomial.Y
ONE = Monomial()


def test_group_examples():
    assert mul(Y(1, 0), inv(Y(1, 0))) == ONE
    assert mul(Y(1, 0), Y(1, 2)) == P("Y[1;0]*Y[1;2]")
    assert mul(Y(1, 0), ONE) == Y(1, 0)


def test_a_monomial_sl2():
    assert a_monomial(cartan("A1~1"), 1, sp(1)) == Y(1, 0) * Y(1, 2)


def test_a_monomial_a2():
    assert a_monomial(cartan("A2~1"), 1, sp(1)) == P("Y[1;0]*Y[1;2]*Y[2;1]^-1")


def test_a_monomial_a2_twisted():
    assert a_monomial(cartan("A2~2"), 1, sp(1)) == P("Y[1;0]*Y[1;2]*Y[1;1;1]^-1")


def test_a_monomial_non_simply_laced_uses_columns():
    # B3: node 3 is short; A_{2,a} sees Y_{3,.} twice, A_{3,a} sees Y_{2,.} once
    cd = cartan("B3~1")
    a2 = a_monomial(cd, 2, sp(2))
    assert sorted(e for (i, _), e in a2.items() if i == 3) == [-1, -1]
    a3 = a_monomial(cd, 3, sp(2))
    assert [e for (i, _), e in a3.items() if i == 2] == [-1]


def test_twisted_product_needs_divisible_l():
    cd = cartan("A5~2")
    with pytest.raises(ValueError):
        a_monomial(cd, 3, sp(1))
    m = a_monomial(cd, 3, sp(2))
    assert all(a.l % 1 == 0 for _, a in m.keys())


@pytest.mark.parametrize("t", all_small_types(5), ids=lambda t: t.label)
def test_weight_of_a_is_simple_root(t):
    cd = build_cartan(t)
    for i in cd.nodes:
        l = cd.twist_order * 2 if cd.d_of(i) > 1 else 2
        assert weight_of(a_monomial(cd, i, sp(l)), cd) == cd.alpha(i)


def test_weight_of_examples():
    assert weight_of(Y(1, 0), cartan("A1~1")) == (1,)
    assert weight_of(Y(1, 0, -1), cartan("A1~1")) == (-1,)
    assert weight_of(Y(1, 0), cartan("A2~2")) == (2,)


def test_truncate_examples():
    assert truncate(P("Y[1;0]*Y[1;2]"), 1) == (Y(1, 2), Y(1, 0))
    m = P("Y[1;2]*Y[1;5]^-1")
    assert truncate(m, 2) == (m, ONE)
    assert truncate(ONE, 3) == (ONE, ONE)
    with pytest.raises(ValueError):
        truncate(P("Y[1;0]*d@Y[1;2]"), 1)


def test_split_examples():
    assert plus_minus_split(P("Y[1;0]*Y[1;2]")) == (Y(1, 2), Y(1, 0))
    assert plus_minus_split(P("Y[1;2]*Y[1;4]")) == (P("Y[1;2]*Y[1;4]"), ONE)
    assert plus_minus_split(P("Y[1;0]*Y[1;2]*Y[1;4]^2")) == (P("Y[1;2]*Y[1;4]^2"), Y(1, 0))
    with pytest.raises(ValueError):
        plus_minus_split(Y(1, 0, -1))


def test_orbit_factorize_examples():
    m = P("Y[1;0]*Y[1;2]")
    assert orbit_factorize(m) == {"c": m}
    assert orbit_factorize(P("Y[1;0]*d@Y[1;1]")) == {"c": Y(1, 0), "d": P("d@Y[1;1]")}
    assert orbit_factorize(ONE) == {}


def test_in_C_ell():
    assert in_C_ell(P("Y[1;0]*Y[1;2]"), 2)
    assert not in_C_ell(P("Y[1;0]*Y[1;2]"), 1)
    assert in_C_ell(ONE, 0)


def test_canonical_param_twisted():
    cd = cartan("A5~2")
    # node 3 has d = 2: eps^k is invisible in Y_{3, a^2}
    assert canonical_param(cd, 3, sp(0, 1)) == canonical_param(cd, 3, sp(0, 0))
    assert canonical_param(cd, 1, sp(0, 3)) == sp(0, 1)
    assert normalize(P("Y[1;0;2]"), cd) == P("Y[1;0]")


@given(monomials(nodes=(1, 2)), monomials(nodes=(1, 2)), monomials(nodes=(1, 2)))
def test_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * ONE == a
    assert a * a.inv() == ONE
    assert prod([a, b, c]) == a * b * c


@given(monomials(orbit="c"), monomials(orbit="c"), st.integers(-4, 8))
def test_truncate_homomorphism(a, b, L):
    ha, la = truncate(a, L)
    hb, lb = truncate(b, L)
    assert truncate(a * b, L) == (ha * hb, la * lb)
    assert ha * la == a


@given(sl2_dominant(lo=-4, hi=6))
def test_split_round_trip(M):
    p, m = plus_minus_split(M)
    assert p * m == M
    assert all(a.l >= 1 for _, a in p.keys())
    assert all(a.l <= 0 for _, a in m.keys())


@given(monomials(dominant=True))
def test_orbit_factorize_round_trip(M):
    parts = orbit_factorize(M)
    assert prod(parts.values()) == M
    assert all(len(v.orbits()) == 1 for v in parts.values())


@given(st.integers(-5, 5), st.integers(0, 5))
def test_shift_routes_agree(l, k):
    a = SpectralParam("c", l, k).shift(2, 3, twist=2)
    b = SpectralParam("c", l + 2, (k + 1) % 2)
    assert a == b
