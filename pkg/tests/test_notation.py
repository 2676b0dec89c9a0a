import random

import pytest

from qcyclic.monomial import Monomial, SpectralParam, sp
from qcyclic.notation import MonomialSyntaxError, format_monomial, format_qchar, parse_monomial, parse_qchar
from qcyclic.qchar import sl2_simple_qchar


def test_basic_parse():
    assert parse_monomial("Y[1;0]*Y[1;2]") == Monomial({(1, sp(0)): 1, (1, sp(2)): 1})
    assert parse_monomial("1") == Monomial()
    assert parse_monomial("Y[1;0]^-1") == Monomial.Y(1, 0, -1)


def test_explicit_k_and_orbit():
    m = parse_monomial("d@Y[2;-3;1]^2")
    assert m == Monomial({(2, SpectralParam("d", -3, 1)): 2})
    assert parse_monomial("Y[1;0;0]*Y[1;2;0]^2") == parse_monomial("Y[1;0]*Y[1;2]^2")


@pytest.mark.parametrize("bad", ["", "Y[1;0", "Y[1;0]^0", "Y[1;0]*", "Y[;0]", "X[1;0]", "Y[1;0]Y[1;2]"])
def test_syntax_errors(bad):
    with pytest.raises(MonomialSyntaxError):
        parse_monomial(bad)


def test_error_carries_position():
    with pytest.raises(MonomialSyntaxError) as info:
        parse_monomial("Y[1;0]*Q")
    assert info.value.pos == 7


def test_canonical_print_order():
    assert format_monomial(parse_monomial("Y[1;4]*Y[2;0]*Y[1;0]")) == "Y[1;0]*Y[1;4]*Y[2;0]"


def test_round_trip_1000():
    rng = random.Random(1234)
    for _ in range(1000):
        exps = {}
        for _ in range(rng.randint(0, 5)):
            key = (rng.randint(1, 4), SpectralParam(rng.choice("cde"), rng.randint(-9, 9), rng.randint(0, 2)))
            exps[key] = rng.choice([-3, -2, -1, 1, 2, 3])
        m = Monomial(exps)
        assert parse_monomial(format_monomial(m)) == m


def test_qchar_text_round_trip():
    chi = sl2_simple_qchar(parse_monomial("Y[1;0]*Y[1;2]*Y[1;4]^2"))
    terms = parse_qchar(str(chi))
    assert dict(terms) == chi.terms
    assert format_qchar([(parse_monomial("Y[1;0]"), 3), (parse_monomial("Y[1;2]^-1"), -1)]) == "3*Y[1;0] - Y[1;2]^-1"
