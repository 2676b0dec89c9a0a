import pytest
from hypothesis import given, strategies as st

from conftest import sl2_dominant
from qcyclic.cartan import cartan
from qcyclic.monomial import Monomial, sp, weight_of
from qcyclic.notation import parse_monomial as P
from qcyclic.qchar import (
    SL2,
    CompletionError,
    QCharacter,
    a_factorization,
    fm_fundamental,
    highest_monomial,
    sl2_simple_qchar,
    string_decompose,
    truncate_upper,
    useqt_sides,
    verify_useqt,
)

FUND = QCharacter({P("Y[1;0]"): 1, P("Y[1;2]^-1"): 1})


def test_fundamental_sl2():
    assert fm_fundamental(SL2, 1, sp(0)) == FUND
    assert str(FUND) == "Y[1;0] + Y[1;2]^-1"


def test_fundamental_shift_equivariance():
    for s in (-3, 1, 4):
        assert fm_fundamental(SL2, 1, sp(s)) == FUND.shift(s)


def test_fundamental_a2():
    chi = fm_fundamental(cartan("A2~1"), 1, sp(0))
    assert chi == QCharacter({P("Y[1;0]"): 1, P("Y[1;2]^-1*Y[2;1]"): 1, P("Y[2;3]^-1"): 1})


# fundamental dimensions of the quantum affine algebras (Kirillov-Reshetikhin modules W^{(i)}_1)
FM_DIMS = {
    "A3~1": [4, 6, 4],
    "C2~1": [4, 5],
    "C3~1": [6, 14, 14],
    "B3~1": [7, 22, 8],
    "D4~1": [8, 29, 8, 8],
    "G2~1": [15, 7],
}


@pytest.mark.parametrize("label", sorted(FM_DIMS))
def test_fundamental_dimensions(label):
    cd = cartan(label)
    dims = [fm_fundamental(cd, i, sp(0)).dimension() for i in cd.nodes]
    assert dims == FM_DIMS[label]


def test_fundamental_e6_minuscule():
    cd = cartan("E6~1")
    assert fm_fundamental(cd, 1, sp(0)).dimension() == 27
    assert fm_fundamental(cd, 6, sp(0)).dimension() == 27


@pytest.mark.parametrize("label", ["A3~1", "C2~1", "B3~1", "G2~1"])
def test_fundamental_structure(label):
    cd = cartan(label)
    for i in cd.nodes:
        top = Monomial.Y(i, sp(0))
        chi = fm_fundamental(cd, i, sp(0))
        assert highest_monomial(chi, cd) == top
        for m, c in chi:
            assert c > 0
            if m != top:
                assert not m.is_dominant()
                assert a_factorization(top / m, cd) is not None


def test_fm_rejects_twisted():
    with pytest.raises(CompletionError):
        fm_fundamental(cartan("A2~2"), 1, sp(0))


def test_ring_examples():
    assert FUND * QCharacter.one() == FUND
    sq = FUND * FUND
    assert sq.dimension() == 4
    assert len(sq) == 3  # the cross term appears with multiplicity 2


def test_highest_monomial():
    assert highest_monomial(FUND, SL2) == P("Y[1;0]")
    assert highest_monomial(QCharacter.of(P("Y[1;5]")), SL2) == P("Y[1;5]")
    with pytest.raises(ValueError):
        highest_monomial(QCharacter({P("Y[1;0]"): 1, P("Y[1;4]"): 1}), SL2)


def test_string_decompose_examples():
    assert string_decompose(P("Y[1;0]*Y[1;2]")) == [(sp(0), 2)]
    assert string_decompose(P("Y[1;0]*Y[1;4]")) == [(sp(0), 1), (sp(4), 1)]
    assert string_decompose(P("Y[1;0]*Y[1;2]*Y[1;4]^2")) == [(sp(0), 3), (sp(4), 1)]


def test_sl2_simple_examples():
    assert sl2_simple_qchar(P("Y[1;0]")) == FUND
    assert sl2_simple_qchar(P("Y[1;0]*Y[1;2]")) == QCharacter(
        {P("Y[1;0]*Y[1;2]"): 1, P("Y[1;0]*Y[1;4]^-1"): 1, P("Y[1;2]^-1*Y[1;4]^-1"): 1}
    )
    assert sl2_simple_qchar(Monomial()) == QCharacter.one()


def test_truncate_upper_examples():
    M = P("Y[1;0]*Y[1;2]")
    chi = sl2_simple_qchar(M)
    assert truncate_upper(chi, M, 1) == QCharacter({P("Y[1;0]*Y[1;2]"): 1, P("Y[1;0]*Y[1;4]^-1"): 1})
    assert truncate_upper(chi, M, -1) == chi
    assert truncate_upper(QCharacter.of(M), M, 3) == QCharacter.of(M)


def test_useqt_examples():
    M = P("Y[1;0]*Y[1;2]")
    lhs, rhs = useqt_sides(M, 1)
    assert lhs == rhs == QCharacter({P("Y[1;2]"): 1, P("Y[1;4]^-1"): 1}) * P("Y[1;0]")
    assert verify_useqt(M, 0)
    assert verify_useqt(P("Y[1;0]*Y[1;2]*Y[1;4]^2"), 1)


@given(sl2_dominant(), sl2_dominant())
def test_dimension_multiplicative(a, b):
    x, y = sl2_simple_qchar(a), sl2_simple_qchar(b)
    assert (x * y).dimension() == x.dimension() * y.dimension()


@given(sl2_dominant(max_size=4))
def test_sl2_characters_in_a_lattice(M):
    chi = sl2_simple_qchar(M)
    assert highest_monomial(chi, SL2) == M
    dim = 1
    for _, k in string_decompose(M):
        dim *= k + 1
    assert chi.dimension() == dim
    for m, _ in chi:
        f = a_factorization(M / m, SL2)
        assert f is not None and all(e > 0 for e in f.values())


@given(sl2_dominant(lo=0, hi=4), st.integers(0, 5))
def test_useqt_property(M, L):
    assert verify_useqt(M, L)


def test_weights_below_top():
    chi = fm_fundamental(cartan("C3~1"), 2, sp(0))
    top = highest_monomial(chi, cartan("C3~1"))
    tw = weight_of(top, cartan("C3~1"))
    assert sum(1 for m, _ in chi if weight_of(m, cartan("C3~1")) == tw) == 1
