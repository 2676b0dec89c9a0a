import pytest

from qcyclic.criteria import pairwise_cyclic_sufficient
from qcyclic.fields import ONE, Frac, w as W, z as Z
from qcyclic.intertwiner import (
    IntertwinerError,
    PoleError,
    check_hexagon,
    check_inverse_relation,
    intertwiner_I,
    intertwines,
    laurent_at_1,
    naive_extension_rank,
    relations_hold_twisted,
    solve_T,
    twist_rep,
    valuation_at_1,
)
from qcyclic.linalg import SMat, inverse, rank
from qcyclic.notation import parse_monomial as P
from qcyclic.sl2 import eval_module, simple_module, trivial_module
from qcyclic.worked import example_suite, carry_composite

V = eval_module


def test_trivial_partner_gives_identity():
    t = solve_T(V(0), trivial_module())
    assert t.matrix == SMat.identity(2)
    assert intertwiner_I(V(2), trivial_module()) == SMat.identity(2)
    assert check_inverse_relation(V(0), trivial_module())


def test_fundamental_pair_normalization():
    t = solve_T(V(2), V(0))
    assert t.dim == 4
    assert t.matrix.cols[0][0] == ONE
    assert intertwines(t, V(2), V(0))


def test_inverse_relation():
    assert check_inverse_relation(V(0), V(2))
    assert check_inverse_relation(V(0), V(4))


@pytest.mark.parametrize("ls", [(0, 2, 4), (0, 0, 2), (6, 2, 0)])
def test_hexagon(ls):
    assert check_hexagon(*(V(l) for l in ls))


def test_hexagon_with_trivial():
    assert check_hexagon(V(0), trivial_module(), V(2))


def test_twist():
    r = simple_module(P("Y[1;0]*Y[1;2]"))
    rz = twist_rep(r)
    assert rz.map_entries(lambda x: x.substitute("z", ONE)).gens() == r.gens()
    assert twist_rep(rz, W).gens() == twist_rep(r, Z * W).gens()
    assert relations_hold_twisted(r)


def test_example_1_ranks():
    t = solve_T(V(2), V(0))
    a = laurent_at_1(t, 0)
    assert a == t.matrix.map_entries(lambda x: x.substitute("z", ONE))
    assert rank(a) == 3
    tinv = inverse(t.matrix)
    assert valuation_at_1(tinv) == -1
    assert rank(laurent_at_1(tinv, -1)) == 1
    with pytest.raises(PoleError):
        laurent_at_1(tinv, 0)


def test_I_kernel_and_image():
    i = intertwiner_I(V(2), V(0))
    assert rank(i) == 3
    assert i.ncols - rank(i) == 1
    assert naive_extension_rank(i) == rank(i)


def test_generic_parameter_gives_isomorphism():
    # V(1) twisted by an independent transcendental w plays a second orbit
    i = intertwiner_I(V(2), V(0).twist(W))
    assert rank(i) == 4


PAIRS = [("Y[1;2]", "Y[1;0]"), ("Y[1;4]", "Y[1;0]"), ("Y[1;2]*Y[1;4]", "Y[1;0]"), ("Y[1;4]", "Y[1;0]*Y[1;2]"), ("Y[1;2]^2", "Y[1;0]")]


@pytest.mark.parametrize("a, b", PAIRS)
def test_I_against_simple(a, b):
    m, m2 = P(a), P(b)
    assert pairwise_cyclic_sufficient(m, m2)
    w, w2 = simple_module(m), simple_module(m2)
    i = intertwiner_I(w, w2)
    assert rank(i) == simple_module(m * m2).dim
    # the reverse order is cyclic only when the product is already simple
    t = solve_T(w2, w)
    simple = rank(i) == i.ncols
    assert (valuation_at_1(t) >= 0) == simple
    if not simple:
        with pytest.raises(PoleError):
            intertwiner_I(w2, w)


def test_unique_solution_required():
    # two copies of the same weight space with no action: the system is degenerate
    zero = SMat.zeros(2)
    from qcyclic.sl2 import Rep

    dull = Rep([0, 0], zero, zero, zero, zero, {0: ONE})
    with pytest.raises(IntertwinerError):
        solve_T(dull, dull)


def test_carry_composite_example_1():
    comp = carry_composite(V(2), [V(0), V(0)], V(0))
    assert comp.ncols == 16
    assert comp.ncols - rank(comp) == 4


def test_example_1_report():
    rep = example_suite(1)
    assert rep["pass"]
    got = {c["name"]: c["got"] for c in rep["checks"]}
    assert got["rk_A"] == 3 and got["rk_Aprime"] == 1


def test_example_2_derived_data():
    rep = example_suite(2)
    got = {c["name"]: c["got"] for c in rep["checks"]}
    assert got["dim V"] == 48
    assert got["dim Ker"] == 16
    # full rank at z = 1 and a pole of the inverse exclude each other
    assert (got["rk_A"] < rep["info"]["A_dim"]) == (got["rk_Aprime"] is not None and got["rk_Aprime"] > 0)


def test_example_3_report():
    rep = example_suite(3)
    assert rep["pass"], rep["checks"]


def test_example_suite_rejects_unknown():
    with pytest.raises(ValueError):
        example_suite(4)
