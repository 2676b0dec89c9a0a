import pytest
from hypothesis import given, strategies as st

from conftest import sl2_dominant
from qcyclic.fields import ONE, z
from qcyclic.linalg import SMat
from qcyclic.monomial import Monomial
from qcyclic.notation import parse_monomial as P
from qcyclic.qchar import sl2_simple_qchar
from qcyclic.sl2 import (
    Rep,
    calibration_table,
    cyclic_span,
    eval_module,
    is_cyclic,
    is_cyclic_product,
    is_simple_tensor,
    relation_failures,
    simple_module,
    tensor,
    tensor_all,
    tensor_mod,
    trivial_module,
    verify_relations,
    weight_character,
)

V = eval_module


def test_eval_module_basics():
    v = V(0)
    assert v.dim == 2
    assert sorted(v.weights) == [-1, 1]
    assert weight_character(sl2_simple_qchar(P("Y[1;0]"))) == v.weight_multiset()
    assert verify_relations(v)


def test_perturbed_module_fails():
    v = V(0)
    bumped = v.x1p.map_entries(lambda x: x)
    bumped.cols[1][0] = ONE + ONE
    broken = Rep(v.weights, v.x0p, v.x0m, bumped, v.x1m, v.hw)
    assert not verify_relations(broken)
    assert relation_failures(broken)


def test_tensor_relations_and_shape():
    t = tensor(V(0), V(4))
    assert t.dim == 4
    assert verify_relations(t)
    assert t.x1p.apply(t.hw) == {}


def test_calibration():
    assert V(0).x0p != V(2).x0p
    table = calibration_table()
    assert table[(1, 0)] == (True, False)
    # the opposite orientation reverses which order is cyclic
    assert all(v == (False, True) for (s, _), v in table.items() if s == -1)


def test_cyclic_span_examples():
    assert cyclic_span(tensor(V(2), V(0)), {}) == 0
    assert cyclic_span(tensor(V(2), V(0))) == 4
    assert cyclic_span(tensor(V(0), V(2))) == 3
    assert is_cyclic(tensor(V(2), V(0)))
    assert not is_cyclic(tensor(V(0), V(2)))


@pytest.mark.parametrize("text, dim", [("Y[1;0]", 2), ("Y[1;0]*Y[1;2]", 3), ("Y[1;2]*Y[1;4]^2", 6), ("Y[1;0]*Y[1;2]*Y[1;4]", 4)])
def test_simple_dims(text, dim):
    r = simple_module(P(text))
    assert r.dim == dim
    assert verify_relations(r)


def test_simple_tensor():
    assert is_simple_tensor(V(0), V(4))
    assert not is_simple_tensor(V(0), V(2))
    assert is_simple_tensor(trivial_module(), simple_module(P("Y[1;0]*Y[1;2]")))


def test_twisted_module_relations():
    r = simple_module(P("Y[1;0]*Y[1;2]"))
    assert verify_relations(r.twist(z))
    assert verify_relations(tensor(r, V(2).twist(z)))


def test_product_oracle_matches_exact():
    reps = [V(0), V(2), V(6)]
    assert is_cyclic_product(reps) == is_cyclic(tensor_all(reps))
    reps = [V(4), V(2), V(0)]
    assert is_cyclic_product(reps) == is_cyclic(tensor_all(reps)) is True


@given(sl2_dominant(hi=6, max_size=3))
def test_weight_character_consistency(M):
    r = simple_module(M)
    assert r.weight_multiset() == weight_character(sl2_simple_qchar(M))
    assert r.x1p.apply(r.hw) == {}
    assert max(r.weights) == r.weights[r.hw_index()]


@given(st.integers(0, 6), st.integers(0, 6))
def test_tensor_mod_agrees(a, b):
    x, y = simple_module(Monomial.Y(1, a)), simple_module(P(f"Y[1;{b}]*Y[1;{b + 2}]"))
    m1 = tensor_mod(x.mod(), y.mod())
    m2 = tensor(x, y).mod()
    assert m1.gens == m2.gens
    assert m1.hw == m2.hw


@given(st.lists(st.integers(0, 8), min_size=1, max_size=4))
def test_ordered_fundamentals_are_cyclic(ls):
    # position 1 is the rightmost factor: leftmost factor carries the largest l
    assert is_cyclic_product([V(l) for l in sorted(ls, reverse=True)])
