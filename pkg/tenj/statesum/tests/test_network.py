import numpy as np
import pytest

from tenj.category.pachner import move_shape
from tenj.category.labels import ten_j_index_order
from tenj.errors import IndexMismatch
from tenj.scalar import ZERO, Cyclotomic
from tenj.scalar.linalg import as_matrix
from tenj.simplicial import boundary_simplex, orient_complex
from tenj.statesum.engine import facet_nodes, facet_plan
from tenj.statesum.network import contract, plan_contraction, scalar_of


def vector(*values):
    out = np.empty(len(values), dtype=object)
    for i, v in enumerate(values):
        out[i] = Cyclotomic.from_rational(v)
    return out


def test_closed_complex_eliminates_every_tetrahedron():
    o = orient_complex(boundary_simplex(5))
    plan = facet_plan(o, {tet: 1 for tet, _ in sum(facet_nodes(o), ())})
    assert plan.eliminations == 15
    assert plan.open_slots == ()
    assert len(plan.steps) == 5
    assert plan.max_size == 1


def test_star_of_a_vertex_keeps_its_boundary_open():
    shape = move_shape((1, 5))
    nodes = [
        tuple((tuple(f[i] for i in face), slot) for face, slot in ten_j_index_order(eps))
        for f, eps in shape.added.facets
    ]
    plan = plan_contraction(nodes, {tet: 1 for node in nodes for tet, _ in node})
    assert plan.eliminations == 10
    assert sorted(t for t, _ in plan.open_slots) == sorted(shape.tets)


def test_plan_rejects_same_sign_slots():
    with pytest.raises(IndexMismatch):
        plan_contraction([(("t", 1),), (("t", 1),)], {"t": 1})
    with pytest.raises(IndexMismatch):
        plan_contraction([(("t", 1),), (("t", -1),), (("t", 1),)], {"t": 1})


@pytest.mark.parametrize("first", [1, -1])
def test_pair_contraction(first):
    # u carries the V+ index, v the V- index: sum u[b] C[b, a] v[a]
    u, v = vector(1, 2), vector(3, 5)
    c = as_matrix([[1, 2], [0, 1]])
    nodes = [(("t", 1),), (("t", -1),)]
    tensors = [u, v]
    if first == -1:
        nodes.reverse()
        tensors.reverse()
    plan = plan_contraction(nodes, {"t": 2})
    assert scalar_of(contract(plan, tensors, {"t": c})) == 23


def test_open_axes_follow_output():
    a = np.empty((2, 1), dtype=object)
    a[0, 0], a[1, 0] = Cyclotomic.from_rational(1), Cyclotomic.from_rational(2)
    b = np.empty((1, 3), dtype=object)
    for k in range(3):
        b[0, k] = Cyclotomic.from_rational(k + 1)
    nodes = [(("x", 1), ("t", 1)), (("t", -1), ("y", -1))]
    plan = plan_contraction(nodes, {"x": 2, "t": 1, "y": 3})
    c = as_matrix([[1]])
    assert contract(plan, [a, b], {"t": c}, output=["y", "x"]).shape == (3, 2)
    assert contract(plan, [a, b], {"t": c})[1, 2] == 6


def test_zero_dimensional_space():
    nodes = [(("t", 1), ("s", 1)), (("t", -1), ("s", -1))]
    plan = plan_contraction(nodes, {"t": 0, "s": 1})
    tensors = [np.empty((0, 1), dtype=object), np.empty((0, 1), dtype=object)]
    out = contract(plan, tensors, {})
    assert out.shape == ()
    assert out.reshape(-1)[0] == ZERO
