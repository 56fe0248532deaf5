import pytest

from tenj.category.generators import gen_twisted_dw, pointed_preset
from tenj.simplicial import boundary_simplex, disjoint_union, orient_complex, reorder
from tenj.statesum.states import (
    count_states,
    enumerate_states,
    search_order,
    skeleton,
    spanning_forest,
)
from tenj.utils.rng import make_rng


@pytest.fixture
def delta5():
    return orient_complex(boundary_simplex(5))


def test_skeleton(delta5):
    sk = skeleton(delta5)
    assert (len(sk.vertices), len(sk.edges), len(sk.triangles), len(sk.tets), len(sk.facets)) == (
        6,
        15,
        20,
        15,
        6,
    )
    assert sk.edges[0] == (0, 1)
    assert sk.tets[-1] == (2, 3, 4, 5)


def test_skeleton_follows_vertex_order(delta5):
    o = reorder(delta5, (5, 4, 3, 2, 1, 0))
    sk = skeleton(o)
    assert sk.edges[0] == (5, 4)
    assert all(o.rank[e[0]] < o.rank[e[1]] for e in sk.edges)


def test_spanning_forest(delta5):
    assert spanning_forest(delta5) == ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5))
    two = disjoint_union(delta5, delta5)
    assert len(spanning_forest(two)) == 10


def test_search_order(delta5):
    order = search_order(delta5)
    assert order.edges[:5] == order.tree
    assert sorted(order.edges) == sorted(skeleton(delta5).edges)
    assert len(order.triangles) == 20
    assert order.depth == 35
    fixed = search_order(delta5, fixed_edges=order.tree)
    assert len(fixed.edges) == 10
    assert not set(fixed.edges) & set(order.tree)


def test_flat_states(delta5):
    cat = gen_twisted_dw("Z2")
    # flat Z2 connections on the 1-skeleton of the 5-simplex
    assert count_states(delta5, cat) == 2**5
    assert count_states(delta5, cat, nonzero_only=True) == 2**5
    states = list(enumerate_states(delta5, cat))
    assert len({tuple(sorted(s.edges.items())) for s in states}) == 2**5


def test_known_labels(delta5):
    cat = gen_twisted_dw("Z3")
    tree = {e: "0" for e in spanning_forest(delta5)}
    states = list(enumerate_states(delta5, cat, known_edges=tree))
    assert len(states) == 1
    assert set(states[0].edges.values()) == {"0"}


def test_nonzero_states(delta5):
    cat = pointed_preset("semion")
    # closed Z2 2-cochains on the 2-skeleton of the 5-simplex
    assert count_states(delta5, cat, nonzero_only=True) == 2**10


def test_seeded_order_gives_same_states(delta5):
    cat = gen_twisted_dw("Z2")
    plain = {tuple(sorted(s.edges.items())) for s in enumerate_states(delta5, cat)}
    shuffled = [tuple(sorted(s.edges.items())) for s in enumerate_states(delta5, cat, rng=make_rng(4))]
    assert len(shuffled) == len(plain)
    assert set(shuffled) == plain
