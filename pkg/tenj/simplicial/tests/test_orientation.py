import pytest

from tenj.errors import IndexOutOfRange, NonOrientable, NotAFace
from tenj.fixtures import fixture_path
from tenj.simplicial import (
    OrderedOrientedComplex,
    boundary_simplex,
    build_complex,
    disjoint_union,
    face,
    orient,
    orient_complex,
    relative_sign,
    reorder,
)
from tenj.simplicial.io import load_oriented
from tenj.utils.rng import make_rng

RP2 = [(1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
       (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6)]


@pytest.fixture
def delta5():
    return orient_complex(boundary_simplex(5))


def assert_faces_cancel(o):
    for tet in o.complex.k(3):
        sigma1, sigma2 = o.complex.star(tet)
        assert relative_sign(o, sigma1, tet) == -relative_sign(o, sigma2, tet)


def test_orient_boundary_delta5(delta5):
    for i in range(6):
        facet = frozenset(range(6)) - {i}
        assert delta5.sign(facet) == (-1) ** i
    assert_faces_cancel(delta5)


def test_orient_disjoint_union_roots_each_component(delta5):
    both = disjoint_union(delta5, delta5)
    signs = orient(both.complex, both.order)
    assert signs[frozenset(f"a.{v}" for v in range(1, 6))] == 1
    assert signs[frozenset(f"b.{v}" for v in range(1, 6))] == 1


def test_orient_ignores_facet_input_order():
    facets = [tuple(reversed(sorted(frozenset(range(6)) - {i}))) for i in range(6)]
    c = build_complex(facets, vertices=range(6))
    assert orient(c) == orient(boundary_simplex(5))


def test_orient_non_orientable():
    c = build_complex(RP2, dim=2)
    with pytest.raises(NonOrientable):
        orient(c)


@pytest.mark.parametrize("name", ["cp2_kuhnel9.json", "s1xs3_staircase.json"])
def test_orient_fixtures(name):
    assert_faces_cancel(load_oriented(fixture_path(name)))


def test_face():
    o = orient_complex(build_complex([(2, 5, 7, 9, 11)]), validate=False)
    assert face(o, {2, 5, 7, 9, 11}, [0, 2, 4]) == (2, 7, 11)
    assert face(o, {2, 5, 7, 9, 11}, range(5)) == (2, 5, 7, 9, 11)
    assert face(o, {5, 9}, [1]) == (9,)
    with pytest.raises(IndexOutOfRange):
        face(o, {5, 9}, [2])
    with pytest.raises(IndexOutOfRange):
        face(o, {5, 9}, [1, 0])


def test_relative_sign(delta5):
    sigma = frozenset({1, 2, 3, 4, 5})  # sign +1
    assert relative_sign(delta5, sigma, sigma - {1}) == 1
    assert relative_sign(delta5, sigma, sigma - {4}) == -1
    negative = frozenset({0, 2, 3, 4, 5})  # sign -1
    assert relative_sign(delta5, negative, negative - {3}) == -1
    with pytest.raises(NotAFace):
        relative_sign(delta5, sigma, {1, 2, 3})


def test_reorder_keeps_cancellation(delta5):
    rng = make_rng(5)
    for _ in range(5):
        order = [int(v) for v in rng.permutation(6)]
        moved = reorder(delta5, order)
        assert_faces_cancel(moved)
        # transporting back restores the original signs
        assert reorder(moved, delta5.order).facet_sign == delta5.facet_sign


def test_from_complex_matches_orient_complex(delta5):
    o = OrderedOrientedComplex.from_complex(boundary_simplex(5), order=range(6))
    assert o.same_as(delta5)
