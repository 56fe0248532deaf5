import pytest

from tenj.category.groups import group_preset
from tenj.fixtures import fixture_path
from tenj.scalar import Cyclotomic
from tenj.simplicial import boundary_simplex, disjoint_union, orient_complex
from tenj.simplicial.io import load_oriented
from tenj.statesum.oracle import components, flat_connection_count, untwisted_dw_value


@pytest.fixture(scope="module")
def delta5():
    return orient_complex(boundary_simplex(5))


@pytest.mark.parametrize(
    "name, group, count",
    [
        ("boundary_delta5.json", "Z2", 1),
        ("boundary_delta5.json", "S3", 1),
        ("cp2_kuhnel9.json", "Z3", 1),
        ("s1xs3_staircase.json", "Z2", 2),
        ("s1xs3_staircase.json", "Z3", 3),
        ("s1xs3_staircase.json", "S3", 6),
    ],
)
def test_flat_connections(name, group, count):
    assert flat_connection_count(load_oriented(fixture_path(name)), group_preset(group)) == count


def test_components(delta5):
    assert components(delta5) == 1
    assert components(disjoint_union(delta5, delta5)) == 2


def test_values(delta5):
    assert untwisted_dw_value(delta5, group_preset("Z2")) == Cyclotomic.from_rational("1/2")
    two = disjoint_union(delta5, delta5)
    assert untwisted_dw_value(two, group_preset("Z3")) == Cyclotomic.from_rational("1/9")
    s1xs3 = load_oriented(fixture_path("s1xs3_staircase.json"))
    assert untwisted_dw_value(s1xs3, group_preset("Z2")) == 1
