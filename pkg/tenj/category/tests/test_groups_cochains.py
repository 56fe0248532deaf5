import pytest

from tenj.category.cochains import (
    CochainTable,
    coboundary,
    is_normalized,
    parse_cochain,
    random_cochain,
    trivial_cochain,
    validate_cocycle,
)
from tenj.category.groups import (
    cyclic_decomposition,
    group_preset,
    parse_group,
    trivial_group,
    validate_group,
)
from tenj.errors import ParseError, ValidationError
from tenj.scalar import ONE, Cyclotomic


@pytest.mark.parametrize(
    "name, order, abelian",
    [("1", 1, True), ("Z2", 2, True), ("Z3", 3, True), ("Z4", 4, True), ("Z2xZ2", 4, True), ("S3", 6, False)],
)
def test_group_presets(name, order, abelian):
    g = group_preset(name)
    assert len(g) == order
    assert g.is_abelian == abelian
    assert validate_group(g).passed
    for x in g.elements:
        assert g.mul(x, g.inv(x)) == g.unit


def test_trivial_group():
    g = trivial_group()
    assert g.elements == ("*",)
    assert g.unit == "*"
    assert group_preset("1") == g


def test_product_group_elements():
    g = group_preset("Z2xZ2")
    assert g.elements == ("0.0", "0.1", "1.0", "1.1")
    assert g.mul("0.1", "1.1") == "1.0"
    assert g.unit == "0.0"


def test_unknown_preset():
    with pytest.raises(ParseError):
        group_preset("Q8")


def test_parse_group_table():
    g = parse_group({"elements": ["e", "a"], "mul": [["e", "a"], ["a", "e"]]})
    assert g.unit == "e"
    assert g.inv("a") == "a"
    with pytest.raises(ParseError):
        parse_group({"elements": ["e", "a"], "mul": [["e", "b"], ["a", "e"]]})
    with pytest.raises(ValidationError):
        # no unit: every row is the same
        parse_group({"elements": ["x", "y"], "mul": [["x", "y"], ["x", "y"]]})


def test_cyclic_decomposition():
    d = cyclic_decomposition(group_preset("Z2xZ2"))
    assert d.orders == (2, 2)
    assert len(set(d.coordinates.values())) == 4
    assert cyclic_decomposition(group_preset("Z4")).orders == (4,)
    with pytest.raises(ValueError):
        cyclic_decomposition(group_preset("S3"))


def test_trivial_cochain_is_cocycle():
    z3 = group_preset("Z3")
    omega = trivial_cochain(z3, 4)
    assert omega.is_trivial
    assert is_normalized(omega)
    assert validate_cocycle(omega).passed


@pytest.mark.parametrize("group", ["Z2", "Z3", "S3"])
def test_coboundaries_are_cocycles(group):
    g = group_preset(group)
    nu = random_cochain(g, 3, seed=11)
    d_nu = coboundary(nu)
    assert d_nu.degree == 4
    assert validate_cocycle(d_nu).passed


def test_random_cochain_is_reproducible():
    g = group_preset("Z3")
    assert random_cochain(g, 2, seed=5) == random_cochain(g, 2, seed=5)


def test_non_cocycle_is_reported():
    z2 = group_preset("Z2")
    values = dict(trivial_cochain(z2, 4).values)
    values["1", "0", "0", "0"] = -ONE
    omega = CochainTable(z2, 4, values)
    report = validate_cocycle(omega, "omega")
    assert not report.passed
    assert ["1", "0", "0", "0", "0"] in [f.witness for f in report.failures]
    assert not is_normalized(omega)


def test_parse_cochain():
    z2 = group_preset("Z2")
    assert parse_cochain("trivial", z2, 4).is_trivial
    r = parse_cochain([["1", "1"], ["1", {"zeta": [4, 1]}]], z2, 2)
    assert r("1", "1") == Cyclotomic.zeta(4, 1)
    f = parse_cochain({"values": {"1,1,1": "-1"}, "default": "1"}, z2, 3)
    assert f("1", "1", "1") == -ONE
    assert f("0", "1", "1") == ONE
    with pytest.raises(ParseError):
        parse_cochain({"values": {"1,1,1": "-1"}}, z2, 3)
    with pytest.raises(ParseError):
        parse_cochain([["1"]], z2, 3)
