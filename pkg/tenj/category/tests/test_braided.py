import pytest

from tenj.category.braided import (
    BRAIDED_PRESETS,
    BraidingData,
    QuadraticCocycle,
    braided_preset,
    parse_braiding,
    quadratic_form,
    require_braiding,
    validate_braiding,
)
from tenj.category.cochains import CochainTable, trivial_cochain
from tenj.category.groups import group_preset
from tenj.errors import HexagonViolation, ParseError, PentagonViolation
from tenj.scalar import ONE, Cyclotomic

I = Cyclotomic.zeta(4, 1)


@pytest.mark.parametrize("name", BRAIDED_PRESETS)
def test_presets_are_braidings(name):
    b = braided_preset(name)
    assert validate_braiding(b.F, b.R).passed
    require_braiding(b.F, b.R)


@pytest.mark.parametrize(
    "name, twist",
    [("boson", ONE), ("fermion", -ONE), ("semion", I), ("antisemion", -I)],
)
def test_z2_quadratic_forms(name, twist):
    q = braided_preset(name).quadratic_form
    assert q["0"] == ONE
    assert q["1"] == twist


def test_z3_forms():
    q1 = quadratic_form(braided_preset("z3_q1").R)
    q2 = quadratic_form(braided_preset("z3_q2").R)
    assert q1["1"] == Cyclotomic.zeta(3, 1)
    assert q2["1"] == Cyclotomic.zeta(3, 2)
    assert q1["2"] == Cyclotomic.zeta(3, 1)


def test_hexagon_violation():
    z2 = group_preset("Z2")
    r = dict(trivial_cochain(z2, 2).values)
    r["1", "1"] = I
    # the semion braiding needs the nontrivial associator
    with pytest.raises(HexagonViolation):
        require_braiding(trivial_cochain(z2, 3), CochainTable(z2, 2, r))
    report = validate_braiding(trivial_cochain(z2, 3), CochainTable(z2, 2, r))
    assert "hexagon" in {f.check for f in report.failures}


def test_pentagon_violation():
    z2 = group_preset("Z2")
    f = dict(trivial_cochain(z2, 3).values)
    f["1", "1", "1"] = I
    with pytest.raises(PentagonViolation):
        require_braiding(CochainTable(z2, 3, f), trivial_cochain(z2, 2))


def test_quadratic_cocycle_on_trivial_labels():
    b = braided_preset("semion")
    weight = QuadraticCocycle(b.group, b.quadratic_form)
    assert weight(["0"] * 10) == ONE
    assert b.evaluator.twists == (1,)


def test_parse_braiding():
    z2 = group_preset("Z2")
    b = parse_braiding(z2, {"values": {"1,1,1": "-1"}, "default": "1"}, [["1", "1"], ["1", "zeta(4,1)"]])
    assert isinstance(b, BraidingData)
    assert b.quadratic_form["1"] == I
    assert validate_braiding(b.F, b.R).passed
    with pytest.raises(ParseError):
        braided_preset("anyon")
