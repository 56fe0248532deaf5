import json
from fractions import Fraction

from tenj.scalar import Cyclotomic
from tenj.utils.reports import FAIL, PASS, SKIPPED, Report, jsonable


def test_status():
    report = Report("checks")
    assert report.passed
    report.ok("a")
    report.skip("b", "not applicable")
    assert report.status == PASS
    report.fail("c", "broken", [0, 1])
    assert report.status == FAIL
    assert [f.check for f in report.failures] == ["c"]


def test_extend_with_prefix():
    inner = Report("inner")
    inner.skip("x")
    outer = Report("outer")
    outer.extend(inner, prefix="sub.")
    assert outer.findings[0].check == "sub.x"
    assert outer.findings[0].status == SKIPPED


def test_jsonable():
    value = {
        (0, 1): Cyclotomic.zeta(4, 1),
        "f": Fraction(1, 3),
        "s": frozenset({2, 1}),
        "t": (1, 2),
    }
    assert jsonable(value) == {"0,1": "z4", "f": "1/3", "s": [1, 2], "t": [1, 2]}


def test_to_json():
    report = Report("r", meta={"Z": Cyclotomic.from_rational("1/2")})
    report.fail("closed", "d = -1", ("1", "0"))
    data = json.loads(report.to_json())
    assert data["status"] == FAIL
    assert data["meta"] == {"Z": "1/2"}
    assert data["findings"][0]["witness"] == ["1", "0"]


def test_print(capsys):
    report = Report("printed")
    report.ok("hidden")
    report.fail("shown", "detail", {"k": 1})
    report.print(show_passed=False)
    out = capsys.readouterr().out
    assert "shown: detail" in out
    assert "hidden" not in out
    assert "witness" in out
