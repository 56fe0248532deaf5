from dataclasses import replace

import pytest

from tenj.category.data import validate_category
from tenj.category.dimensions import (
    check_dimension_identities,
    fusion_rule_sum,
    incoming_morphisms,
)
from tenj.category.generators import (
    gen_pointed_braided,
    gen_twisted_dw,
    gen_yetter_2group,
    pointed_preset,
    trivial_category,
)
from tenj.scalar import ONE, Cyclotomic
from tenj.utils.reports import PASS, SKIPPED


@pytest.mark.parametrize(
    "cat",
    [
        trivial_category(),
        gen_twisted_dw("Z3"),
        pointed_preset("semion"),
        gen_pointed_braided("Z2", dims={"1": -1}, check=False),
        gen_yetter_2group("Z3", "Z2"),
    ],
    ids=lambda cat: cat.name,
)
def test_identities_hold(cat):
    report = check_dimension_identities(cat)
    assert report.passed
    status = {f.check: f.status for f in report.findings}
    assert status["global dimension"] == PASS
    assert status["object dimension"] == PASS
    assert status["relative multiplicativity"] == PASS
    assert status["additivity"] == SKIPPED
    assert status["total factorization"] == SKIPPED
    assert report.meta["dim(C)"] == cat.total_dimension


def test_sums():
    cat = pointed_preset("fermion")
    assert fusion_rule_sum(cat, "*") == Cyclotomic.from_rational("1/2")
    assert incoming_morphisms(cat, "*") == ONE


def test_wrong_morphism_dimension():
    base = pointed_preset("fermion")
    cat = replace(base, dim_mor={"0": ONE, "1": Cyclotomic.from_rational(2)})
    # still a well-formed presentation
    assert validate_category(cat).passed
    report = check_dimension_identities(cat)
    assert not report.passed
    failed = {f.check for f in report.failures}
    assert "global dimension" in failed
    assert "relative multiplicativity" in failed


def test_composites_skipped_without_symmetry():
    cat = replace(gen_twisted_dw("Z2"), symmetry=None)
    status = {f.check: f.status for f in check_dimension_identities(cat).findings}
    assert status["precompositions"] == SKIPPED
    assert status["global dimension"] == PASS
