"""Dimension identities of spherical prefusion 2-categories, evaluated on a presentation.

The 1-morphisms B -> A of the presentation are the fusion morphisms unit # B -> A, so the
identities that only need those and the fusion lists are checked for every category with a known
unit. Identities about composites need the composition law; it is available for group-like
categories, where B -> A is empty unless B = A and composing is multiplication in the morphism
group.
"""

from itertools import product
from typing import List, Tuple

from tenj.category.data import Fusion2CatData
from tenj.scalar import ZERO, Cyclotomic
from tenj.utils.reports import Report


def _mismatch(lhs: Cyclotomic, rhs: Cyclotomic) -> str:
    return f"{lhs} != {rhs}"


def incoming_morphisms(cat: Fusion2CatData, a: str) -> Cyclotomic:
    """Sum over simple B and f: B -> A of dim(f)^2 / d(B)."""
    assert cat.unit is not None
    total = ZERO
    for b in cat.objects:
        for f in cat.fusion_list(cat.unit, b, a):
            total = total + cat.dim_mor[f] * cat.dim_mor[f] / cat.d(b)
    return total


def fusion_rule_sum(cat: Fusion2CatData, a: str) -> Cyclotomic:
    """Sum over simple B, C and f: B # C -> A of dim(f)^2 / (dim(A) d(B) d(C))."""
    total = ZERO
    for b, c in product(cat.objects, repeat=2):
        fs = cat.fusion_list(b, c, a)
        if not fs:
            continue
        scale = (cat.dim_obj[a] * cat.d(b) * cat.d(c)).inverse()
        for f in fs:
            total = total + cat.dim_mor[f] * cat.dim_mor[f] * scale
    return total


def check_dimension_identities(cat: Fusion2CatData) -> Report:
    report = Report(f"dimension identities on {cat.name}".strip())
    dim_c = cat.total_dimension
    report.meta["dim(C)"] = dim_c

    bad: List[Tuple[str, Cyclotomic]] = []
    for a in cat.objects:
        value = fusion_rule_sum(cat, a)
        if value != dim_c:
            bad.append((a, value))
    for a, value in bad:
        report.fail("global dimension", _mismatch(value, dim_c), a)
    if not bad:
        report.ok("global dimension", f"every anchor object gives dim(C) = {dim_c}")

    if cat.unit is None:
        report.skip("object dimension", "the presentation does not name its unit object")
    else:
        bad = []
        for a in cat.objects:
            value = incoming_morphisms(cat, a)
            if value != cat.dim_obj[a]:
                bad.append((a, value))
        for a, value in bad:
            report.fail("object dimension", _mismatch(value, cat.dim_obj[a]), a)
        if not bad:
            report.ok("object dimension", f"{len(cat.objects)} objects")

    report.skip(
        "additivity",
        "only simple 1-morphisms are listed, for which the identity holds term by term",
    )
    if cat.symmetry is None:
        for check in ("relative multiplicativity", "precompositions", "factorizations"):
            report.skip(check, "composition of 1-morphisms is only known for group-like categories")
    else:
        _check_composites(cat, report)
    report.skip(
        "total factorization",
        "needs bases of the 2-morphism spaces Hom(g h, f), which the presentation does not carry",
    )
    return report


def _check_composites(cat: Fusion2CatData, report: Report) -> None:
    assert cat.symmetry is not None
    A = cat.symmetry.morphisms
    dim = cat.dim_mor
    found = {"relative multiplicativity": 0, "precompositions": 0, "factorizations": 0}
    for x in cat.objects:
        dx = cat.d(x)
        for f, g in product(A.elements, repeat=2):
            lhs = dim[A.mul(f, g)]
            rhs = dim[f] * dim[g] / cat.dim_obj[x]
            if lhs != rhs:
                found["relative multiplicativity"] += 1
                report.fail("relative multiplicativity", _mismatch(lhs, rhs), [x, f, g])
        for f in A.elements:
            pre = ZERO
            fac = ZERO
            for g in A.elements:
                pre = pre + dim[g] * dim[A.mul(f, g)] / dx
                # h: x -> x and g: x -> x with g h = f
                h = A.mul(A.inv(g), f)
                fac = fac + dim[g] * dim[h] / dx
            if pre != dim[f]:
                found["precompositions"] += 1
                report.fail("precompositions", _mismatch(pre, dim[f]), [x, f])
            if fac != dim[f]:
                found["factorizations"] += 1
                report.fail("factorizations", _mismatch(fac, dim[f]), [x, f])
    for check, count in found.items():
        if not count:
            report.ok(check, f"{len(cat.objects)} objects, {len(A)} 1-morphism labels")
