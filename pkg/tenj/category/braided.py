"""Abelian braiding data (F, R) on a finite abelian group and its quadratic form.

The 10j weight of a pointed braided category only depends on the quadratic form
q(a) = R(a, a). It is evaluated as a cocycle on flat triangle labelings: for each cyclic factor
of order n with q(g) = exp(2 pi i t / 2n), lifts x of the labels to ``range(n)`` enter through

    P = x(012) x(234) + x(034) dx(0123) + x(014) dx(1234)

and the weight is exp(2 pi i t P / 2n), times the bilinear cross terms between factors.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd
from typing import Dict, Mapping, Sequence, Tuple

from tenj.category.cochains import CochainTable, parse_cochain, trivial_cochain, validate_cocycle
from tenj.category.groups import Element, GroupPresentation, cyclic_decomposition, group_preset
from tenj.errors import HexagonViolation, ParseError, PentagonViolation
from tenj.scalar import ONE, Cyclotomic
from tenj.utils.reports import Report


@dataclass(frozen=True, eq=False)
class BraidingData:
    group: GroupPresentation
    F: CochainTable
    """Associator, a normalized 3-cocycle."""

    R: CochainTable
    """Braiding R(a, b)."""

    def __post_init__(self):
        assert self.group.is_abelian, "braiding data needs an abelian group"
        assert self.F.group == self.group and self.F.degree == 3
        assert self.R.group == self.group and self.R.degree == 2

    @cached_property
    def quadratic_form(self) -> Dict[Element, Cyclotomic]:
        return quadratic_form(self.R)

    @cached_property
    def evaluator(self) -> "QuadraticCocycle":
        return QuadraticCocycle(self.group, self.quadratic_form)


def quadratic_form(R: CochainTable) -> Dict[Element, Cyclotomic]:
    """q(a) = R(a, a)."""
    return {a: R(a, a) for a in R.group.elements}


def validate_braiding(F: CochainTable, R: CochainTable) -> Report:
    """Pentagon for F and both hexagons for (F, R), over the full tables."""
    a = F.group
    report = Report(f"braiding on {a.name}".strip())
    pentagon = validate_cocycle(F, "F")
    for f in pentagon.findings:
        if f.status == "FAIL":
            report.fail("pentagon", f.detail, f.witness)
    if pentagon.passed:
        report.ok("pentagon")

    def inv(value: Cyclotomic) -> Cyclotomic:
        return value.inverse()

    bad1, bad2 = [], []
    for x, y, z in product(a.elements, repeat=3):
        lhs = F(x, y, z) * R(x, a.mul(y, z)) * F(y, z, x)
        rhs = R(x, y) * F(y, x, z) * R(x, z)
        if lhs != rhs:
            bad1.append((x, y, z))
        lhs = inv(F(x, y, z)) * R(a.mul(x, y), z) * inv(F(z, x, y))
        rhs = R(y, z) * inv(F(x, z, y)) * R(x, z)
        if lhs != rhs:
            bad2.append((x, y, z))
    for name, bad in (("hexagon", bad1), ("inverse hexagon", bad2)):
        for witness in bad[:10]:
            report.fail(name, "hexagon identity fails", list(witness))
        if not bad:
            report.ok(name)
    return report


def require_braiding(F: CochainTable, R: CochainTable) -> None:
    """Raise on the first violated identity.

    Raises:
        PentagonViolation: if F is not a 3-cocycle
        HexagonViolation: if a hexagon identity fails
    """
    report = validate_braiding(F, R)
    for f in report.failures:
        if f.check == "pentagon":
            raise PentagonViolation(f"pentagon fails at {f.witness}: {f.detail}")
        raise HexagonViolation(f"{f.check} fails at (x, y, z) = {f.witness}")


class QuadraticCocycle:
    """The 4-cocycle on flat labelings determined by a quadratic form."""

    def __init__(self, group: GroupPresentation, q: Mapping[Element, Cyclotomic]):
        self.group = group
        self.decomposition = cyclic_decomposition(group)
        gens = self.decomposition.generators
        orders = self.decomposition.orders
        self.twists = tuple(_root_exponent(q[g], 2 * n) for g, n in zip(gens, orders))
        self.cross: Dict[Tuple[int, int], Tuple[int, int]] = {}
        for i, j in product(range(len(gens)), repeat=2):
            if i >= j:
                continue
            m = gcd(orders[i], orders[j])
            b = q[group.mul(gens[i], gens[j])] / (q[gens[i]] * q[gens[j]])
            self.cross[i, j] = (m, _root_exponent(b, m))

    def __call__(self, triangles: Sequence[Element]) -> Cyclotomic:
        """Weight of a flat labeling of the ten triangles of a 4-simplex, in lexicographic order."""
        coords = self.decomposition.coordinates
        xs = [coords[t] for t in triangles]
        value = ONE
        for i, (n, t) in enumerate(zip(self.decomposition.orders, self.twists)):
            if t == 0:
                continue
            x = [c[i] for c in xs]
            d0123 = x[6] - x[3] + x[1] - x[0]
            d1234 = x[9] - x[8] + x[7] - x[6]
            p = x[0] * x[9] + x[5] * d0123 + x[2] * d1234
            value = value * Cyclotomic.zeta(2 * n, t * p)
        for (i, j), (m, s) in self.cross.items():
            if s:
                value = value * Cyclotomic.zeta(m, s * xs[0][i] * xs[9][j])
        return value


def _root_exponent(value: Cyclotomic, n: int) -> int:
    for k in range(n):
        if Cyclotomic.zeta(n, k) == value:
            return k
    raise ValueError(f"{value} is not an {n}-th root of unity")


def _bicharacter(a: GroupPresentation, k: int) -> CochainTable:
    n = a.order
    return CochainTable(
        a,
        2,
        {(x, y): Cyclotomic.zeta(n, k * int(x) * int(y)) for x, y in product(a.elements, repeat=2)},
    )


def _z2_braiding(f111: int, r11: Cyclotomic) -> BraidingData:
    a = group_preset("Z2")
    F = trivial_cochain(a, 3)
    if f111 != 1:
        values = dict(F.values)
        values["1", "1", "1"] = Cyclotomic.from_rational(f111)
        F = CochainTable(a, 3, values)
    R = dict(trivial_cochain(a, 2).values)
    R["1", "1"] = r11
    return BraidingData(a, F, CochainTable(a, 2, R))


def braided_preset(name: str) -> BraidingData:
    """Named braidings: boson, fermion, semion, antisemion on Z2; z3_q1, z3_q2 on Z3."""
    if name == "boson":
        return _z2_braiding(1, ONE)
    if name == "fermion":
        return _z2_braiding(1, Cyclotomic.from_rational(-1))
    if name == "semion":
        return _z2_braiding(-1, Cyclotomic.zeta(4, 1))
    if name == "antisemion":
        return _z2_braiding(-1, Cyclotomic.zeta(4, 3))
    if name in ("z3_q1", "z3_q2"):
        a = group_preset("Z3")
        return BraidingData(a, trivial_cochain(a, 3), _bicharacter(a, int(name[-1])))
    raise ParseError(f"unknown braided preset {name!r}")


BRAIDED_PRESETS = ("boson", "fermion", "semion", "antisemion", "z3_q1", "z3_q2")


def parse_braiding(group: GroupPresentation, F, R, location: str = "") -> BraidingData:
    prefix = f"{location}." if location else ""
    return BraidingData(
        group,
        parse_cochain(F, group, 3, f"{prefix}F"),
        parse_cochain(R, group, 2, f"{prefix}R"),
    )
