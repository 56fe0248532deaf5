"""Finite groups given by Cayley tables, with the named presets used by the generators."""

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Any, Dict, List, Sequence, Tuple

from tenj.errors import ParseError, ValidationError
from tenj.utils.reports import Report

Element = str

# characters reserved by the label-key encoding of category files
RESERVED = (",", "|")


@dataclass(frozen=True, eq=False)
class GroupPresentation:
    elements: Tuple[Element, ...]
    """Element identifiers; the first one is not required to be the unit."""

    table: Tuple[Tuple[Element, ...], ...]
    """``table[i][j]`` is the product of ``elements[i]`` and ``elements[j]``."""

    name: str = ""

    def __post_init__(self):
        n = len(self.elements)
        assert n > 0, "a group needs at least one element"
        assert len(set(self.elements)) == n, "duplicate group elements"
        assert len(self.table) == n and all(len(row) == n for row in self.table), (
            f"Cayley table of {self.name or 'group'} must be {n}x{n}"
        )
        known = set(self.elements)
        for row in self.table:
            for x in row:
                assert x in known, f"Cayley table entry {x!r} is not an element"

    @cached_property
    def index(self) -> Dict[Element, int]:
        return {g: i for i, g in enumerate(self.elements)}

    @cached_property
    def _mul(self) -> Dict[Tuple[Element, Element], Element]:
        return {
            (a, b): self.table[i][j]
            for i, a in enumerate(self.elements)
            for j, b in enumerate(self.elements)
        }

    def mul(self, a: Element, b: Element) -> Element:
        return self._mul[a, b]

    def product(self, *xs: Element) -> Element:
        out = self.unit
        for x in xs:
            out = self._mul[out, x]
        return out

    @cached_property
    def unit(self) -> Element:
        for e in self.elements:
            if all(self._mul[e, g] == g and self._mul[g, e] == g for g in self.elements):
                return e
        raise ValidationError([f"{self.name or 'group'} has no unit"])

    @cached_property
    def _inv(self) -> Dict[Element, Element]:
        e = self.unit
        out = {}
        for g in self.elements:
            for h in self.elements:
                if self._mul[g, h] == e:
                    out[g] = h
                    break
        return out

    def inv(self, a: Element) -> Element:
        return self._inv[a]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def is_abelian(self) -> bool:
        return all(self._mul[a, b] == self._mul[b, a] for a in self.elements for b in self.elements)

    def element_order(self, a: Element) -> int:
        k, x = 1, a
        while x != self.unit:
            x = self._mul[x, a]
            k += 1
        return k

    def to_dict(self) -> Dict[str, Any]:
        return {"elements": list(self.elements), "mul": [list(row) for row in self.table]}

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupPresentation):
            return NotImplemented
        return self.elements == other.elements and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.elements, self.table))

    def __repr__(self) -> str:
        return f"GroupPresentation({self.name or list(self.elements)})"


def validate_group(g: GroupPresentation) -> Report:
    """Associativity, unit and inverse laws over the full table."""
    report = Report(f"group {g.name}".strip())
    try:
        e = g.unit
    except ValidationError as err:
        report.fail("unit", str(err))
        return report
    report.ok("unit", f"unit is {e!r}")
    missing = [a for a in g.elements if a not in g._inv]
    for a in missing:
        report.fail("inverse", "element has no inverse", a)
    if not missing:
        report.ok("inverse")
    bad = [
        (a, b, c)
        for a, b, c in product(g.elements, repeat=3)
        if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))
    ]
    for witness in bad[:10]:
        report.fail("associativity", "(ab)c != a(bc)", witness)
    if not bad:
        report.ok("associativity")
    return report


def trivial_group() -> GroupPresentation:
    return GroupPresentation(("*",), (("*",),), name="1")


def cyclic_group(n: int) -> GroupPresentation:
    assert n >= 1
    elements = tuple(str(k) for k in range(n))
    table = tuple(tuple(str((i + j) % n) for j in range(n)) for i in range(n))
    return GroupPresentation(elements, table, name=f"Z{n}")


def direct_product(g: GroupPresentation, h: GroupPresentation) -> GroupPresentation:
    pairs = [(a, b) for a in g.elements for b in h.elements]
    elements = tuple(f"{a}.{b}" for a, b in pairs)
    table = tuple(
        tuple(f"{g.mul(a1, a2)}.{h.mul(b1, b2)}" for a2, b2 in pairs) for a1, b1 in pairs
    )
    return GroupPresentation(elements, table, name=f"{g.name}x{h.name}")


def symmetric_group(n: int) -> GroupPresentation:
    """Permutations of 0..n-1 written as image strings; product is composition (ab)(x) = a(b(x))."""
    assert 1 <= n <= 9
    perms = list(permutations(range(n)))
    names = ["".join(map(str, p)) for p in perms]
    lookup = {p: s for p, s in zip(perms, names)}
    table = tuple(
        tuple(lookup[tuple(a[b[x]] for x in range(n))] for b in perms) for a in perms
    )
    return GroupPresentation(tuple(names), table, name=f"S{n}")


_CYCLIC_RE = re.compile(r"^Z(\d+)$")


def group_preset(name: str) -> GroupPresentation:
    """``1``, ``Zn``, products such as ``Z2xZ2``, or ``Sn``."""
    name = name.strip()
    if name in ("1", "trivial"):
        return trivial_group()
    parts = name.split("x")
    if len(parts) > 1:
        out = group_preset(parts[0])
        for part in parts[1:]:
            out = direct_product(out, group_preset(part))
        return out
    m = _CYCLIC_RE.match(name)
    if m:
        return cyclic_group(int(m.group(1)))
    if name.startswith("S") and name[1:].isdigit():
        return symmetric_group(int(name[1:]))
    raise ParseError(f"unknown group preset {name!r}")


def parse_group(obj: Any, location: str = "group") -> GroupPresentation:
    """A preset name or ``{"elements": [...], "mul": [[...]]}``.

    Raises:
        ParseError: on malformed input
        ValidationError: if the table violates the group axioms
    """
    if isinstance(obj, GroupPresentation):
        return obj
    if isinstance(obj, str):
        return group_preset(obj)
    if not isinstance(obj, dict) or "elements" not in obj or "mul" not in obj:
        raise ParseError("expected a preset name or an object with 'elements' and 'mul'", location)
    elements = obj["elements"]
    rows = obj["mul"]
    if not isinstance(elements, list) or not all(isinstance(e, (str, int)) for e in elements):
        raise ParseError("'elements' must be a list of identifiers", f"{location}.elements")
    elements = [str(e) for e in elements]
    for e in elements:
        if any(c in e for c in RESERVED):
            raise ParseError(f"element {e!r} uses a reserved character", f"{location}.elements")
    if not isinstance(rows, list) or len(rows) != len(elements):
        raise ParseError(f"'mul' must have {len(elements)} rows", f"{location}.mul")
    table: List[Tuple[str, ...]] = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != len(elements):
            raise ParseError(f"row must have {len(elements)} entries", f"{location}.mul[{i}]")
        row = [str(x) for x in row]
        for j, x in enumerate(row):
            if x not in elements:
                raise ParseError(f"unknown element {x!r}", f"{location}.mul[{i}][{j}]")
        table.append(tuple(row))
    if len(set(elements)) != len(elements):
        raise ParseError("duplicate elements", f"{location}.elements")
    g = GroupPresentation(tuple(elements), tuple(table), name=str(obj.get("name", "")))
    report = validate_group(g)
    if not report.passed:
        raise ValidationError([f"{f.check}: {f.detail} {f.witness}" for f in report.failures])
    return g


@dataclass(frozen=True)
class CyclicDecomposition:
    """An abelian group as a product of cyclic factors."""

    generators: Tuple[Element, ...]
    orders: Tuple[int, ...]
    coordinates: Dict[Element, Tuple[int, ...]]
    """Each element as exponents of the generators, each in ``range(order)``."""


def cyclic_decomposition(a: GroupPresentation) -> CyclicDecomposition:
    """A minimal generating set realizing ``a`` as a product of cyclic groups."""
    if not a.is_abelian:
        raise ValueError(f"{a.name or 'group'} is not abelian")
    others = [g for g in a.elements if g != a.unit]
    if not others:
        return CyclicDecomposition((), (), {a.unit: ()})
    for rank in range(1, len(others) + 1):
        for gens in product(others, repeat=rank):
            orders = tuple(a.element_order(g) for g in gens)
            total = 1
            for n in orders:
                total *= n
            if total != a.order:
                continue
            coords: Dict[Element, Tuple[int, ...]] = {}
            for exps in product(*(range(n) for n in orders)):
                x = a.unit
                for g, k in zip(gens, exps):
                    for _ in range(k):
                        x = a.mul(x, g)
                if x in coords:
                    break
                coords[x] = exps
            if len(coords) == a.order:
                return CyclicDecomposition(tuple(gens), orders, coords)
    raise AssertionError("unreachable: every finite abelian group is a product of cyclic groups")


def check_elements(g: GroupPresentation, values: Sequence[Element], location: str) -> None:
    for v in values:
        if v not in g.index:
            raise ParseError(f"{v!r} is not an element of {g.name or 'the group'}", location)
