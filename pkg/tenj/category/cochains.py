"""Group cochains with cyclotomic values (trivial action, multiplicative notation)."""

from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Dict, Mapping, Optional, Tuple

import numpy as np

from tenj.category.groups import Element, GroupPresentation
from tenj.errors import ParseError
from tenj.scalar import ONE, Cyclotomic, encode_scalar, parse_scalar
from tenj.utils.reports import Report
from tenj.utils.rng import make_rng


@dataclass(frozen=True, eq=False)
class CochainTable:
    group: GroupPresentation
    degree: int
    values: Mapping[Tuple[Element, ...], Cyclotomic]
    """Full table over all ``degree``-tuples of group elements."""

    def __post_init__(self):
        assert 1 <= self.degree <= 4, f"cochain degree must be 1..4, got {self.degree}"
        assert len(self.values) == len(self.group) ** self.degree, (
            f"degree-{self.degree} table needs {len(self.group) ** self.degree} entries, "
            f"got {len(self.values)}"
        )

    def __call__(self, *args: Element) -> Cyclotomic:
        return self.values[args]

    def __mul__(self, other: "CochainTable") -> "CochainTable":
        assert self.group == other.group and self.degree == other.degree
        return CochainTable(
            self.group, self.degree, {k: v * other.values[k] for k, v in self.values.items()}
        )

    def inverse(self) -> "CochainTable":
        return CochainTable(self.group, self.degree, {k: v.inverse() for k, v in self.values.items()})

    @property
    def is_trivial(self) -> bool:
        return all(v == ONE for v in self.values.values())

    def to_dict(self) -> Dict[str, Any]:
        if self.is_trivial:
            return {"degree": self.degree, "values": "trivial"}
        return {
            "degree": self.degree,
            "values": {",".join(k): encode_scalar(v) for k, v in sorted(self.values.items())},
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, CochainTable):
            return NotImplemented
        return (
            self.group == other.group
            and self.degree == other.degree
            and dict(self.values) == dict(other.values)
        )

    __hash__ = None  # type: ignore[assignment]


def cochain_from_function(
    group: GroupPresentation, degree: int, fn: Callable[..., Any]
) -> CochainTable:
    values = {}
    for args in product(group.elements, repeat=degree):
        value = fn(*args)
        values[args] = value if isinstance(value, Cyclotomic) else parse_scalar(value)
    return CochainTable(group, degree, values)


def trivial_cochain(group: GroupPresentation, degree: int) -> CochainTable:
    return CochainTable(group, degree, {k: ONE for k in product(group.elements, repeat=degree)})


def differential(f: CochainTable, args: Tuple[Element, ...]) -> Cyclotomic:
    """(df)(g1..g_{n+1}) for the trivial action."""
    g = f.group
    n = f.degree
    assert len(args) == n + 1
    out = f.values[args[1:]]
    for i in range(1, n + 1):
        merged = args[: i - 1] + (g.mul(args[i - 1], args[i]),) + args[i + 1 :]
        value = f.values[merged]
        out = out * (value if i % 2 == 0 else value.inverse())
    last = f.values[args[:n]]
    return out * (last if (n + 1) % 2 == 0 else last.inverse())


def coboundary(nu: CochainTable) -> CochainTable:
    """The cochain d(nu) of one degree higher."""
    return CochainTable(
        nu.group,
        nu.degree + 1,
        {
            args: differential(nu, args)
            for args in product(nu.group.elements, repeat=nu.degree + 1)
        },
    )


def validate_cocycle(table: CochainTable, name: str = "cocycle") -> Report:
    """PASS iff d(table) is identically 1; violating tuples are listed."""
    report = Report(f"{name} (degree {table.degree})")
    bad = []
    for args in product(table.group.elements, repeat=table.degree + 1):
        value = differential(table, args)
        if value != ONE:
            bad.append((args, value))
    for args, value in bad[:20]:
        report.fail("closed", f"d{name} = {value}", list(args))
    if len(bad) > 20:
        report.fail("closed", f"{len(bad) - 20} further violating tuples")
    if not bad:
        report.ok("closed", f"d{name} = 1 on all {len(table.group) ** (table.degree + 1)} tuples")
    return report


def is_normalized(table: CochainTable) -> bool:
    e = table.group.unit
    return all(v == ONE for k, v in table.values.items() if e in k)


def random_cochain(
    group: GroupPresentation,
    degree: int,
    seed: int = 0,
    root_order: int = 4,
    rng: Optional[np.random.Generator] = None,
) -> CochainTable:
    """Random table of ``root_order``-th roots of unity; deterministic given the seed."""
    rng = rng if rng is not None else make_rng(seed)
    values = {
        args: Cyclotomic.zeta(root_order, int(rng.integers(root_order)))
        for args in product(group.elements, repeat=degree)
    }
    return CochainTable(group, degree, values)


def parse_cochain(
    obj: Any, group: GroupPresentation, degree: int, location: str = "cochain"
) -> CochainTable:
    """Read a cochain table.

    Accepted forms: ``"trivial"``; ``{"values": {"g1,g2,...": scalar}, "default": scalar}``
    (the default fills missing tuples and is required if any are missing); and for degree 2 a
    list of rows, ``rows[a][b]`` for elements in table order, where omitted trailing entries are 1.
    """
    if obj is None or obj == "trivial":
        return trivial_cochain(group, degree)
    if isinstance(obj, CochainTable):
        return obj
    elements = group.elements
    if isinstance(obj, list):
        if degree != 2:
            raise ParseError(f"row form is only accepted for degree 2, not {degree}", location)
        if len(obj) > len(elements):
            raise ParseError(f"at most {len(elements)} rows", location)
        values: Dict[Tuple[str, ...], Cyclotomic] = {
            k: ONE for k in product(elements, repeat=2)
        }
        for i, row in enumerate(obj):
            if not isinstance(row, list) or len(row) > len(elements):
                raise ParseError(f"row must list at most {len(elements)} scalars", f"{location}[{i}]")
            for j, entry in enumerate(row):
                values[elements[i], elements[j]] = parse_scalar(entry, f"{location}[{i}][{j}]")
        return CochainTable(group, degree, values)
    if not isinstance(obj, dict) or "values" not in obj:
        raise ParseError("expected 'trivial', a row list or an object with 'values'", location)
    if obj.get("degree", degree) != degree:
        raise ParseError(f"expected degree {degree}, file says {obj.get('degree')}", location)
    raw = obj["values"]
    if raw == "trivial":
        return trivial_cochain(group, degree)
    if not isinstance(raw, dict):
        raise ParseError("'values' must map comma-joined tuples to scalars", f"{location}.values")
    default = parse_scalar(obj["default"], f"{location}.default") if "default" in obj else None
    values = {}
    for key, entry in raw.items():
        args = tuple(part.strip() for part in str(key).split(","))
        if len(args) != degree or any(a not in group.index for a in args):
            raise ParseError(f"bad tuple {key!r} for degree {degree}", f"{location}.values")
        values[args] = parse_scalar(entry, f"{location}.values[{key}]")
    for args in product(elements, repeat=degree):
        if args not in values:
            if default is None:
                raise ParseError(
                    f"missing entry {','.join(args)} and no default", f"{location}.values"
                )
            values[args] = default
    return CochainTable(group, degree, values)
