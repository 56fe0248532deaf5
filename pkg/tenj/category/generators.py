"""Generators for the example families: twisted Dijkgraaf-Witten, split 2-groups, pointed braided.

All three are presented as group-like data: objects are elements of a group G, each in its own
component, and the 1-morphisms g # h -> gh are the elements of an abelian group A (empty lists
otherwise). A tetrahedron space is one-dimensional exactly when its labels are flat,

    g01 g12 = g02 (on every triangle)   and   a012 + a023 = a013 + a123,

and the 10j weight of a flat 4-simplex is omega(g01, g12, g23, g34) times the quadratic-form
cocycle of the braiding on A, raised to the orientation sign.
"""

from typing import Any, Dict, Mapping, Optional, Tuple, Union

import numpy as np

from tenj.category.braided import BraidingData, braided_preset, parse_braiding, require_braiding
from tenj.category.cochains import CochainTable, parse_cochain, trivial_cochain, validate_cocycle
from tenj.category.data import Fusion2CatData, LabelSymmetry
from tenj.category.groups import GroupPresentation, parse_group, trivial_group
from tenj.category.labels import (
    LabeledSimplex,
    LabeledTetra,
    restrict,
    scalar_tensor,
    ten_j_index_order,
)
from tenj.errors import InvalidCocycle, ParseError, UnsupportedTwist, ValidationError
from tenj.scalar import ONE, Cyclotomic, encode_scalar, parse_scalar

GroupLike = Union[str, Dict[str, Any], GroupPresentation]


class TwoGroupLocalData:
    """Local data of a split 2-group with objects G and 1-morphism labels A."""

    def __init__(
        self,
        G: GroupPresentation,
        A: GroupPresentation,
        omega: Optional[CochainTable] = None,
        braiding: Optional[BraidingData] = None,
        dims: Optional[Mapping[str, Cyclotomic]] = None,
        table: Optional[Mapping[LabeledSimplex, Cyclotomic]] = None,
    ):
        self.G = G
        self.A = A
        self.omega = None if omega is None or omega.is_trivial else omega
        self.form = None if braiding is None else braiding.evaluator
        if self.form is not None and all(t == 0 for t in self.form.twists) and not any(
            s for _, s in self.form.cross.values()
        ):
            self.form = None
        self.dims = None if dims is None or all(v == ONE for v in dims.values()) else dict(dims)
        self.table = None if table is None else dict(table)

    def tetra_dim(self, tetra: LabeledTetra) -> int:
        (g01, g02, g03, g12, g13, g23), (a012, a013, a023, a123) = tetra
        G, A = self.G, self.A
        if G.mul(g01, g12) != g02 or G.mul(g01, g13) != g03:
            return 0
        if G.mul(g02, g23) != g03 or G.mul(g12, g23) != g13:
            return 0
        return 1 if A.mul(a012, a023) == A.mul(a013, a123) else 0

    def _composite_dim(self, tetra: LabeledTetra) -> Cyclotomic:
        if self.dims is None:
            return ONE
        _, (a012, _, a023, _) = tetra
        return self.dims[a012] * self.dims[a023]

    def pairing(self, tetra: LabeledTetra) -> np.ndarray:
        return scalar_tensor(self._composite_dim(tetra), 2)

    def weight(self, simplex: LabeledSimplex) -> Cyclotomic:
        """The positively oriented 10j value of a flat 4-simplex."""
        edges, tris = simplex
        if self.table is not None:
            return self.table.get(simplex, ONE)
        value = ONE
        if self.omega is not None:
            value = value * self.omega(edges[0], edges[4], edges[7], edges[9])
        if self.form is not None:
            value = value * self.form(tris)
        return value

    def ten_j(self, simplex: LabeledSimplex, eps: int) -> np.ndarray:
        value = self.weight(simplex)
        if eps == -1:
            value = value.inverse()
        if self.dims is not None:
            for face, slot in ten_j_index_order(eps):
                if slot == 1:
                    value = value * self._composite_dim(restrict(simplex, 5, face))
        return scalar_tensor(value, 5)


def _two_group_category(
    G: GroupPresentation,
    A: GroupPresentation,
    local: TwoGroupLocalData,
    dims: Optional[Mapping[str, Cyclotomic]],
    name: str,
    provenance: Dict[str, Any],
) -> Fusion2CatData:
    size = Cyclotomic.from_rational(A.order)
    fusion = {(g, h, G.mul(g, h)): A.elements for g in G.elements for h in G.elements}
    return Fusion2CatData(
        objects=G.elements,
        components=tuple((g,) for g in G.elements),
        dim_obj={g: ONE for g in G.elements},
        dim_end={g: size for g in G.elements},
        fusion=fusion,
        dim_mor={a: (dims[a] if dims else ONE) for a in A.elements},
        local=local,
        name=name,
        unit=G.unit,
        symmetry=LabelSymmetry(G, A),
        provenance=provenance,
    )


def _group(g: GroupLike, location: str) -> GroupPresentation:
    return parse_group(g, location)


def _group_ref(g: GroupPresentation) -> Any:
    return g.name if g.name else g.to_dict()


def _require_cocycle(omega: CochainTable) -> None:
    report = validate_cocycle(omega, "omega")
    if not report.passed:
        raise InvalidCocycle(f"omega is not a cocycle: d omega != 1 at {report.failures[0].witness}")


def gen_twisted_dw(
    G: GroupLike, omega: Optional[CochainTable] = None, name: str = "", check: bool = True
) -> Fusion2CatData:
    """omega-twisted G-graded 2-vector spaces with trivial second homotopy.

    With ``check=False`` the cocycle condition is left to the validators.

    Raises:
        InvalidCocycle: if omega is not a 4-cocycle
    """
    G = _group(G, "group")
    omega = omega if omega is not None else trivial_cochain(G, 4)
    if omega.degree != 4 or omega.group != G:
        raise InvalidCocycle(f"omega must be a degree-4 cochain on {G.name or 'G'}")
    if check:
        _require_cocycle(omega)
    A = trivial_group()
    local = TwoGroupLocalData(G, A, omega=omega)
    provenance = {"generator": "dw", "group": _group_ref(G), "omega": omega.to_dict()}
    return _two_group_category(G, A, local, None, name or f"dw_{G.name}", provenance)


def gen_yetter_2group(
    G: GroupLike,
    A: GroupLike,
    omega: Optional[CochainTable] = None,
    braiding: Optional[BraidingData] = None,
    table: Optional[Mapping[LabeledSimplex, Cyclotomic]] = None,
    action: Optional[Mapping[str, Mapping[str, str]]] = None,
    postnikov: Optional[CochainTable] = None,
    name: str = "",
    check: bool = True,
) -> Fusion2CatData:
    """A split 2-group (G, A) with 4-cocycle built from a G-cocycle and a braiding on A.

    ``table`` overrides the cocycle with explicit values on labeled 4-simplices; flat simplices it
    omits get 1.

    Raises:
        InvalidCocycle: if omega is not a 4-cocycle
        UnsupportedTwist: for a nontrivial action of G on A, or a Postnikov cocycle that is not
            identically 1 (cohomologous-to-trivial tables are not recognized)
        PentagonViolation, HexagonViolation: for invalid braiding data
    """
    G = _group(G, "G")
    A = _group(A, "A")
    if not A.is_abelian:
        raise UnsupportedTwist(f"{A.name or 'A'} must be abelian")
    if action is not None and any(
        action[g][a] != a for g in G.elements for a in A.elements if g in action and a in action[g]
    ):
        raise UnsupportedTwist("only the trivial action of G on A is supported")
    if postnikov is not None and not postnikov.is_trivial:
        raise UnsupportedTwist("only split 2-groups (Postnikov cocycle identically 1) are supported")
    omega = omega if omega is not None else trivial_cochain(G, 4)
    if omega.degree != 4 or omega.group != G:
        raise InvalidCocycle(f"omega must be a degree-4 cochain on {G.name or 'G'}")
    if check:
        _require_cocycle(omega)
    if braiding is not None:
        if braiding.group != A:
            raise InvalidCocycle("braiding must be defined on A")
        require_braiding(braiding.F, braiding.R)
    local = TwoGroupLocalData(G, A, omega=omega, braiding=braiding, table=table)
    provenance: Dict[str, Any] = {
        "generator": "yetter",
        "G": _group_ref(G),
        "A": _group_ref(A),
        "omega": omega.to_dict(),
    }
    if braiding is not None:
        provenance["F"] = braiding.F.to_dict()
        provenance["R"] = braiding.R.to_dict()
    if table is not None:
        provenance["explicit_table"] = True
    return _two_group_category(G, A, local, None, name or f"yetter_{G.name}_{A.name}", provenance)


def gen_pointed_braided(
    A: GroupLike,
    F: Optional[CochainTable] = None,
    R: Optional[CochainTable] = None,
    dims: Optional[Mapping[str, Any]] = None,
    name: str = "",
    check: bool = True,
) -> Fusion2CatData:
    """The delooping of the pointed braided category with fusion group A.

    The pivotal dimensions only enter the state sum through the triangle weights, so dims other
    than all +1 are accepted only when the category still satisfies the (3,3) identity on every
    boundary labeling. ``check=False`` skips that test.

    Raises:
        PentagonViolation, HexagonViolation: if (F, R) is not an abelian 3-cocycle
        ValueError: if a pivotal dimension is not +1 or -1
        ValidationError: if the dims break the (3,3) identity
    """
    A = _group(A, "group")
    F = F if F is not None else trivial_cochain(A, 3)
    R = R if R is not None else trivial_cochain(A, 2)
    require_braiding(F, R)
    braiding = BraidingData(A, F, R)
    parsed_dims = None
    if dims is not None:
        parsed_dims = {}
        for a in A.elements:
            value = dims.get(a, ONE)
            value = value if isinstance(value, Cyclotomic) else parse_scalar(value, f"dims.{a}")
            if value not in (ONE, -ONE):
                raise ValueError(f"pivotal dimension of {a!r} must be +1 or -1, got {value}")
            parsed_dims[a] = value
    G = trivial_group()
    local = TwoGroupLocalData(G, A, braiding=braiding, dims=parsed_dims)
    provenance: Dict[str, Any] = {
        "generator": "pointed",
        "group": _group_ref(A),
        "F": F.to_dict(),
        "R": R.to_dict(),
    }
    if parsed_dims is not None:
        provenance["dims"] = {a: encode_scalar(v) for a, v in parsed_dims.items()}
    cat = _two_group_category(G, A, local, parsed_dims, name or f"pointed_{A.name}", provenance)
    if check and local.dims is not None:
        _require_pachner_33(cat)
    return cat


def _require_pachner_33(cat: Fusion2CatData) -> None:
    from tenj.category.pachner import check_pachner_33

    report = check_pachner_33(cat)
    if not report.passed:
        dims = {a: str(d) for a, d in cat.dim_mor.items()}
        raise ValidationError(
            [f"pivotal dimensions {dims} break the (3,3) identity"]
            + [f"{f.check}: {f.detail} {f.witness}" for f in report.failures]
        )


def pointed_preset(
    preset: str, dims: Optional[Mapping[str, Any]] = None, check: bool = True
) -> Fusion2CatData:
    """A pointed braided category from a named braiding (see ``braided_preset``)."""
    b = braided_preset(preset)
    cat = gen_pointed_braided(b.group, b.F, b.R, dims=dims, name=preset, check=check)
    assert cat.provenance is not None
    cat.provenance["preset"] = preset
    return cat


def trivial_category() -> Fusion2CatData:
    """The 2-category with one object and one 1-morphism; its invariant is 1."""
    return gen_twisted_dw(trivial_group(), name="trivial")


def from_parameters(
    params: Mapping[str, Any], location: str = "", check: bool = True
) -> Fusion2CatData:
    """Evaluate a generator reference such as ``{"generator": "pointed", "group": "Z2", ...}``."""
    prefix = f"{location}." if location else ""
    kind = params.get("generator")
    name = str(params.get("name", ""))
    if kind == "trivial":
        return trivial_category()
    if kind == "dw":
        G = parse_group(params.get("group", "1"), f"{prefix}group")
        omega = parse_cochain(params.get("omega", "trivial"), G, 4, f"{prefix}omega")
        return gen_twisted_dw(G, omega, name=name, check=check)
    if kind == "pointed":
        if "preset" in params:
            cat = pointed_preset(str(params["preset"]), dims=params.get("dims"), check=check)
            return cat.relabel(name) if name else cat
        A = parse_group(params.get("group", "Z2"), f"{prefix}group")
        b = parse_braiding(A, params.get("F", "trivial"), params.get("R", "trivial"), location)
        return gen_pointed_braided(A, b.F, b.R, dims=params.get("dims"), name=name, check=check)
    if kind == "yetter":
        G = parse_group(params.get("G", "1"), f"{prefix}G")
        A = parse_group(params.get("A", "1"), f"{prefix}A")
        omega = parse_cochain(params.get("omega", "trivial"), G, 4, f"{prefix}omega")
        braiding = None
        if "preset" in params:
            braiding = braided_preset(str(params["preset"]))
        elif "F" in params or "R" in params:
            braiding = parse_braiding(A, params.get("F", "trivial"), params.get("R", "trivial"), location)
        postnikov = None
        if "postnikov" in params:
            postnikov = parse_cochain(params["postnikov"], G, 3, f"{prefix}postnikov")
        return gen_yetter_2group(
            G,
            A,
            omega,
            braiding,
            action=params.get("action"),
            postnikov=postnikov,
            name=name,
            check=check,
        )
    raise ParseError(f"unknown generator {kind!r}", f"{prefix}generator")


def group_like_parameters(cat: Fusion2CatData) -> Tuple[GroupPresentation, GroupPresentation]:
    """(G, A) of a group-like category.

    Raises:
        ValueError: if the category carries no group-like label symmetry
    """
    if cat.symmetry is None:
        raise ValueError(f"category {cat.name!r} has no group-like label symmetry")
    return cat.symmetry.objects, cat.symmetry.morphisms
