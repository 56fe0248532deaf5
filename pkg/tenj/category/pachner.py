"""Local identities behind invariance under bistellar moves.

A (p, q) move on the boundary of the standard 5-simplex replaces p facets by the other q. Both
sides are tensor networks of 10j symbols and copairings whose open indices are the tetrahedra
they share. Summed over the labels of the simplices only one side has, with the state-sum
normalization of those simplices, the two networks agree as tensors for every labeling of the
shared simplices.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterator, Mapping, Optional, Tuple

import numpy as np

from tenj.category.data import Fusion2CatData
from tenj.category.labels import (
    LabeledSimplex,
    labels_of,
    restrict,
    search_labelings,
    simplex_labelings,
    ten_j_index_order,
)
from tenj.scalar import ONE, ZERO
from tenj.scalar.linalg import tensors_equal
from tenj.statesum.network import contract, plan_contraction
from tenj.utils.reports import Report
from tenj.utils.rng import RNG_ALGORITHM, make_rng

Face = Tuple[int, ...]

# vertices omitted by the removed facets of each move
REMOVED = {(3, 3): frozenset({0, 2, 4}), (2, 4): frozenset({2, 4}), (1, 5): frozenset({4})}

DEFAULT_BUDGET = 4096
MAX_WITNESSES = 5


@dataclass(frozen=True)
class Side:
    facets: Tuple[Tuple[Face, int], ...]
    """Facets with their orientation signs."""

    vertices: Tuple[Face, ...]
    edges: Tuple[Face, ...]
    triangles: Tuple[Face, ...]
    tets: Tuple[Face, ...]
    """Simplices of this side that the other side does not have."""

    all_triangles: Tuple[Face, ...]
    all_tets: Tuple[Face, ...]


@dataclass(frozen=True)
class MoveShape:
    kind: Tuple[int, int]
    removed: Side
    added: Side
    edges: Tuple[Face, ...]
    triangles: Tuple[Face, ...]
    tets: Tuple[Face, ...]
    """Shared simplices; ``tets`` is also the axis order of both sides."""


def _closure(facets, size: int) -> FrozenSet[Face]:
    return frozenset(s for f in facets for s in combinations(f, size))


@lru_cache(maxsize=None)
def move_shape(kind: Tuple[int, int]) -> MoveShape:
    """The two sides of a (p, q) move on the boundary of the 5-simplex on 0..5."""
    if kind not in REMOVED:
        raise ValueError(f"unknown move kind {kind}, expected one of {sorted(REMOVED)}")
    omitted = REMOVED[kind]

    def facet(i: int) -> Face:
        return tuple(v for v in range(6) if v != i)

    p = tuple((facet(i), (-1) ** i) for i in range(6) if i in omitted)
    q = tuple((facet(i), (-1) ** (i + 1)) for i in range(6) if i not in omitted)
    p_faces = [_closure([f for f, _ in p], k) for k in range(1, 5)]
    q_faces = [_closure([f for f, _ in q], k) for k in range(1, 5)]
    shared = [sorted(a & b) for a, b in zip(p_faces, q_faces)]

    def side(facets, faces) -> Side:
        inner = [sorted(f - set(s)) for f, s in zip(faces, shared)]
        return Side(
            facets,
            tuple(inner[0]),
            tuple(inner[1]),
            tuple(inner[2]),
            tuple(inner[3]),
            tuple(sorted(faces[2])),
            tuple(sorted(faces[3])),
        )

    return MoveShape(
        kind, side(p, p_faces), side(q, q_faces), tuple(shared[1]), tuple(shared[2]), tuple(shared[3])
    )


def side_amplitude(
    cat: Fusion2CatData,
    shape: MoveShape,
    side: Side,
    edges: Mapping[Face, str],
    triangles: Mapping[Face, str],
) -> np.ndarray:
    """Normalized sum over the inner labels of one side, axes in ``shape.tets`` order."""
    out_shape = tuple(cat.tetra_dim(labels_of(t, edges, triangles)) for t in shape.tets)
    total = np.full(out_shape, ZERO, dtype=object)
    if 0 in out_shape:
        return total
    inner_vertex_factor = cat.total_dimension.inverse() ** len(side.vertices)
    nodes = []
    for f, eps in side.facets:
        nodes.append(tuple((_face(f, face), slot) for face, slot in ten_j_index_order(eps)))
    plans: Dict[Tuple[int, ...], Any] = {}
    for e, t in search_labelings(
        cat,
        side.edges,
        side.triangles,
        side.all_triangles,
        side.all_tets,
        known_edges=edges,
        known_triangles=triangles,
    ):
        weight = inner_vertex_factor
        for edge in side.edges:
            weight = weight * cat.d(e[edge]).inverse()
        for tri in side.triangles:
            weight = weight * cat.dim_mor[t[tri]]
        tensors = [cat.ten_j(labels_of(f, e, t), eps) for f, eps in side.facets]
        dims = {tet: cat.tetra_dim(labels_of(tet, e, t)) for tet in side.all_tets}
        key = tuple(dims[tet] for tet in side.all_tets)
        if key not in plans:
            plans[key] = plan_contraction(nodes, dims)
        copairings = {tet: cat.copairing(labels_of(tet, e, t)) for tet in side.tets}
        value = contract(plans[key], tensors, copairings, output=shape.tets)
        total = total + weight * value
    return total


def _face(facet: Face, positions: Tuple[int, ...]) -> Face:
    return tuple(facet[k] for k in positions)


def boundary_labelings(
    cat: Fusion2CatData, shape: MoveShape, rng: Optional[np.random.Generator] = None
) -> Iterator[Tuple[Dict[Face, str], Dict[Face, str]]]:
    """Labelings of the shared simplices whose shared tetrahedron spaces are all nonzero."""
    for e, t in search_labelings(
        cat, shape.edges, shape.triangles, shape.triangles, shape.tets, rng=rng
    ):
        yield dict(e), dict(t)


def _witness(kind, edges, triangles, lhs, rhs) -> Dict[str, Any]:
    return {
        "move": list(kind),
        "edges": {"".join(map(str, k)): v for k, v in sorted(edges.items())},
        "triangles": {"".join(map(str, k)): v for k, v in sorted(triangles.items())},
        "removed side": lhs,
        "added side": rhs,
    }


def check_pachner(
    cat: Fusion2CatData,
    kind: Tuple[int, int],
    exhaustive: bool = True,
    budget: Optional[int] = None,
    labeling: Optional[Tuple[Mapping[Face, str], Mapping[Face, str]]] = None,
    seed: int = 0,
) -> Report:
    """Compare both sides of a move for one boundary labeling, or for many.

    With ``labeling`` only that boundary labeling is checked. Otherwise the shared simplices are
    enumerated in search order when ``exhaustive`` (a budget hit is reported as SKIPPED) or in a
    seeded random order, stopping at ``budget``.
    """
    shape = move_shape(kind)
    check = f"pachner{kind}".replace(" ", "")
    report = Report(f"{check} on {cat.name}".strip())
    if labeling is not None:
        candidates: Any = [labeling]
    else:
        rng = None if exhaustive else make_rng(seed)
        candidates = boundary_labelings(cat, shape, rng=rng)
        if not exhaustive:
            report.meta["rng"] = RNG_ALGORITHM
            report.meta["seed"] = seed
    checked = 0
    failures = 0
    truncated = False
    for edges, triangles in candidates:
        if budget is not None and checked >= budget:
            truncated = True
            break
        checked += 1
        lhs = side_amplitude(cat, shape, shape.removed, edges, triangles)
        rhs = side_amplitude(cat, shape, shape.added, edges, triangles)
        if not tensors_equal(lhs, rhs):
            failures += 1
            if failures <= MAX_WITNESSES:
                report.fail(
                    check,
                    "the two sides of the move differ",
                    _witness(kind, edges, triangles, lhs, rhs),
                )
    report.meta["labelings"] = checked
    if failures > MAX_WITNESSES:
        report.fail(check, f"{failures - MAX_WITNESSES} further failing boundary labelings")
    if not failures:
        report.ok(check, f"{checked} boundary labelings")
    if truncated and exhaustive:
        report.skip(f"{check} exhaustive", f"stopped after {budget} boundary labelings")
    return report


def check_pachner_33(cat: Fusion2CatData, **kwargs) -> Report:
    return check_pachner(cat, (3, 3), **kwargs)


def check_pachner_24(cat: Fusion2CatData, **kwargs) -> Report:
    return check_pachner(cat, (2, 4), **kwargs)


def check_pachner_15(cat: Fusion2CatData, **kwargs) -> Report:
    return check_pachner(cat, (1, 5), **kwargs)


def check_pachner_all(cat: Fusion2CatData, **kwargs) -> Report:
    report = Report(f"pachner identities on {cat.name}".strip())
    for kind in ((3, 3), (2, 4), (1, 5)):
        sub = check_pachner(cat, kind, **kwargs)
        report.extend(sub)
        report.meta[f"{kind[0]}{kind[1]} labelings"] = sub.meta.get("labelings", 0)
    return report


# z+ maps V+(0123) V+(0134) V+(1234) -> V+(0234) V+(0124); z- goes back
PLUS_INPUTS: Tuple[Face, ...] = ((0, 1, 2, 3), (0, 1, 3, 4), (1, 2, 3, 4))
PLUS_OUTPUTS: Tuple[Face, ...] = ((0, 2, 3, 4), (0, 1, 2, 4))


def _tet(simplex: LabeledSimplex, face: Face):
    return restrict(simplex, 5, face)


def z_plus(cat: Fusion2CatData, simplex: LabeledSimplex) -> np.ndarray:
    """The positive 10j symbol with its V- slots turned into V+ outputs.

    Axes: (0123, 0134, 1234, 0234, 0124). Zero-dimensional spaces give an empty map.
    """
    shape = tuple(cat.tetra_dim(_tet(simplex, f)) for f in PLUS_INPUTS + PLUS_OUTPUTS)
    if 0 in shape:
        return np.empty(shape, dtype=object)
    tensor = cat.ten_j(simplex, 1)
    c0124 = cat.copairing(_tet(simplex, (0, 1, 2, 4)))
    c0234 = cat.copairing(_tet(simplex, (0, 2, 3, 4)))
    out = np.tensordot(tensor, c0124, axes=([3], [1]))  # a b c v y
    out = np.tensordot(out, c0234, axes=([3], [1]))  # a b c y x
    return out.transpose(0, 1, 2, 4, 3)


def z_minus(cat: Fusion2CatData, simplex: LabeledSimplex) -> np.ndarray:
    """The negative 10j symbol with its V- slots turned into V+ outputs.

    Axes: (0234, 0124, 0123, 0134, 1234).
    """
    shape = tuple(cat.tetra_dim(_tet(simplex, f)) for f in PLUS_OUTPUTS + PLUS_INPUTS)
    if 0 in shape:
        return np.empty(shape, dtype=object)
    tensor = cat.ten_j(simplex, -1)
    out = np.tensordot(tensor, cat.copairing(_tet(simplex, (1, 2, 3, 4))), axes=([2], [1]))
    out = np.tensordot(out, cat.copairing(_tet(simplex, (0, 1, 3, 4))), axes=([2], [1]))
    out = np.tensordot(out, cat.copairing(_tet(simplex, (0, 1, 2, 3))), axes=([2], [1]))
    return out.transpose(0, 1, 4, 3, 2)  # x y e b c -> x y c b e


# positions in the lexicographic label lists of a 4-simplex
_EDGE_13 = 5
_TRI_013, _TRI_024, _TRI_123, _TRI_134 = 1, 4, 6, 8


def _split(simplex: LabeledSimplex):
    edges, tris = simplex
    outer_edges = edges[:_EDGE_13] + edges[_EDGE_13 + 1 :]
    outer_tris = tuple(x for k, x in enumerate(tris) if k not in (_TRI_013, _TRI_024, _TRI_123, _TRI_134))
    inner = (edges[_EDGE_13], tris[_TRI_013], tris[_TRI_123], tris[_TRI_134])
    return (outer_edges, outer_tris), inner, tris[_TRI_024]


def check_section_identity(cat: Fusion2CatData, max_outer: Optional[int] = None) -> Report:
    """The normalized z- summed over the middle labels is a section of the normalized z+.

    For every outer labeling of a 4-simplex (all labels except edge 13 and triangles 013, 123,
    134, 024) and every pair of values f, f' of triangle 024,

        sum over middle labels of  z+(f') . z-(f)  =  delta(f, f') * identity

    with z+ weighted by dim(f024) and z- by dim(f013) dim(f123) dim(f134) / d(X13).
    """
    report = Report(f"section identity on {cat.name}".strip())
    groups: Dict[Any, Dict[str, Dict[Any, LabeledSimplex]]] = {}
    for simplex in simplex_labelings(cat, 5):
        outer, inner, f024 = _split(simplex)
        groups.setdefault(outer, {}).setdefault(f024, {})[inner] = simplex
    bad = 0
    checked = 0
    for outer, by_f in groups.items():
        if max_outer is not None and checked >= max_outer:
            report.skip("section identity exhaustive", f"stopped after {max_outer} outer labelings")
            break
        checked += 1
        for f, inner_f in by_f.items():
            for g, inner_g in by_f.items():
                total = None
                for inner, s_f in inner_f.items():
                    s_g = inner_g.get(inner)
                    if s_g is None:
                        continue
                    x13, f013, f123, f134 = inner
                    scale_minus = (
                        cat.dim_mor[f013] * cat.dim_mor[f123] * cat.dim_mor[f134] / cat.d(x13)
                    )
                    zm = z_minus(cat, s_f) * scale_minus
                    zp = z_plus(cat, s_g) * cat.dim_mor[g]
                    term = np.tensordot(zm, zp, axes=([2, 3, 4], [0, 1, 2]))
                    total = term if total is None else total + term
                out_f = _output_dims(cat, inner_f)
                out_g = _output_dims(cat, inner_g)
                expected = _identity_map(out_f, out_g, f == g)
                if total is None:
                    total = np.full(out_f + out_g, ZERO, dtype=object)
                if not tensors_equal(total, expected):
                    bad += 1
                    if bad <= MAX_WITNESSES:
                        report.fail(
                            "section identity",
                            f"z+ z- is not {'the identity' if f == g else 'zero'}",
                            {"outer": outer, "f024": f, "f024'": g, "value": total},
                        )
    report.meta["outer labelings"] = checked
    if bad > MAX_WITNESSES:
        report.fail("section identity", f"{bad - MAX_WITNESSES} further failures")
    if not bad:
        report.ok("section identity", f"{checked} outer labelings")
    return report


def _output_dims(cat: Fusion2CatData, inner_map: Mapping[Any, LabeledSimplex]) -> Tuple[int, ...]:
    simplex = next(iter(inner_map.values()))
    return tuple(cat.tetra_dim(_tet(simplex, f)) for f in PLUS_OUTPUTS)


def _identity_map(dims_in: Tuple[int, ...], dims_out: Tuple[int, ...], diagonal: bool) -> np.ndarray:
    out = np.full(dims_in + dims_out, ZERO, dtype=object)
    if diagonal:
        for x in range(dims_in[0]):
            for y in range(dims_in[1]):
                out[x, y, x, y] = ONE
    return out
