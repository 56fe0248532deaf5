"""Labeled simplices, the slot order of 10j tensors, and backtracking search for labelings.

A labeled n-simplex is a pair ``(edges, triangles)`` of object and 1-morphism ids listed in
lexicographic order of vertex pairs and triples: a tetrahedron carries
``(01, 02, 03, 12, 13, 23)`` and ``(012, 013, 023, 123)``. The triangle ``ijk`` must be a
1-morphism in ``fusion(edge ij, edge jk, edge ik)``.
"""

from functools import lru_cache
from itertools import combinations
from typing import (
    TYPE_CHECKING,
    Dict,
    Hashable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from tenj.errors import ParseError

if TYPE_CHECKING:
    from tenj.category.data import Fusion2CatData

ObjectId = str
MorphismId = str
Labels = Tuple[Tuple[ObjectId, ...], Tuple[MorphismId, ...]]
LabeledTetra = Labels
LabeledSimplex = Labels

TETRA_FACES: Tuple[Tuple[int, ...], ...] = tuple(combinations(range(5), 4))


@lru_cache(maxsize=None)
def edge_positions(size: int) -> Dict[Tuple[int, int], int]:
    return {pair: i for i, pair in enumerate(combinations(range(size), 2))}


@lru_cache(maxsize=None)
def triangle_positions(size: int) -> Dict[Tuple[int, int, int], int]:
    return {triple: i for i, triple in enumerate(combinations(range(size), 3))}


def restrict(labels: Labels, size: int, vertices: Sequence[int]) -> Labels:
    """Labels of the face spanned by ``vertices`` (increasing) of a labeled (size-1)-simplex."""
    edges, tris = labels
    ep = edge_positions(size)
    tp = triangle_positions(size)
    return (
        tuple(edges[ep[pair]] for pair in combinations(vertices, 2)),
        tuple(tris[tp[triple]] for triple in combinations(vertices, 3)),
    )


def labels_of(
    vertices: Sequence[Hashable],
    edges: Mapping[Tuple, ObjectId],
    triangles: Mapping[Tuple, MorphismId],
) -> Labels:
    """Labels of the simplex on ``vertices`` (already in vertex order)."""
    return (
        tuple(edges[pair] for pair in combinations(vertices, 2)),
        tuple(triangles[triple] for triple in combinations(vertices, 3)),
    )


def fusion_key(labels: Labels, size: int, triple: Tuple[int, int, int]) -> Tuple[str, str, str]:
    """``(edge ij, edge jk, edge ik)`` for the triangle ``ijk``."""
    i, j, k = triple
    ep = edge_positions(size)
    edges = labels[0]
    return edges[ep[i, j]], edges[ep[j, k]], edges[ep[i, k]]


def ten_j_index_order(eps: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """Tetrahedral faces of a 4-simplex, with their slot type, in 10j argument order."""
    if eps == 1:
        return (
            ((0, 1, 2, 3), 1),
            ((0, 1, 3, 4), 1),
            ((1, 2, 3, 4), 1),
            ((0, 1, 2, 4), -1),
            ((0, 2, 3, 4), -1),
        )
    if eps == -1:
        return (
            ((0, 2, 3, 4), 1),
            ((0, 1, 2, 4), 1),
            ((1, 2, 3, 4), -1),
            ((0, 1, 3, 4), -1),
            ((0, 1, 2, 3), -1),
        )
    raise ValueError(f"orientation sign must be +1 or -1, got {eps}")


def label_key(labels: Labels) -> str:
    edges, tris = labels
    return ",".join(edges) + "|" + ",".join(tris)


def parse_label_key(key: str, size: int, location: str = "") -> Labels:
    n_edges = size * (size - 1) // 2
    n_tris = size * (size - 1) * (size - 2) // 6
    if key.count("|") != 1:
        raise ParseError(f"label key {key!r} must contain exactly one '|'", location)
    left, right = key.split("|")
    edges = tuple(p.strip() for p in left.split(",")) if left else ()
    tris = tuple(p.strip() for p in right.split(",")) if right else ()
    if len(edges) != n_edges or len(tris) != n_tris:
        raise ParseError(
            f"label key {key!r} needs {n_edges} edge and {n_tris} triangle labels", location
        )
    return edges, tris


def scalar_tensor(value, rank: int) -> np.ndarray:
    out = np.empty((1,) * rank, dtype=object)
    out[(0,) * rank] = value
    return out


def _last_position(simplex_parts, position: Mapping, known) -> Optional[int]:
    """Search step at which every part of a constraint is assigned, or None if never."""
    last = -1
    for p in simplex_parts:
        if p in position:
            last = max(last, position[p])
        elif p not in known:
            return None
    return last


def search_labelings(
    cat: "Fusion2CatData",
    edge_vars: Sequence[Tuple],
    triangle_vars: Sequence[Tuple],
    triangles: Sequence[Tuple],
    tetras: Sequence[Tuple] = (),
    known_edges: Optional[Mapping[Tuple, ObjectId]] = None,
    known_triangles: Optional[Mapping[Tuple, MorphismId]] = None,
    edge_domain: Optional[Mapping[Tuple, Sequence[ObjectId]]] = None,
    triangle_domain: Optional[Mapping[Tuple, Sequence[MorphismId]]] = None,
    rng: Optional[np.random.Generator] = None,
) -> Iterator[Tuple[Dict[Tuple, ObjectId], Dict[Tuple, MorphismId]]]:
    """Depth-first enumeration of edge and triangle labels, in the given variable order.

    Simplices are vertex tuples in vertex order; edges are labeled before triangles. A partial
    assignment is dropped as soon as a triangle with all edges labeled has an empty fusion list,
    or a tetrahedron in ``tetras`` with all triangles labeled has a zero-dimensional space.
    Constraints touching simplices that are neither variables nor known are ignored.

    The yielded dictionaries are reused between iterations; copy them to keep a labeling.
    """
    edges: Dict[Tuple, ObjectId] = dict(known_edges or {})
    tris: Dict[Tuple, MorphismId] = dict(known_triangles or {})
    variables: List[Tuple[int, Tuple]] = [(0, e) for e in edge_vars] + [(1, t) for t in triangle_vars]
    position = {var: k for k, var in enumerate(variables)}
    n = len(variables)

    # constraints that become checkable at step k
    tri_checks: List[List[Tuple]] = [[] for _ in range(n)]
    tet_checks: List[List[Tuple]] = [[] for _ in range(n)]
    known_keys = {(0, e) for e in edges} | {(1, t) for t in tris}
    for t in triangles:
        parts = [(0, pair) for pair in combinations(t, 2)]
        last = _last_position(parts, position, known_keys)
        if last is None:
            continue
        if last < 0:
            if not cat.fusion_list(edges[t[0], t[1]], edges[t[1], t[2]], edges[t[0], t[2]]):
                return
            continue
        tri_checks[last].append(t)
    for tet in tetras:
        parts = [(1, tri) for tri in combinations(tet, 3)]
        last = _last_position(parts, position, known_keys)
        if last is None:
            continue
        if last < 0:
            if cat.tetra_dim(labels_of(tet, edges, tris)) == 0:
                return
            continue
        tet_checks[last].append(tet)

    if n == 0:
        yield edges, tris
        return

    objects = tuple(cat.objects)
    edge_domain = edge_domain or {}
    triangle_domain = triangle_domain or {}

    def candidates(k: int) -> List[str]:
        kind, s = variables[k]
        out = []
        if kind == 0:
            for x in edge_domain.get(s, objects):
                edges[s] = x
                if all(
                    cat.fusion_list(edges[t[0], t[1]], edges[t[1], t[2]], edges[t[0], t[2]])
                    for t in tri_checks[k]
                ):
                    out.append(x)
            edges.pop(s, None)
        else:
            allowed = cat.fusion_list(edges[s[0], s[1]], edges[s[1], s[2]], edges[s[0], s[2]])
            if s in triangle_domain:
                restricted = set(triangle_domain[s])
                allowed = tuple(f for f in allowed if f in restricted)
            for f in allowed:
                tris[s] = f
                if all(cat.tetra_dim(labels_of(tet, edges, tris)) > 0 for tet in tet_checks[k]):
                    out.append(f)
            tris.pop(s, None)
        if rng is not None and len(out) > 1:
            out = [out[i] for i in rng.permutation(len(out))]
        return out

    def assign(k: int, value: str) -> None:
        kind, s = variables[k]
        if kind == 0:
            edges[s] = value
        else:
            tris[s] = value

    def clear(k: int) -> None:
        kind, s = variables[k]
        (edges if kind == 0 else tris).pop(s, None)

    options: List[List[str]] = [[] for _ in range(n)]
    cursor = [0] * n
    options[0] = candidates(0)
    k = 0
    while k >= 0:
        if cursor[k] < len(options[k]):
            assign(k, options[k][cursor[k]])
            cursor[k] += 1
            if k == n - 1:
                yield edges, tris
            else:
                k += 1
                options[k] = candidates(k)
                cursor[k] = 0
        else:
            clear(k)
            k -= 1


def simplex_labelings(
    cat: "Fusion2CatData", size: int, nonzero_only: bool = True
) -> Iterator[Labels]:
    """Every labeling of the standard (size-1)-simplex, in lexicographic search order."""
    verts = tuple(range(size))
    pairs = list(combinations(verts, 2))
    triples = list(combinations(verts, 3))
    tets = list(combinations(verts, 4)) if nonzero_only else []
    for edges, tris in search_labelings(cat, pairs, triples, triples, tets):
        yield labels_of(verts, edges, tris)
