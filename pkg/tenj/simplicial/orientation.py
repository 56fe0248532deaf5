"""Vertex orders, orientation signs and face maps of ordered oriented complexes."""

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from tenj.errors import (
    IndexOutOfRange,
    NonOrientable,
    NotAFace,
    UnknownSimplex,
    ValidationError,
)
from tenj.simplicial.complex import (
    Simplex,
    SimplicialComplex,
    Vertex,
    validate_singular_4manifold,
)


@dataclass(frozen=True)
class MoveRecord:
    kind: Tuple[int, int]
    """(p, q): p facets removed, q facets added."""

    core: Tuple[Vertex, ...]
    """The simplex J shared by all removed facets, in vertex order."""

    apex: Tuple[Vertex, ...]
    """The simplex I spanned by the added interior, in vertex order."""

    vertex_map: Tuple[Vertex, ...]
    """Vertex assigned to each index 0..5 of the model 5-simplex (core, then apex)."""

    def to_dict(self) -> Dict:
        return {
            "kind": list(self.kind),
            "core": list(self.core),
            "apex": list(self.apex),
            "vertex_map": list(self.vertex_map),
        }


@dataclass(frozen=True, eq=False)
class OrderedOrientedComplex:
    complex: SimplicialComplex
    order: Tuple[Vertex, ...]
    """Total order on the vertices."""

    facet_sign: Mapping[Simplex, int]
    """Sign of each facet relative to the orientation given by the vertex order."""

    certificate: Tuple[Tuple[Simplex, Simplex], ...] = ()
    """Dual-graph spanning forest used to propagate the signs."""

    history: Tuple[MoveRecord, ...] = field(default=())
    """Bistellar moves applied since the complex was loaded."""

    def __post_init__(self):
        assert set(self.order) == set(self.complex.vertices), "order must cover all vertices"
        assert len(self.order) == len(self.complex.vertices), "order repeats a vertex"
        assert set(self.facet_sign) == set(self.complex.facets), "every facet needs a sign"
        assert all(s in (1, -1) for s in self.facet_sign.values())

    @classmethod
    def from_complex(
        cls, c: SimplicialComplex, order: Optional[Sequence[Vertex]] = None
    ) -> "OrderedOrientedComplex":
        """Validate, order and orient ``c``; see ``orient_complex``."""
        return orient_complex(c, order)

    @cached_property
    def rank(self) -> Dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.order)}

    def sorted_simplex(self, simplex: Iterable[Vertex]) -> Tuple[Vertex, ...]:
        rank = self.rank
        return tuple(sorted(simplex, key=lambda v: rank[v]))

    @cached_property
    def ordered_facets(self) -> Tuple[Tuple[Vertex, ...], ...]:
        """Facets as order-sorted tuples, in lexicographic order of ranks."""
        rank = self.rank
        facets = [self.sorted_simplex(f) for f in self.complex.facets]
        return tuple(sorted(facets, key=lambda t: [rank[v] for v in t]))

    def sign(self, facet: Iterable[Vertex]) -> int:
        return self.facet_sign[frozenset(facet)]

    def same_as(self, other: "OrderedOrientedComplex") -> bool:
        return (
            self.complex == other.complex
            and self.order == other.order
            and dict(self.facet_sign) == dict(other.facet_sign)
        )


def _omitted_index(ordered: Sequence[Vertex], face: Simplex) -> int:
    missing = [i for i, v in enumerate(ordered) if v not in face]
    assert len(missing) == 1
    return missing[0]


def _propagate(
    c: SimplicialComplex,
    rank: Mapping[Vertex, int],
    fixed: Mapping[Simplex, int],
) -> Tuple[Dict[Simplex, int], List[Tuple[Simplex, Simplex]]]:
    """Extend ``fixed`` signs across the dual graph so shared faces cancel.

    Components without a fixed facet are rooted at their lexicographically
    greatest facet (by vertex ranks), which gets +1.
    """
    graph = c.dual_graph()
    signs: Dict[Simplex, int] = dict(fixed)
    tree: List[Tuple[Simplex, Simplex]] = []
    ordered = {f: tuple(sorted(f, key=lambda v: rank[v])) for f in c.facets}

    def key(f):
        return [rank[v] for v in ordered[f]]

    def sweep(queue: deque) -> None:
        while queue:
            u = queue.popleft()
            for w in sorted(graph.neighbors(u), key=key, reverse=True):
                ridge = graph.edges[u, w]["ridge"]
                i = _omitted_index(ordered[u], ridge)
                j = _omitted_index(ordered[w], ridge)
                expected = -signs[u] * (-1) ** (i + j)
                if w in signs:
                    if signs[w] != expected:
                        raise NonOrientable(
                            f"inconsistent orientation across {list(ordered[u])} and "
                            f"{list(ordered[w])}"
                        )
                    continue
                signs[w] = expected
                tree.append((u, w))
                queue.append(w)

    sweep(deque(sorted(fixed, key=key, reverse=True)))
    for f in sorted(c.facets, key=key, reverse=True):
        if f not in signs:
            signs[f] = 1
            sweep(deque([f]))
    return signs, tree


def orient(c: SimplicialComplex, order: Optional[Sequence[Vertex]] = None) -> Dict[Simplex, int]:
    """Facet signs making induced orientations cancel on every shared 3-face.

    Raises:
        NonOrientable: if no consistent choice exists
    """
    order = tuple(order) if order is not None else c.vertices
    rank = {v: i for i, v in enumerate(order)}
    signs, _ = _propagate(c, rank, {})
    return signs


def orient_complex(
    c: SimplicialComplex, order: Optional[Sequence[Vertex]] = None, validate: bool = True
) -> OrderedOrientedComplex:
    """Validate, order and orient a complex.

    Raises:
        ValidationError: if ``validate`` and the complex is not a closed singular 4-manifold
        NonOrientable: if the complex admits no orientation
    """
    if validate:
        report = validate_singular_4manifold(c)
        if not report.passed:
            raise ValidationError(
                [f"{f.check}: {f.detail} {f.witness}" for f in report.failures]
            )
    order = tuple(order) if order is not None else c.vertices
    rank = {v: i for i, v in enumerate(order)}
    signs, tree = _propagate(c, rank, {})
    return OrderedOrientedComplex(c, order, signs, tuple(tree))


def extend_orientation(
    c: SimplicialComplex,
    order: Sequence[Vertex],
    fixed: Mapping[Simplex, int],
    history: Tuple[MoveRecord, ...] = (),
) -> OrderedOrientedComplex:
    """Orient ``c`` keeping the signs of the facets in ``fixed``."""
    order = tuple(order)
    rank = {v: i for i, v in enumerate(order)}
    signs, tree = _propagate(c, rank, {f: s for f, s in fixed.items() if f in c.facets})
    return OrderedOrientedComplex(c, order, signs, tuple(tree), history)


def face(o: OrderedOrientedComplex, tau: Iterable[Vertex], indices: Sequence[int]) -> Tuple:
    """The face of ``tau`` on its order-selected vertices ``indices``."""
    tau = frozenset(tau)
    if tau not in o.complex:
        raise UnknownSimplex(f"{sorted(tau, key=str)} is not a simplex of the complex")
    ordered = o.sorted_simplex(tau)
    indices = list(indices)
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise IndexOutOfRange(f"face indices {indices} must be strictly increasing")
    if indices and (indices[0] < 0 or indices[-1] >= len(ordered)):
        raise IndexOutOfRange(f"face indices {indices} out of range for a {len(ordered) - 1}-simplex")
    return tuple(ordered[i] for i in indices)


def relative_sign(o: OrderedOrientedComplex, sigma: Iterable[Vertex], kappa: Iterable[Vertex]) -> int:
    """epsilon(Sigma) * (-1)^i where ``kappa`` omits the i-th vertex of ``sigma``."""
    sigma = frozenset(sigma)
    kappa = frozenset(kappa)
    if sigma not in o.facet_sign:
        raise UnknownSimplex(f"{sorted(sigma, key=str)} is not a facet")
    if not kappa < sigma or len(kappa) != len(sigma) - 1:
        raise NotAFace(f"{sorted(kappa, key=str)} is not a 3-face of {sorted(sigma, key=str)}")
    i = _omitted_index(o.sorted_simplex(sigma), kappa)
    return o.facet_sign[sigma] * (-1) ** i


def permutation_parity(source: Sequence, target: Sequence) -> int:
    """Sign of the permutation taking ``source`` to ``target``."""
    position = {v: i for i, v in enumerate(source)}
    perm = [position[v] for v in target]
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def reorder(o: OrderedOrientedComplex, new_order: Sequence[Vertex]) -> OrderedOrientedComplex:
    """Same oriented manifold, new total vertex order."""
    new_order = tuple(new_order)
    if set(new_order) != set(o.order) or len(new_order) != len(o.order):
        raise ValueError("new order must be a permutation of the vertices")
    rank = {v: i for i, v in enumerate(new_order)}
    signs = {}
    for f, s in o.facet_sign.items():
        old = o.sorted_simplex(f)
        new = tuple(sorted(f, key=lambda v: rank[v]))
        signs[f] = s * permutation_parity(old, new)
    return OrderedOrientedComplex(o.complex, new_order, signs, (), o.history)


def reverse_orientation(o: OrderedOrientedComplex) -> OrderedOrientedComplex:
    signs = {f: -s for f, s in o.facet_sign.items()}
    return OrderedOrientedComplex(o.complex, o.order, signs, o.certificate, o.history)


def disjoint_union(
    a: OrderedOrientedComplex, b: OrderedOrientedComplex, tags: Tuple[str, str] = ("a", "b")
) -> OrderedOrientedComplex:
    """Disjoint union, vertices renamed ``tag.vertex``; ``a`` precedes ``b`` in the order."""

    def rename(tag, v):
        return f"{tag}.{v}"

    vertices = tuple(rename(tags[0], v) for v in a.order) + tuple(
        rename(tags[1], v) for v in b.order
    )
    signs = {}
    for tag, part in zip(tags, (a, b)):
        for f, s in part.facet_sign.items():
            signs[frozenset(rename(tag, v) for v in f)] = s
    c = SimplicialComplex(vertices, frozenset(signs))
    return OrderedOrientedComplex(c, vertices, signs)
