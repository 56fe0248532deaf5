"""Finite pure simplicial complexes, links and the singular 4-manifold validator."""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from tenj.errors import MalformedFacet, UnknownSimplex
from tenj.utils.reports import Report

Vertex = Hashable
Simplex = FrozenSet[Vertex]


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: Tuple[Vertex, ...]
    """Vertex identifiers, in the order they were introduced."""

    facets: FrozenSet[Simplex]
    """Maximal simplices. All have the same size for the complexes used here."""

    def __post_init__(self):
        seen = set(self.vertices)
        assert len(seen) == len(self.vertices), "duplicate vertex identifiers"
        for f in self.facets:
            assert f <= seen, f"facet {sorted(f, key=str)} uses unknown vertices"

    @cached_property
    def dimension(self) -> int:
        if not self.facets:
            return -1
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @cached_property
    def skeleta(self) -> Tuple[FrozenSet[Simplex], ...]:
        """``skeleta[i]`` is K_i, the set of i-simplices."""
        levels: List[set] = [set() for _ in range(self.dimension + 1)]
        for f in self.facets:
            for size in range(1, len(f) + 1):
                for sub in combinations(f, size):
                    levels[size - 1].add(frozenset(sub))
        return tuple(frozenset(level) for level in levels)

    def k(self, i: int) -> FrozenSet[Simplex]:
        if i < 0 or i > self.dimension:
            return frozenset()
        return self.skeleta[i]

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(level) for level in self.skeleta)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * n for i, n in enumerate(self.f_vector()))

    def __contains__(self, simplex: Iterable[Vertex]) -> bool:
        s = frozenset(simplex)
        if not s:
            return bool(self.facets)
        return s in self.k(len(s) - 1)

    @cached_property
    def cofaces(self) -> Dict[Simplex, Tuple[Simplex, ...]]:
        """Facets containing each simplex."""
        star: Dict[Simplex, List[Simplex]] = {}
        for f in self.facets:
            for size in range(1, len(f) + 1):
                for sub in combinations(f, size):
                    star.setdefault(frozenset(sub), []).append(f)
        return {s: tuple(fs) for s, fs in star.items()}

    def star(self, simplex: Iterable[Vertex]) -> Tuple[Simplex, ...]:
        return self.cofaces.get(frozenset(simplex), ())

    def graph(self) -> nx.Graph:
        """The 1-skeleton."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(tuple(e) for e in self.k(1))
        return g

    def dual_graph(self) -> nx.Graph:
        """Facets adjacent along codimension-one faces; edges carry the shared face."""
        g = nx.Graph()
        g.add_nodes_from(self.facets)
        for ridge, fs in self.cofaces.items():
            if len(ridge) == self.dimension and len(fs) == 2:
                g.add_edge(fs[0], fs[1], ridge=ridge)
        return g


def build_complex(
    facets: Iterable[Sequence[Vertex]],
    vertices: Optional[Sequence[Vertex]] = None,
    dim: Optional[int] = 4,
) -> SimplicialComplex:
    """Build a complex from its facets; duplicates are merged.

    Args:
        facets: vertex tuples of the maximal simplices
        vertices: optional explicit vertex list (must cover every facet)
        dim: required facet dimension, or None for any uniform dimension

    Raises:
        MalformedFacet: on a repeated vertex or a facet of the wrong size
    """
    order: List[Vertex] = list(vertices) if vertices is not None else []
    known = set(order)
    out = set()
    sizes = set()
    for i, facet in enumerate(facets):
        facet = tuple(facet)
        if len(set(facet)) != len(facet):
            raise MalformedFacet(f"facet #{i} {list(facet)} repeats a vertex")
        if dim is not None and len(facet) != dim + 1:
            raise MalformedFacet(f"facet #{i} {list(facet)} has {len(facet)} vertices, need {dim + 1}")
        sizes.add(len(facet))
        for v in facet:
            if v not in known:
                if vertices is not None:
                    raise MalformedFacet(f"facet #{i} uses undeclared vertex {v!r}")
                known.add(v)
                order.append(v)
        out.add(frozenset(facet))
    if len(sizes) > 1:
        raise MalformedFacet(f"facets of mixed sizes {sorted(sizes)}")
    return SimplicialComplex(tuple(order), frozenset(out))


def link(c: SimplicialComplex, s: Iterable[Vertex]) -> SimplicialComplex:
    """``{t : t and s disjoint, t | s in c}``, as a complex."""
    s = frozenset(s)
    if s not in c:
        raise UnknownSimplex(f"{sorted(s, key=str)} is not a simplex of the complex")
    facets = frozenset(f - s for f in c.star(s)) if s else c.facets
    if facets == frozenset({frozenset()}):
        return SimplicialComplex((), facets)
    verts = tuple(v for v in c.vertices if any(v in f for f in facets))
    return SimplicialComplex(verts, facets)


def _is_connected(c: SimplicialComplex) -> bool:
    if not c.vertices:
        return True
    return nx.is_connected(c.graph())


def _closed_pseudomanifold(c: SimplicialComplex) -> Optional[Simplex]:
    """Return a codimension-one face not in exactly two facets, if any."""
    for ridge in c.k(c.dimension - 1):
        if len(c.star(ridge)) != 2:
            return ridge
    return None


def is_cycle(c: SimplicialComplex) -> bool:
    if c.dimension != 1 or not c.is_pure:
        return False
    g = c.graph()
    return all(d == 2 for _, d in g.degree()) and nx.is_connected(g)


def is_sphere2(c: SimplicialComplex) -> bool:
    """Closed connected surface with Euler characteristic 2 whose vertex links are cycles."""
    if c.dimension != 2 or not c.is_pure:
        return False
    if _closed_pseudomanifold(c) is not None or not _is_connected(c):
        return False
    if c.euler_characteristic() != 2:
        return False
    return all(is_cycle(link(c, {v})) for v in c.vertices)


def is_closed_3manifold(c: SimplicialComplex) -> bool:
    if c.dimension != 3 or not c.is_pure:
        return False
    if _closed_pseudomanifold(c) is not None:
        return False
    return all(is_sphere2(link(c, {v})) for v in c.vertices)


def _name(s: Simplex, c: SimplicialComplex) -> List[Vertex]:
    rank = {v: i for i, v in enumerate(c.vertices)}
    return sorted(s, key=lambda v: rank[v])


def validate_singular_4manifold(c: SimplicialComplex) -> Report:
    """Check that ``c`` is a closed singular combinatorial 4-manifold.

    Edge, triangle and tetrahedron links must be spheres; vertex links only
    closed combinatorial 3-manifolds.
    """
    report = Report("singular 4-manifold")
    report.meta["f_vector"] = list(c.f_vector()) if c.facets else []
    if not c.facets:
        report.ok("empty", "empty complex is vacuously a manifold")
        return report
    if not c.is_pure or c.dimension != 4:
        report.fail("pure", f"facets must all be 4-simplices, got dimension {c.dimension}")
        return report
    report.ok("pure")

    bad = [t for t in c.k(3) if len(c.star(t)) != 2]
    for t in bad:
        report.fail("closed", f"3-simplex in {len(c.star(t))} facets", _name(t, c))
    if not bad:
        report.ok("closed", "every 3-simplex lies in exactly 2 facets")

    bad_tri = [t for t in c.k(2) if not is_cycle(link(c, t))]
    for t in bad_tri:
        report.fail("triangle links", "link is not a single cycle", _name(t, c))
    if not bad_tri:
        report.ok("triangle links")

    bad_edge = [e for e in c.k(1) if not is_sphere2(link(c, e))]
    for e in bad_edge:
        report.fail("edge links", "link is not a 2-sphere", _name(e, c))
    if not bad_edge:
        report.ok("edge links")

    bad_vertex = [v for v in c.vertices if not is_closed_3manifold(link(c, {v}))]
    for v in bad_vertex:
        report.fail("vertex links", "link is not a closed combinatorial 3-manifold", [v])
    if not bad_vertex:
        report.ok("vertex links")
    return report


def is_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    """Simplicial isomorphism test on the vertex-facet incidence graphs."""
    if a.f_vector() != b.f_vector():
        return False

    def incidence(c: SimplicialComplex) -> nx.Graph:
        g = nx.Graph()
        for v in c.vertices:
            g.add_node(("v", v), kind="vertex")
        for f in c.facets:
            g.add_node(("f", f), kind="facet")
            for v in f:
                g.add_edge(("f", f), ("v", v))
        return g

    return nx.is_isomorphic(
        incidence(a), incidence(b), node_match=lambda x, y: x["kind"] == y["kind"]
    )
