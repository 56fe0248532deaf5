"""Labelings of a complex: edges by simple objects, triangles by simple 1-morphisms."""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from tenj.category.data import Fusion2CatData
from tenj.category.labels import search_labelings
from tenj.simplicial.orientation import OrderedOrientedComplex

OrderedSimplex = Tuple


@dataclass(frozen=True)
class State:
    edges: Mapping[OrderedSimplex, str]
    triangles: Mapping[OrderedSimplex, str]


@dataclass(frozen=True)
class Skeleton:
    """Simplices of an ordered complex as order-sorted tuples, in lexicographic order of ranks."""

    vertices: Tuple
    edges: Tuple[OrderedSimplex, ...]
    triangles: Tuple[OrderedSimplex, ...]
    tets: Tuple[OrderedSimplex, ...]
    facets: Tuple[OrderedSimplex, ...]


def skeleton(o: OrderedOrientedComplex) -> Skeleton:
    rank = o.rank

    def level(i: int) -> Tuple[OrderedSimplex, ...]:
        simplices = [o.sorted_simplex(s) for s in o.complex.k(i)]
        return tuple(sorted(simplices, key=lambda t: [rank[v] for v in t]))

    return Skeleton(o.order, level(1), level(2), level(3), o.ordered_facets)


def spanning_forest(o: OrderedOrientedComplex) -> Tuple[OrderedSimplex, ...]:
    """Breadth-first spanning forest of the 1-skeleton, rooted at the first vertex of each component."""
    graph = nx.Graph()
    graph.add_nodes_from(o.order)
    graph.add_edges_from(skeleton(o).edges)
    seen: Set = set()
    tree: List[OrderedSimplex] = []
    for root in o.order:
        if root in seen:
            continue
        seen.add(root)
        for u, v in nx.bfs_edges(graph, root):
            seen.add(v)
            tree.append(o.sorted_simplex((u, v)))
    return tuple(tree)


@dataclass(frozen=True)
class SearchOrder:
    edges: Tuple[OrderedSimplex, ...]
    triangles: Tuple[OrderedSimplex, ...]
    """Free variables, in assignment order."""

    tree: Tuple[OrderedSimplex, ...]

    @property
    def depth(self) -> int:
        return len(self.edges) + len(self.triangles)


def search_order(
    o: OrderedOrientedComplex,
    fixed_edges: Sequence[OrderedSimplex] = (),
    fixed_triangles: Sequence[OrderedSimplex] = (),
) -> SearchOrder:
    """Tree edges first, then the edge completing most triangles, then triangles completing most tetrahedra.

    Constraints are checked as soon as they are complete, so this order prunes early.
    """
    sk = skeleton(o)
    tree = spanning_forest(o)
    assigned: Set[OrderedSimplex] = set(fixed_edges)
    edges: List[OrderedSimplex] = [e for e in tree if e not in assigned]
    assigned.update(edges)
    edge_triangles: Dict[OrderedSimplex, List[OrderedSimplex]] = {e: [] for e in sk.edges}
    for t in sk.triangles:
        for e in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
            edge_triangles[e].append(t)
    remaining = [e for e in sk.edges if e not in assigned]
    while remaining:
        def completed(e):
            return sum(
                all(x == e or x in assigned for x in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])))
                for t in edge_triangles[e]
            )

        best = max(remaining, key=lambda e: (completed(e), -remaining.index(e)))
        edges.append(best)
        assigned.add(best)
        remaining.remove(best)

    tri_assigned: Set[OrderedSimplex] = set(fixed_triangles)
    tri_tets: Dict[OrderedSimplex, List[OrderedSimplex]] = {t: [] for t in sk.triangles}
    for tet in sk.tets:
        for k in range(4):
            tri_tets[tet[:k] + tet[k + 1 :]].append(tet)
    triangles: List[OrderedSimplex] = []
    remaining = [t for t in sk.triangles if t not in tri_assigned]
    while remaining:
        def closes(t):
            return sum(
                all(f == t or f in tri_assigned for f in (tet[:k] + tet[k + 1 :] for k in range(4)))
                for tet in tri_tets[t]
            )

        best = max(remaining, key=lambda t: (closes(t), -remaining.index(t)))
        triangles.append(best)
        tri_assigned.add(best)
        remaining.remove(best)
    return SearchOrder(tuple(edges), tuple(triangles), tree)


def enumerate_states(
    o: OrderedOrientedComplex,
    cat: Fusion2CatData,
    nonzero_only: bool = False,
    known_edges: Optional[Mapping[OrderedSimplex, str]] = None,
    known_triangles: Optional[Mapping[OrderedSimplex, str]] = None,
    order: Optional[SearchOrder] = None,
    rng: Optional[np.random.Generator] = None,
) -> Iterator[State]:
    """Every admissible state exactly once.

    A state is admissible when each triangle label lies in the fusion list of its edges; with
    ``nonzero_only`` states with a zero-dimensional tetrahedron space are skipped as well.
    """
    sk = skeleton(o)
    if order is None:
        order = search_order(o, tuple(known_edges or ()), tuple(known_triangles or ()))
    for e, t in search_labelings(
        cat,
        order.edges,
        order.triangles,
        sk.triangles,
        sk.tets if nonzero_only else (),
        known_edges=known_edges,
        known_triangles=known_triangles,
        rng=rng,
    ):
        yield State(dict(e), dict(t))


def count_states(o: OrderedOrientedComplex, cat: Fusion2CatData, nonzero_only: bool = False) -> int:
    sk = skeleton(o)
    order = search_order(o)
    tets = sk.tets if nonzero_only else ()
    return sum(1 for _ in search_labelings(cat, order.edges, order.triangles, sk.triangles, tets))
