"""Bistellar moves on closed 4-complexes.

A (p, q) move picks p facets sharing a simplex J of size 6 - p whose star is
exactly those facets. Their remaining vertices form a simplex I of size p that
must not already be in the complex. The p facets ``J | I - {i}`` are replaced by
the q facets ``J | I - {j}``.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from tenj.errors import InvalidSite, NameCollision, NoValidMove
from tenj.simplicial.complex import Simplex, SimplicialComplex, Vertex
from tenj.simplicial.orientation import MoveRecord, OrderedOrientedComplex, extend_orientation
from tenj.utils.rng import make_rng

KINDS: Tuple[Tuple[int, int], ...] = ((1, 5), (2, 4), (3, 3), (4, 2), (5, 1))

# attempts per requested move before giving up
DEFAULT_RETRY_BUDGET = 50


@dataclass(frozen=True)
class BistellarMove:
    kind: Tuple[int, int]
    """(p, q) with p + q = 6."""

    site: Tuple[Simplex, ...]
    """The p facets to remove."""

    fresh_vertex: Optional[Vertex] = None
    """Name of the new vertex of a (1, 5) move."""

    def __post_init__(self):
        assert self.kind in KINDS, f"unknown move kind {self.kind}"
        assert sum(self.kind) == 6


def fresh_vertex_name(o: OrderedOrientedComplex) -> Vertex:
    """A vertex identifier not used by ``o``, in the style of the existing ones."""
    used = set(o.order)
    ints = [v for v in o.order if isinstance(v, int) and not isinstance(v, bool)]
    if ints and len(ints) == len(o.order):
        return max(ints) + 1
    n = len(o.order)
    while f"v{n}" in used:
        n += 1
    return f"v{n}"


def analyze_site(
    o: OrderedOrientedComplex, move: BistellarMove
) -> Tuple[Simplex, Simplex]:
    """Return (J, I) for a valid site.

    Raises:
        InvalidSite: if the facets do not form the p-facet side of a 5-simplex boundary
        NameCollision: if the fresh vertex of a (1, 5) move already exists
    """
    p, _ = move.kind
    site = [frozenset(f) for f in move.site]
    if len(site) != p or len(set(site)) != p:
        raise InvalidSite(f"a {move.kind} move needs {p} distinct facets, got {len(set(site))}")
    for f in site:
        if f not in o.complex.facets:
            raise InvalidSite(f"{sorted(f, key=str)} is not a facet")
    core = frozenset.intersection(*site)
    if p == 1:
        if move.fresh_vertex is None:
            raise InvalidSite("a (1, 5) move needs a fresh vertex")
        if move.fresh_vertex in o.rank:
            raise NameCollision(f"vertex {move.fresh_vertex!r} already exists")
        return core, frozenset({move.fresh_vertex})
    if len(core) != 6 - p:
        raise InvalidSite(f"the {p} facets share {len(core)} vertices, need {6 - p}")
    apex = frozenset.union(*site) - core
    if len(apex) != p:
        raise InvalidSite(f"the {p} facets span {len(apex)} outer vertices, need {p}")
    if set(o.complex.star(core)) != set(site):
        raise InvalidSite(f"star of {list(o.sorted_simplex(core))} is not the site")
    if apex in o.complex:
        raise InvalidSite(f"{list(o.sorted_simplex(apex))} is already a simplex")
    return core, apex


def apply_bistellar(o: OrderedOrientedComplex, move: BistellarMove) -> OrderedOrientedComplex:
    """Apply a move; new vertices go last in the order and signs extend from the kept facets."""
    core, apex = analyze_site(o, move)
    removed = {frozenset(f) for f in move.site}
    added = {(core | apex) - {j} for j in core}
    facets = (o.complex.facets - removed) | added
    order = o.order + ((move.fresh_vertex,) if move.kind == (1, 5) else ())
    rank = {v: i for i, v in enumerate(order)}
    ordered_core = tuple(sorted(core, key=lambda v: rank[v]))
    ordered_apex = tuple(sorted(apex, key=lambda v: rank[v]))
    record = MoveRecord(move.kind, ordered_core, ordered_apex, ordered_core + ordered_apex)
    complex_ = SimplicialComplex(
        tuple(v for v in order if any(v in f for f in facets)), frozenset(facets)
    )
    order = complex_.vertices
    kept = {f: s for f, s in o.facet_sign.items() if f not in removed}
    return extend_orientation(complex_, order, kept, o.history + (record,))


def candidate_sites(o: OrderedOrientedComplex, kind: Tuple[int, int]) -> List[BistellarMove]:
    """Every valid site of the given kind, in a deterministic order."""
    p, _ = kind
    c = o.complex
    rank = o.rank

    def key(s):
        return [rank[v] for v in o.sorted_simplex(s)]

    if p == 1:
        fresh = fresh_vertex_name(o)
        return [
            BistellarMove(kind, (f,), fresh) for f in sorted(c.facets, key=key)
        ]
    moves = []
    for core in sorted(c.k(5 - p), key=key):
        star = c.star(core)
        if len(star) != p:
            continue
        apex = frozenset.union(*star) - core
        if len(apex) != p or apex in c:
            continue
        moves.append(BistellarMove(kind, tuple(sorted(star, key=key))))
    return moves


def random_move_walk(
    o: OrderedOrientedComplex,
    count: int,
    seed: int = 0,
    kinds: Optional[Sequence[Tuple[int, int]]] = None,
    rng: Optional[np.random.Generator] = None,
    retry_budget: int = DEFAULT_RETRY_BUDGET,
) -> OrderedOrientedComplex:
    """Apply ``count`` random valid moves; deterministic given the seed.

    Raises:
        NoValidMove: if no valid site is found within the retry budget
    """
    rng = rng if rng is not None else make_rng(seed)
    kinds = tuple(tuple(k) for k in (kinds or KINDS))  # type: ignore[misc]
    for step in range(count):
        for _ in range(retry_budget):
            kind = kinds[int(rng.integers(len(kinds)))]
            sites = candidate_sites(o, kind)  # type: ignore[arg-type]
            if sites:
                o = apply_bistellar(o, sites[int(rng.integers(len(sites)))])
                break
        else:
            raise NoValidMove(f"no valid move of kinds {list(kinds)} found at step {step}")
    return o


def move_counts(before: SimplicialComplex, after: SimplicialComplex) -> Dict[int, int]:
    """Change in the number of i-simplices."""
    fb, fa = before.f_vector(), after.f_vector()
    return {i: fa[i] - fb[i] for i in range(5)}


def site_of(o: OrderedOrientedComplex, core: FrozenSet[Vertex]) -> Tuple[Simplex, ...]:
    """The star of ``core``, ordered like ``candidate_sites``."""
    rank = o.rank
    return tuple(sorted(o.complex.star(core), key=lambda f: [rank[v] for v in o.sorted_simplex(f)]))
