"""Standard complexes and the staircase product."""

from itertools import combinations
from typing import Optional, Sequence

from tenj.simplicial.complex import SimplicialComplex, Vertex, build_complex


def boundary_simplex(n: int) -> SimplicialComplex:
    """The boundary of the n-simplex on vertices 0..n."""
    return build_complex(combinations(range(n + 1), n), dim=n - 1)


def circle(n: int = 3) -> SimplicialComplex:
    """A polygon with ``n`` vertices 0..n-1."""
    return build_complex([(i, (i + 1) % n) for i in range(n)], vertices=range(n), dim=1)


def point(name: Vertex = 0) -> SimplicialComplex:
    return build_complex([(name,)], dim=0)


def staircase_product(
    a: SimplicialComplex,
    b: SimplicialComplex,
    order_a: Optional[Sequence[Vertex]] = None,
    order_b: Optional[Sequence[Vertex]] = None,
) -> SimplicialComplex:
    """Staircase triangulation of |a| x |b|; vertices are pairs (u, v).

    Every pair of facets (sigma, tau) of dimensions p and q contributes the
    C(p+q, p) monotone lattice paths through sigma x tau.
    """
    order_a = tuple(order_a) if order_a is not None else a.vertices
    order_b = tuple(order_b) if order_b is not None else b.vertices
    rank_a = {v: i for i, v in enumerate(order_a)}
    rank_b = {v: i for i, v in enumerate(order_b)}
    p, q = a.dimension, b.dimension
    facets = []
    for fa in sorted(a.facets, key=lambda f: sorted(rank_a[v] for v in f)):
        sa = sorted(fa, key=lambda v: rank_a[v])
        for fb in sorted(b.facets, key=lambda f: sorted(rank_b[v] for v in f)):
            sb = sorted(fb, key=lambda v: rank_b[v])
            for steps in combinations(range(p + q), p):
                i = j = 0
                path = [(sa[0], sb[0])]
                for s in range(p + q):
                    if s in steps:
                        i += 1
                    else:
                        j += 1
                    path.append((sa[i], sb[j]))
                facets.append(tuple(path))
    vertices = [(u, v) for u in order_a for v in order_b]
    complex_ = build_complex(facets, dim=p + q)
    used = set(complex_.vertices)
    return SimplicialComplex(tuple(v for v in vertices if v in used), complex_.facets)
