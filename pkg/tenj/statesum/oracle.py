"""Flat connection counting, independent of the category and tensor machinery.

Homomorphisms from the edge-path group of the 2-skeleton to G correspond to G-labelings of the
edges with g_uv g_vw = g_uw on every triangle u < v < w and the unit on a spanning forest. The
untwisted Dijkgraaf-Witten state sum equals their number divided by |G| per connected component.
"""

from typing import Dict, List, Optional, Tuple

from tenj.category.groups import GroupPresentation
from tenj.scalar import Cyclotomic
from tenj.simplicial.orientation import OrderedOrientedComplex
from tenj.statesum.states import skeleton, spanning_forest

Edge = Tuple


def _propagate(
    labels: Dict[Edge, str], triangles: List[Tuple[Edge, Edge, Edge]], group: GroupPresentation
) -> bool:
    """Fill every edge forced by a triangle with two labeled edges; False on a contradiction."""
    changed = True
    while changed:
        changed = False
        for a, b, c in triangles:
            known = (a in labels) + (b in labels) + (c in labels)
            if known == 3:
                if group.mul(labels[a], labels[b]) != labels[c]:
                    return False
            elif known == 2:
                if c not in labels:
                    labels[c] = group.mul(labels[a], labels[b])
                elif b not in labels:
                    labels[b] = group.mul(group.inv(labels[a]), labels[c])
                else:
                    labels[a] = group.mul(labels[c], group.inv(labels[b]))
                changed = True
    return True


def flat_connection_count(o: OrderedOrientedComplex, group: GroupPresentation) -> int:
    """Number of homomorphisms from the edge-path group of each component, multiplied over components."""
    sk = skeleton(o)
    triangles = [((t[0], t[1]), (t[1], t[2]), (t[0], t[2])) for t in sk.triangles]
    start = {e: group.unit for e in spanning_forest(o)}

    def count(labels: Dict[Edge, str]) -> int:
        if not _propagate(labels, triangles, group):
            return 0
        free: Optional[Edge] = next((e for e in sk.edges if e not in labels), None)
        if free is None:
            return 1
        total = 0
        for g in group.elements:
            branch = dict(labels)
            branch[free] = g
            total += count(branch)
        return total

    return count(start)


def components(o: OrderedOrientedComplex) -> int:
    return len(o.order) - len(spanning_forest(o))


def untwisted_dw_value(o: OrderedOrientedComplex, group: GroupPresentation) -> Cyclotomic:
    """|Hom(pi_1, G)| / |G| for each component, the untwisted Dijkgraaf-Witten invariant."""
    n = Cyclotomic.from_rational(len(group))
    return Cyclotomic.from_rational(flat_connection_count(o, group)) / n ** components(o)
