"""Contraction of 10j/copairing tensor networks.

Nodes are tensors whose axes are *slots* ``(tet, sign)``: the tetrahedron the axis belongs to and
whether it indexes V+ (sign 1) or V- (sign -1). A tetrahedron shared by two nodes has one slot of
each sign; it is eliminated by contracting both slots with its copairing C[b, a] (V+ index b, V-
index a). Tetrahedra with a single slot stay open and index the result.
"""

from dataclasses import dataclass
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from tenj.errors import IndexMismatch
from tenj.scalar import ZERO

Slot = Tuple[Hashable, int]


@dataclass(frozen=True)
class ContractionStep:
    left: int
    right: int
    """Positions in the working list; ``right`` is removed after the merge."""

    tets: Tuple[Hashable, ...]
    """Tetrahedra eliminated by this merge."""

    shape: Tuple[int, ...]
    """Shape of the merged tensor."""


@dataclass(frozen=True)
class ContractionPlan:
    nodes: Tuple[Tuple[Slot, ...], ...]
    steps: Tuple[ContractionStep, ...]
    open_slots: Tuple[Slot, ...]
    """Slots of the final tensor, in axis order."""

    cost: int
    """Scalar multiplications estimated over all steps."""

    max_size: int
    """Largest intermediate tensor."""

    @property
    def eliminations(self) -> int:
        return sum(len(s.tets) for s in self.steps)


def _size(tets, dims: Mapping[Hashable, int]) -> int:
    out = 1
    for tet in tets:
        out *= dims[tet]
    return out


def plan_contraction(
    nodes: Sequence[Sequence[Slot]], dims: Mapping[Hashable, int]
) -> ContractionPlan:
    """Greedy pairwise merge order keeping every intermediate tensor as small as possible.

    Raises:
        IndexMismatch: if a tetrahedron has more than two slots or two slots of the same sign
    """
    seen: Dict[Hashable, List[int]] = {}
    for node in nodes:
        for tet, sign in node:
            seen.setdefault(tet, []).append(sign)
    for tet, signs in seen.items():
        if len(signs) > 2 or (len(signs) == 2 and signs[0] == signs[1]):
            raise IndexMismatch(f"tetrahedron {tet} has slots {signs}")

    clusters: List[List[Slot]] = [list(node) for node in nodes]
    steps: List[ContractionStep] = []
    cost = 0
    max_size = max((_size((t for t, _ in c), dims) for c in clusters), default=1)
    while len(clusters) > 1:
        best = None
        tets_of = [{tet for tet, _ in c} for c in clusters]
        for i in range(len(clusters)):
            for j in range(i + 1, len(clusters)):
                shared = tets_of[i] & tets_of[j]
                if not shared:
                    continue
                rest = [s for s in clusters[i] + clusters[j] if s[0] not in shared]
                size = _size((t for t, _ in rest), dims)
                key = (size, size * _size(shared, dims), i, j)
                if best is None or key < best[0]:
                    best = (key, shared, rest)
        if best is None:
            # disconnected network: outer product of the first two clusters
            rest = clusters[0] + clusters[1]
            size = _size((t for t, _ in rest), dims)
            best = ((size, size, 0, 1), set(), rest)
        (size, work, i, j), shared, rest = best
        eliminated = tuple(t for t, _ in clusters[i] if t in shared)
        steps.append(ContractionStep(i, j, eliminated, tuple(dims[t] for t, _ in rest)))
        cost += work
        max_size = max(max_size, size)
        clusters[i] = rest
        del clusters[j]
    open_slots = tuple(clusters[0]) if clusters else ()
    return ContractionPlan(
        tuple(tuple(n) for n in nodes), tuple(steps), open_slots, cost, max_size
    )


def _absorb(tensor: np.ndarray, axis: int, sign: int, copairing: np.ndarray) -> np.ndarray:
    """Contract one slot with the copairing; the axis then indexes the partner slot's space."""
    out = np.tensordot(tensor, copairing, axes=([axis], [0 if sign == 1 else 1]))
    return np.moveaxis(out, -1, axis)


def contract(
    plan: ContractionPlan,
    tensors: Sequence[np.ndarray],
    copairings: Mapping[Hashable, np.ndarray],
    output: Optional[Sequence[Hashable]] = None,
) -> np.ndarray:
    """Execute ``plan``; the result's axes follow ``output`` (tetrahedra) or ``plan.open_slots``.

    A network with a zero-dimensional space anywhere is the zero map.
    """
    assert len(tensors) == len(plan.nodes), "one tensor per node"
    open_tets = [t for t, _ in plan.open_slots]
    order = list(output) if output is not None else open_tets
    assert set(order) == set(open_tets) and len(order) == len(open_tets), (
        "output must list the open tetrahedra"
    )
    if any(t.size == 0 for t in tensors):
        axis_dim = {}
        for tensor, slots in zip(tensors, plan.nodes):
            for k, (tet, _) in enumerate(slots):
                axis_dim[tet] = tensor.shape[k]
        return np.full(tuple(axis_dim[t] for t in order), ZERO, dtype=object)

    working: List[Tuple[np.ndarray, List[Slot]]] = [
        (tensor, list(slots)) for tensor, slots in zip(tensors, plan.nodes)
    ]
    for step in plan.steps:
        a, a_slots = working[step.left]
        b, b_slots = working[step.right]
        a_axes, b_axes = [], []
        for tet in step.tets:
            ia = next(k for k, s in enumerate(a_slots) if s[0] == tet)
            ib = next(k for k, s in enumerate(b_slots) if s[0] == tet)
            a = _absorb(a, ia, a_slots[ia][1], copairings[tet])
            a_axes.append(ia)
            b_axes.append(ib)
        merged = np.tensordot(a, b, axes=(a_axes, b_axes))
        rest = [s for s in a_slots if s[0] not in step.tets]
        rest += [s for s in b_slots if s[0] not in step.tets]
        working[step.left] = (merged, rest)
        del working[step.right]
    result, slots = working[0]
    position = {s[0]: k for k, s in enumerate(slots)}
    return np.transpose(result, [position[t] for t in order]) if order else result


def scalar_of(result: np.ndarray):
    """The single entry of a fully contracted network."""
    assert result.size == 1, f"expected a scalar, got shape {result.shape}"
    return result.reshape(-1)[0]
