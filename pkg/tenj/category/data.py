"""Finite skeletal presentation of a spherical prefusion 2-category."""

from dataclasses import dataclass, field, replace
from functools import cached_property
from itertools import combinations
from threading import Lock
from typing import Any, Dict, Mapping, Optional, Protocol, Tuple

import numpy as np

from tenj.category.groups import RESERVED, GroupPresentation
from tenj.category.labels import (
    LabeledSimplex,
    LabeledTetra,
    MorphismId,
    ObjectId,
    fusion_key,
    restrict,
    simplex_labelings,
    ten_j_index_order,
    triangle_positions,
)
from tenj.errors import IndexMismatch, SingularPairing
from tenj.scalar import ZERO, Cyclotomic, as_cyclotomic, invert_matrix
from tenj.scalar.linalg import tensors_equal
from tenj.utils.reports import Report


class LocalData(Protocol):
    """Tetrahedron spaces, their pairings and the 10j tensors of a category."""

    def tetra_dim(self, tetra: LabeledTetra) -> int:
        ...

    def pairing(self, tetra: LabeledTetra) -> np.ndarray:
        ...

    def ten_j(self, simplex: LabeledSimplex, eps: int) -> np.ndarray:
        ...


@dataclass(frozen=True)
class LabelSymmetry:
    """Group-like label sets: objects form ``objects`` and every nonempty fusion list is ``morphisms``."""

    objects: GroupPresentation
    morphisms: GroupPresentation


@dataclass(frozen=True, eq=False)
class Fusion2CatData:
    objects: Tuple[ObjectId, ...]
    """One representative per equivalence class of simple objects."""

    components: Tuple[Tuple[ObjectId, ...], ...]
    """Partition of the objects into components."""

    dim_obj: Mapping[ObjectId, Cyclotomic]
    dim_end: Mapping[ObjectId, Cyclotomic]
    """Global dimension of the endomorphism category of each object."""

    fusion: Mapping[Tuple[ObjectId, ObjectId, ObjectId], Tuple[MorphismId, ...]]
    """Simple 1-morphisms A # B -> C; absent keys mean the empty list."""

    dim_mor: Mapping[MorphismId, Cyclotomic]
    local: LocalData
    name: str = ""
    unit: Optional[ObjectId] = None
    """The monoidal unit, when the presentation knows it."""

    symmetry: Optional[LabelSymmetry] = None
    provenance: Optional[Dict[str, Any]] = None
    """Generator name and parameters, for generator-reference files."""

    _cache: Dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _lock: Lock = field(default_factory=Lock, init=False, repr=False, compare=False)

    def __post_init__(self):
        assert len(set(self.objects)) == len(self.objects), "duplicate objects"

    def _remember(self, key: Tuple, value: Any) -> Any:
        """Store ``value`` unless another thread stored one first; return the stored one."""
        with self._lock:
            return self._cache.setdefault(key, value)

    @cached_property
    def morphisms(self) -> Tuple[MorphismId, ...]:
        seen: Dict[MorphismId, None] = {}
        for fs in self.fusion.values():
            for f in fs:
                seen.setdefault(f, None)
        return tuple(seen)

    def fusion_list(self, a: ObjectId, b: ObjectId, c: ObjectId) -> Tuple[MorphismId, ...]:
        return self.fusion.get((a, b, c), ())

    @cached_property
    def _component(self) -> Dict[ObjectId, Tuple[ObjectId, ...]]:
        return {a: comp for comp in self.components for a in comp}

    def n(self, a: ObjectId) -> int:
        return len(self._component[a])

    def d(self, a: ObjectId) -> Cyclotomic:
        """dim(A) * dim(End(A)) * n(A)."""
        key = ("d", a)
        cached = self._cache.get(key)
        if cached is None:
            cached = self._remember(key, self.dim_obj[a] * self.dim_end[a] * self.n(a))
        return cached

    @cached_property
    def total_dimension(self) -> Cyclotomic:
        """Sum over components of 1 / dim(End) of a representative."""
        total = ZERO
        for comp in self.components:
            total = total + self.dim_end[comp[0]].inverse()
        return total

    def admissible(self, labels: Tuple, size: int) -> bool:
        """Every triangle label lies in the fusion list of its edges."""
        tp = triangle_positions(size)
        for triple in combinations(range(size), 3):
            if labels[1][tp[triple]] not in self.fusion_list(*fusion_key(labels, size, triple)):
                return False
        return True

    def tetra_dim(self, tetra: LabeledTetra) -> int:
        key = ("dim", tetra)
        cached = self._cache.get(key)
        if cached is None:
            cached = self.local.tetra_dim(tetra) if self.admissible(tetra, 4) else 0
            cached = self._remember(key, cached)
        return cached

    def pairing(self, tetra: LabeledTetra) -> np.ndarray:
        size = self.tetra_dim(tetra)
        if size == 0:
            return np.empty((0, 0), dtype=object)
        mat = self.local.pairing(tetra)
        if mat.shape != (size, size):
            raise IndexMismatch(f"pairing of {tetra} has shape {mat.shape}, space has dimension {size}")
        return mat

    def copairing(self, tetra: LabeledTetra) -> np.ndarray:
        key = ("copairing", tetra)
        cached = self._cache.get(key)
        if cached is None:
            cached = self._remember(key, copairing(self, tetra))
        return cached

    def ten_j(self, simplex: LabeledSimplex, eps: int) -> np.ndarray:
        """The 10j tensor, axes in ``ten_j_index_order(eps)``.

        Raises:
            IndexMismatch: if the tensor shape disagrees with the tetrahedron spaces
        """
        key = ("10j", simplex, eps)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        shape = tuple(self.tetra_dim(restrict(simplex, 5, face)) for face, _ in ten_j_index_order(eps))
        if 0 in shape:
            tensor = np.empty(shape, dtype=object)
        else:
            tensor = self.local.ten_j(simplex, eps)
            if tensor.shape != shape:
                raise IndexMismatch(
                    f"10j tensor of {simplex} (eps={eps}) has shape {tensor.shape}, "
                    f"tetrahedron spaces give {shape}"
                )
        return self._remember(key, tensor)

    def relabel(self, name: str) -> "Fusion2CatData":
        return replace(self, name=name)


def copairing(cat: Fusion2CatData, tetra: LabeledTetra) -> np.ndarray:
    """C = P^-1, indexed (V+ basis, V- basis).

    Raises:
        SingularPairing: if the pairing matrix is not invertible
    """
    mat = cat.pairing(tetra)
    if mat.shape == (0, 0):
        return mat
    if mat.shape == (1, 1):
        if not mat[0, 0]:
            raise SingularPairing(f"pairing of {tetra} is zero")
        out = np.empty((1, 1), dtype=object)
        out[0, 0] = as_cyclotomic(mat[0, 0]).inverse()
        return out
    try:
        return invert_matrix(mat)
    except SingularPairing as e:
        raise SingularPairing(f"pairing of {tetra}: {e}") from None


class TableLocalData:
    """Local data read from explicit tables; omitted 10j entries are zero tensors."""

    def __init__(
        self,
        tetra: Mapping[LabeledTetra, int],
        pairings: Mapping[LabeledTetra, np.ndarray],
        ten_js: Mapping[Tuple[LabeledSimplex, int], np.ndarray],
    ):
        self.tetra = dict(tetra)
        self.pairings = dict(pairings)
        self.ten_js = dict(ten_js)

    def tetra_dim(self, tetra: LabeledTetra) -> int:
        return self.tetra.get(tetra, 0)

    def pairing(self, tetra: LabeledTetra) -> np.ndarray:
        if tetra in self.pairings:
            return self.pairings[tetra]
        raise SingularPairing(f"no pairing listed for {tetra}")

    def ten_j(self, simplex: LabeledSimplex, eps: int) -> np.ndarray:
        if (simplex, eps) in self.ten_js:
            return self.ten_js[simplex, eps]
        shape = tuple(
            self.tetra_dim(restrict(simplex, 5, face)) for face, _ in ten_j_index_order(eps)
        )
        return np.full(shape, ZERO, dtype=object)


@dataclass
class Tables:
    tetra: Dict[LabeledTetra, int]
    pairings: Dict[LabeledTetra, np.ndarray]
    ten_js: Dict[Tuple[LabeledSimplex, int], np.ndarray]


def tabulate(cat: Fusion2CatData) -> Tables:
    """Explicit tables of every labeled tetrahedron and 4-simplex with nonzero spaces."""
    tetra: Dict[LabeledTetra, int] = {}
    pairings: Dict[LabeledTetra, np.ndarray] = {}
    for labels in simplex_labelings(cat, 4):
        tetra[labels] = cat.tetra_dim(labels)
        pairings[labels] = cat.pairing(labels)
    ten_js: Dict[Tuple[LabeledSimplex, int], np.ndarray] = {}
    for labels in simplex_labelings(cat, 5):
        for eps in (1, -1):
            ten_js[labels, eps] = cat.ten_j(labels, eps)
    return Tables(tetra, pairings, ten_js)


def explicit_copy(cat: Fusion2CatData, name: Optional[str] = None) -> Fusion2CatData:
    """The same category backed by tabulated local data."""
    t = tabulate(cat)
    return Fusion2CatData(
        objects=cat.objects,
        components=cat.components,
        dim_obj=dict(cat.dim_obj),
        dim_end=dict(cat.dim_end),
        fusion=dict(cat.fusion),
        dim_mor=dict(cat.dim_mor),
        local=TableLocalData(t.tetra, t.pairings, t.ten_js),
        name=cat.name if name is None else name,
        unit=cat.unit,
        symmetry=cat.symmetry,
    )


def same_data(a: Fusion2CatData, b: Fusion2CatData) -> bool:
    """Field-by-field equality of two presentations, local data compared through their tables."""
    if a.objects != b.objects or a.unit != b.unit:
        return False
    if {frozenset(c) for c in a.components} != {frozenset(c) for c in b.components}:
        return False
    if dict(a.dim_obj) != dict(b.dim_obj) or dict(a.dim_end) != dict(b.dim_end):
        return False
    fa = {k: tuple(v) for k, v in a.fusion.items() if v}
    fb = {k: tuple(v) for k, v in b.fusion.items() if v}
    if fa != fb or dict(a.dim_mor) != dict(b.dim_mor):
        return False
    ta, tb = tabulate(a), tabulate(b)
    if ta.tetra != tb.tetra or set(ta.ten_js) != set(tb.ten_js):
        return False
    if any(not tensors_equal(ta.pairings[k], tb.pairings[k]) for k in ta.pairings):
        return False
    return all(tensors_equal(v, tb.ten_js[k]) for k, v in ta.ten_js.items())


def validate_category(cat: Fusion2CatData, max_simplices: Optional[int] = None) -> Report:
    """Check the invariants of a presentation.

    Covers the component partition, nonzero d(A), dim(f) and dim(C), identifier syntax,
    invertible pairings on every nonzero tetrahedron space, and 10j tensor shapes.
    ``max_simplices`` caps the number of labeled 4-simplices inspected.
    """
    report = Report(f"category {cat.name}".strip())
    report.meta["objects"] = len(cat.objects)
    report.meta["morphisms"] = len(cat.morphisms)

    flat = [a for comp in cat.components for a in comp]
    if sorted(flat) != sorted(cat.objects) or len(flat) != len(set(flat)):
        report.fail("components", "components do not partition the objects", list(cat.components))
    else:
        report.ok("components", f"{len(cat.components)} components")

    bad_ids = [x for x in tuple(cat.objects) + cat.morphisms if any(c in x for c in RESERVED)]
    for x in bad_ids:
        report.fail("identifiers", "identifier uses a reserved character", x)
    if not bad_ids:
        report.ok("identifiers")

    zero_d = []
    for a in cat.objects:
        if a not in cat.dim_obj or a not in cat.dim_end or not cat.d(a):
            zero_d.append(a)
    for a in zero_d:
        report.fail("d(A) nonzero", "missing or zero dim(A) * dim(End(A)) * n(A)", a)
    if not zero_d:
        report.ok("d(A) nonzero")

    bad_mor = [f for f in cat.morphisms if f not in cat.dim_mor or not cat.dim_mor[f]]
    for f in bad_mor:
        report.fail("dim(f) nonzero", "missing or zero 1-morphism dimension", f)
    if not bad_mor:
        report.ok("dim(f) nonzero")

    if zero_d or any(a not in cat.dim_end for comp in cat.components for a in comp[:1]):
        report.skip("dim(C) nonzero", "object dimensions are incomplete")
    elif not cat.total_dimension:
        report.fail("dim(C) nonzero", "total dimension vanishes")
    else:
        report.ok("dim(C) nonzero", f"dim(C) = {cat.total_dimension}")
    report.meta["dim(C)"] = cat.total_dimension if report.passed else None

    bad_fusion = [
        key for key in cat.fusion if any(x not in cat.objects for x in key)
    ]
    for key in bad_fusion:
        report.fail("fusion keys", "fusion key names an unknown object", list(key))
    if bad_fusion or not report.passed:
        return report
    report.ok("fusion keys")

    tetra_count = 0
    bad_pairing = []
    for labels in simplex_labelings(cat, 4):
        tetra_count += 1
        try:
            copairing(cat, labels)
        except (SingularPairing, IndexMismatch) as e:
            bad_pairing.append((labels, str(e)))
    for labels, msg in bad_pairing[:10]:
        report.fail("pairings", msg, labels)
    if not bad_pairing:
        report.ok("pairings", f"{tetra_count} nonzero tetrahedron spaces, all pairings invertible")
    report.meta["tetrahedra"] = tetra_count

    simplex_count = 0
    bad_shape = []
    for labels in simplex_labelings(cat, 5):
        if max_simplices is not None and simplex_count >= max_simplices:
            report.skip("10j shapes", f"stopped after {max_simplices} labeled 4-simplices")
            break
        simplex_count += 1
        for eps in (1, -1):
            try:
                cat.ten_j(labels, eps)
            except IndexMismatch as e:
                bad_shape.append((labels, str(e)))
    for labels, msg in bad_shape[:10]:
        report.fail("10j shapes", msg, labels)
    if not bad_shape:
        report.ok("10j shapes", f"{simplex_count} labeled 4-simplices")
    report.meta["simplices"] = simplex_count
    return report
