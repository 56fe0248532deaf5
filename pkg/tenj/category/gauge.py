"""Change of basis of the tetrahedron spaces.

Rescaling the bases as e+_b -> lambda_b e+_b and e-_a -> mu_a e-_a turns the pairing into
M P L (M = diag(mu), L = diag(lambda)) and multiplies each 10j entry by the scale of every basis
vector it is evaluated on. The state sum does not see such a change.
"""

from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple
from zlib import crc32

import numpy as np

from tenj.category.data import Fusion2CatData
from tenj.category.labels import LabeledSimplex, LabeledTetra, label_key, restrict, ten_j_index_order
from tenj.scalar import ONE, Cyclotomic
from tenj.utils.rng import make_rng

UNITS: Tuple[Cyclotomic, ...] = (
    ONE,
    -ONE,
    Cyclotomic.from_rational(2),
    Cyclotomic.from_rational("1/3"),
    Cyclotomic.zeta(4, 1),
    Cyclotomic.zeta(3, 1),
    Cyclotomic.from_rational(1) + Cyclotomic.zeta(4, 1),
)


@dataclass(frozen=True)
class BasisRescaling:
    seed: Optional[int] = None
    """Random units per labeled tetrahedron when set."""

    constant: Cyclotomic = ONE
    """Scale of every V+ basis vector when ``seed`` is None; V- vectors keep their scale."""

    def scales(self, tetra: LabeledTetra, size: int) -> Tuple[List[Cyclotomic], List[Cyclotomic]]:
        """(lambda, mu) for the V+ and V- bases of ``tetra``."""
        if self.seed is None:
            return [self.constant] * size, [ONE] * size
        rng = make_rng((self.seed * 1_000_003 + crc32(label_key(tetra).encode())) % 2**64)
        picks = rng.integers(len(UNITS), size=2 * size)
        return [UNITS[k] for k in picks[:size]], [UNITS[k] for k in picks[size:]]

    @property
    def is_identity(self) -> bool:
        return self.seed is None and self.constant == ONE


def identity_rescaling() -> BasisRescaling:
    return BasisRescaling()


def random_rescaling(seed: int) -> BasisRescaling:
    return BasisRescaling(seed=seed)


def constant_rescaling(value) -> BasisRescaling:
    return BasisRescaling(constant=value if isinstance(value, Cyclotomic) else Cyclotomic.from_rational(value))


class GaugedLocalData:
    """Local data of ``base`` in rescaled bases.

    With ``compensate=False`` only the 10j tensors are rescaled, which is not a change of basis.
    """

    def __init__(self, base: Fusion2CatData, rescaling: BasisRescaling, compensate: bool = True):
        self.base = base
        self.rescaling = rescaling
        self.compensate = compensate

    def tetra_dim(self, tetra: LabeledTetra) -> int:
        return self.base.tetra_dim(tetra)

    def pairing(self, tetra: LabeledTetra) -> np.ndarray:
        mat = self.base.pairing(tetra)
        if not self.compensate:
            return mat
        lam, mu = self.rescaling.scales(tetra, mat.shape[0])
        out = np.empty(mat.shape, dtype=object)
        for a in range(mat.shape[0]):
            for b in range(mat.shape[1]):
                out[a, b] = mu[a] * mat[a, b] * lam[b]
        return out

    def ten_j(self, simplex: LabeledSimplex, eps: int) -> np.ndarray:
        tensor = self.base.ten_j(simplex, eps).copy()
        for axis, (face, slot) in enumerate(ten_j_index_order(eps)):
            tetra = restrict(simplex, 5, face)
            lam, mu = self.rescaling.scales(tetra, tensor.shape[axis])
            tensor = _scale_axis(tensor, axis, lam if slot == 1 else mu)
        return tensor


def _scale_axis(tensor: np.ndarray, axis: int, factors: Sequence[Cyclotomic]) -> np.ndarray:
    out = np.moveaxis(tensor, axis, 0).copy()
    for k, f in enumerate(factors):
        out[k] = out[k] * f
    return np.moveaxis(out, 0, axis)


def gauge_transformed(
    cat: Fusion2CatData, rescaling: BasisRescaling, compensate: bool = True
) -> Fusion2CatData:
    """The same category presented in rescaled bases."""
    suffix = "gauged" if compensate else "rescaled-10j"
    return replace(
        cat,
        local=GaugedLocalData(cat, rescaling, compensate),
        name=f"{cat.name}~{suffix}",
        provenance=None,
    )
